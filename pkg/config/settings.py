"""
BinaryInvolutions 二元型对合计算库 - 配置管理

从环境变量加载系统配置
"""
import os
from dotenv import load_dotenv

# 加载环境变量
load_dotenv()


class Settings:
    """系统配置类"""

    # ==================== 验证配置 ====================
    SYMBOLIC_MAX_D: int = int(os.getenv('SYMBOLIC_MAX_D', '6'))
    VERIFY_WORKERS: int = int(os.getenv('VERIFY_WORKERS', '1'))
    DEFAULT_VERIFY_METHOD: str = os.getenv('DEFAULT_VERIFY_METHOD', 'fast')

    # ==================== 系数缓存配置 ====================
    USE_COEFFICIENT_CACHE: bool = os.getenv('USE_COEFFICIENT_CACHE', 'false').lower() == 'true'
    CACHE_DIR: str = os.getenv('CACHE_DIR', '.cache')

    # ==================== 日志配置 ====================
    LOG_LEVEL: str = os.getenv('LOG_LEVEL', 'INFO')
    LOG_FILE: str = os.getenv('LOG_FILE', 'logs/app.log')

    @classmethod
    def validate(cls) -> tuple[bool, list[str]]:
        """
        验证配置取值

        Returns:
            (是否有效, 不合法的配置项列表)
        """
        invalid = []

        if cls.SYMBOLIC_MAX_D < 0:
            invalid.append('SYMBOLIC_MAX_D')
        if cls.VERIFY_WORKERS < 1:
            invalid.append('VERIFY_WORKERS')
        if cls.DEFAULT_VERIFY_METHOD not in ('fast', 'symbolic', 'both'):
            invalid.append('DEFAULT_VERIFY_METHOD')
        if cls.LOG_LEVEL.upper() not in ('TRACE', 'DEBUG', 'INFO', 'SUCCESS', 'WARNING', 'ERROR', 'CRITICAL'):
            invalid.append('LOG_LEVEL')

        return len(invalid) == 0, invalid

    def __repr__(self) -> str:
        """配置信息摘要"""
        return (
            f"Settings(\n"
            f"  SYMBOLIC_MAX_D={self.SYMBOLIC_MAX_D},\n"
            f"  VERIFY_WORKERS={self.VERIFY_WORKERS},\n"
            f"  USE_COEFFICIENT_CACHE={self.USE_COEFFICIENT_CACHE},\n"
            f"  LOG_LEVEL={self.LOG_LEVEL}\n"
            f")"
        )
