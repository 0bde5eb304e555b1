"""
BinaryInvolutions 二元型对合计算库 - 系数缓存

把 SYS(d) 的 α 表以 JSON 文件持久化，避免重复计算 ω。精确系数不会过期。
"""
import json
from fractions import Fraction
from pathlib import Path
from typing import Dict, Mapping, Optional, Tuple

from loguru import logger

from ring.errors import ValidationError
from ring.rational import format_rational, to_rational

AlphaTable = Dict[Tuple[int, int, int], Fraction]


class CoefficientCache:
    """α 表的文件缓存"""

    def __init__(self, cache_dir: str = '.cache'):
        """
        初始化缓存

        Args:
            cache_dir: 缓存目录
        """
        self.cache_dir = Path(cache_dir)
        self.cache_dir.mkdir(parents=True, exist_ok=True)

    def _alpha_file(self, d: int) -> Path:
        return self.cache_dir / f"alpha_d{d}.json"

    def load_alpha(self, d: int) -> Optional[AlphaTable]:
        """
        读取 d 次的 α 表

        Args:
            d: 阶数

        Returns:
            (i, j, t) -> α，不存在或损坏返回 None
        """
        cache_file = self._alpha_file(d)
        if not cache_file.exists():
            return None

        try:
            with open(cache_file, 'r', encoding='utf-8') as f:
                payload = json.load(f)
            if payload.get('d') != d:
                raise ValidationError(f"缓存文件记录的 d={payload.get('d')} 与请求的 d={d} 不符")
            table = {(i, j, t): to_rational(value) for i, j, t, value in payload['alpha']}
            logger.debug(f"α 表缓存命中: d={d}（{len(table)} 项）")
            return table

        except Exception as e:
            logger.error(f"读取 α 表缓存失败: d={d}, 错误: {e}")
            return None

    def store_alpha(self, d: int, table: Mapping[Tuple[int, int, int], Fraction]) -> None:
        """写入 d 次的 α 表，键排序以保证文件内容确定"""
        payload = {
            'd': d,
            'alpha': [[i, j, t, format_rational(value)] for (i, j, t), value in sorted(table.items())],
        }
        try:
            with open(self._alpha_file(d), 'w', encoding='utf-8') as f:
                json.dump(payload, f, ensure_ascii=False, sort_keys=True)
            logger.debug(f"α 表已缓存: d={d}")
        except OSError as e:
            logger.error(f"保存 α 表缓存失败: d={d}, 错误: {e}")

    def clear(self) -> None:
        """清空所有 α 表"""
        for file in self.cache_dir.glob('alpha_d*.json'):
            file.unlink()
        logger.info("α 表缓存已清空")
