# BinaryInvolutions 二元型对合计算库 - 配置模块

from .settings import Settings
from .golden import GoldenCatalog, GoldenValue

__all__ = ['Settings', 'GoldenCatalog', 'GoldenValue']
