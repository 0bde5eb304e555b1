"""
BinaryInvolutions 二元型对合计算库 - 测试夹具
"""
import random

import pytest

from config.settings import Settings
from data.cache import CoefficientCache


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def coefficient_cache(tmp_path):
    return CoefficientCache(str(tmp_path / 'cache'))


@pytest.fixture
def settings(monkeypatch, tmp_path):
    """与环境变量无关的配置"""
    monkeypatch.setattr(Settings, 'SYMBOLIC_MAX_D', 6)
    monkeypatch.setattr(Settings, 'VERIFY_WORKERS', 1)
    monkeypatch.setattr(Settings, 'DEFAULT_VERIFY_METHOD', 'fast')
    monkeypatch.setattr(Settings, 'USE_COEFFICIENT_CACHE', False)
    monkeypatch.setattr(Settings, 'CACHE_DIR', str(tmp_path / 'cache'))
    monkeypatch.setattr(Settings, 'LOG_LEVEL', 'INFO')
    monkeypatch.setattr(Settings, 'LOG_FILE', '')
    return Settings()
