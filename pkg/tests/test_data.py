"""
BinaryInvolutions 二元型对合计算库 - 数据与配置层测试
"""
import json
from fractions import Fraction

import pytest

from config.settings import Settings
from data.cache import CoefficientCache
from data.inputs import load_form, load_forms, load_involutor, load_signs
from forms.binary_form import BinaryForm
from involution.involutor import geometric_involutor
from ring.errors import UsageError, ValidationError


# ==================== 系数缓存 ====================

def test_cache_store_and_load(coefficient_cache):
    table = {(0, 0, 2): Fraction(-25, 20328), (0, 1, 2): Fraction(5, 6468), (1, 1, 0): Fraction(3)}
    assert coefficient_cache.load_alpha(6) is None
    coefficient_cache.store_alpha(6, table)
    assert coefficient_cache.load_alpha(6) == table


def test_cache_file_is_sorted(coefficient_cache):
    coefficient_cache.store_alpha(2, {(1, 1, 0): Fraction(1), (0, 0, 0): Fraction(1, 2)})
    payload = json.loads((coefficient_cache.cache_dir / 'alpha_d2.json').read_text(encoding='utf-8'))
    assert payload == {'d': 2, 'alpha': [[0, 0, 0, '1/2'], [1, 1, 0, '1']]}


def test_corrupt_cache_is_ignored(coefficient_cache):
    (coefficient_cache.cache_dir / 'alpha_d4.json').write_text('{not json', encoding='utf-8')
    assert coefficient_cache.load_alpha(4) is None


def test_cache_with_wrong_order_is_ignored(coefficient_cache):
    coefficient_cache.store_alpha(3, {(0, 0, 0): Fraction(1)})
    (coefficient_cache.cache_dir / 'alpha_d3.json').rename(coefficient_cache.cache_dir / 'alpha_d5.json')
    assert coefficient_cache.load_alpha(5) is None


def test_cache_clear(tmp_path):
    cache = CoefficientCache(str(tmp_path / 'nested' / 'cache'))
    cache.store_alpha(1, {(0, 0, 0): Fraction(1)})
    cache.clear()
    assert cache.load_alpha(1) is None
    assert list(cache.cache_dir.iterdir()) == []


# ==================== 输入载荷 ====================

QUADRATIC_JSON = '{"order": 2, "cayley": ["0", "1/2", "0"]}'


def test_load_form_inline():
    assert load_form(inline=QUADRATIC_JSON) == BinaryForm((0, 1, 0))


def test_load_form_from_file(tmp_path):
    path = tmp_path / 'q.json'
    path.write_text(QUADRATIC_JSON, encoding='utf-8')
    assert load_form(path=str(path), name='q') == BinaryForm((0, 1, 0))


def test_load_form_needs_exactly_one_source(tmp_path):
    with pytest.raises(UsageError):
        load_form()
    with pytest.raises(UsageError):
        load_form(path=str(tmp_path / 'q.json'), inline=QUADRATIC_JSON)


@pytest.mark.parametrize('text', ['{"order": 2', '[1, 2]', '{"order": 1, "cayley": ["1"]}'])
def test_load_form_rejects_bad_payloads(text):
    with pytest.raises(ValidationError):
        load_form(inline=text)


def test_load_form_missing_file(tmp_path):
    with pytest.raises(ValidationError):
        load_form(path=str(tmp_path / 'missing.json'))


def test_load_forms():
    forms = load_forms('[{"order": 1, "cayley": ["1", "0"]}, {"order": 1, "cayley": ["1", "-2"]}]')
    assert forms == [BinaryForm((1, 0)), BinaryForm((1, -2))]
    with pytest.raises(ValidationError):
        load_forms(QUADRATIC_JSON)


def test_load_signs_and_involutor():
    assert str(load_signs('+-+-+')) == '+-+-+'
    assert load_involutor(4, '16, 24/7, 1/5') == geometric_involutor(4)
    with pytest.raises(ValidationError):
        load_involutor(4, '16,x,1')


# ==================== 配置 ====================

def test_default_settings_are_valid(settings):
    assert settings.validate() == (True, [])


@pytest.mark.parametrize('name, value', [
    ('SYMBOLIC_MAX_D', -1),
    ('VERIFY_WORKERS', 0),
    ('DEFAULT_VERIFY_METHOD', 'numeric'),
    ('LOG_LEVEL', 'LOUD'),
])
def test_invalid_settings_are_reported(settings, monkeypatch, name, value):
    monkeypatch.setattr(Settings, name, value)
    valid, invalid = Settings.validate()
    assert not valid
    assert invalid == [name]
