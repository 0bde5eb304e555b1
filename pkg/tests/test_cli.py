"""
BinaryInvolutions 二元型对合计算库 - 命令行测试
"""
import json

import pytest

from main import run


def invoke(capsys, settings, *argv):
    code = run(list(argv), settings)
    return code, capsys.readouterr().out


def invoke_json(capsys, settings, *argv):
    code, out = invoke(capsys, settings, *argv)
    assert code == 0, out
    return json.loads(out)


def test_geometric(capsys, settings):
    assert invoke_json(capsys, settings, 'geometric', '-d', '4') == {'z': ['16', '24/7', '1/5']}


def test_z_of_sign(capsys, settings):
    result = invoke_json(capsys, settings, 'z-of-sign', '-s', '+-+-+')
    assert result == {'sign': '+-+-+', 'z': ['16', '24/7', '1/5']}


def test_involutors_with_fast_verification(capsys, settings):
    rows = invoke_json(capsys, settings, 'involutors', '-d', '2', '--verify', 'fast')
    assert len(rows) == 4
    assert all(row['verified'] is True for row in rows)


def test_involutors_default_to_configured_method(capsys, settings):
    rows = invoke_json(capsys, settings, 'involutors', '-d', '4')
    assert len(rows) == 8
    assert rows[0] == {'sign': '+++++', 'z': ['0', '0', '1'], 'verified': True}
    assert all(row['verified'] is True for row in rows)


def test_involutors_default_follows_settings(capsys, settings, monkeypatch):
    monkeypatch.setattr(type(settings), 'DEFAULT_VERIFY_METHOD', 'symbolic')
    monkeypatch.setattr(type(settings), 'SYMBOLIC_MAX_D', 2)
    assert invoke(capsys, settings, 'involutors', '-d', '4')[0] == 1
    rows = invoke_json(capsys, settings, 'involutors', '-d', '2')
    assert all(row['verified'] is True for row in rows)


def test_verify_modes(capsys, settings):
    result = invoke_json(capsys, settings, 'verify', '-d', '4', '--z', '16,24/7,1/5', '--method', 'both')
    assert result == {'z': ['16', '24/7', '1/5'], 'method': 'both', 'verified': True}
    result = invoke_json(capsys, settings, 'verify', '-d', '4', '--z', '1,0,0')
    assert result['method'] == 'fast'
    assert result['verified'] is False


def test_symbolic_verification_limit(capsys, settings):
    code, _ = invoke(capsys, settings, 'verify', '-s', '+-+-+-+-+', '--method', 'symbolic')
    assert code == 1


def test_transvect_inline_forms(capsys, settings):
    quadratic = '{"order": 2, "cayley": ["1", "0", "1"]}'
    result = invoke_json(capsys, settings, 'transvect', '--a-json', quadratic, '--b-json', quadratic, '-r', '2')
    assert result == {'transvectant': {'order': 0, 'cayley': ['2']}}


def test_transvect_form_file(capsys, settings, tmp_path):
    path = tmp_path / 'line.json'
    path.write_text('{"order": 1, "cayley": ["1", "0"]}', encoding='utf-8')
    result = invoke_json(capsys, settings, 'transvect', '--a', str(path), '--b-json',
                         '{"order": 1, "cayley": ["0", "1"]}', '-r', '1')
    assert result == {'transvectant': {'order': 0, 'cayley': ['1']}}


@pytest.mark.parametrize('exponent', ['"x"', '1.5', 'true', '-1'])
def test_transvect_rejects_bad_polynomial_exponents(capsys, settings, exponent):
    coefficient = '{"variables": ["q0"], "terms": [{"exponents": [%s], "coeff": "1"}]}' % exponent
    form = '{"cayley": [%s, "0"]}' % coefficient
    code, out = invoke(capsys, settings, 'transvect', '--a-json', form, '--b-json', form, '-r', '1')
    assert code == 1
    assert out == ''


def test_apply_sigma_at_conic_point(capsys, settings):
    q = '{"order": 2, "cayley": ["0", "1/2", "0"]}'
    f = '{"order": 4, "cayley": ["1", "2", "3", "4", "5"]}'
    result = invoke_json(capsys, settings, 'apply-sigma', '--q-json', q, '--f-json', f, '-s', '+---+')
    assert result == {'sigma': {'order': 4, 'cayley': ['1', '-2', '-3', '-4', '5']}}


def test_canonical(capsys, settings):
    f = '{"order": 4, "cayley": ["1", "0", "0", "0", "1"]}'
    result = invoke_json(capsys, settings, 'canonical', '-s', '+---+', '--f-json', f)
    assert result['canonical'] is True


def test_omega_single_term(capsys, settings):
    result = invoke_json(capsys, settings, 'omega', '-a', '5', '-b', '6', '-r', '2', '-s', '4', '-d', '5', '-t', '9')
    assert result == {'omega': {'9': '-95/9438'}}


def test_recouple(capsys, settings):
    result = invoke_json(capsys, settings, 'recouple', '-a', '1', '-b', '1', '-c', '1', '-r', '1', '-s', '0')
    assert result['theta']['0'] == '1'
    assert result['theta']['1'] == '-1/2'


def test_sixj_and_tetra(capsys, settings):
    assert invoke_json(capsys, settings, 'sixj', '1', '1', '1', '0', '1', '1')['simplified'] == '-1/3'
    assert invoke_json(capsys, settings, 'tetra', '0', '0', '0', '0', '0', '0') == {'tetra': '1'}


@pytest.mark.parametrize('command', ['sixj', 'tetra'])
def test_bad_triads_exit_with_validation_error(capsys, settings, command):
    code, out = invoke(capsys, settings, command, '1/2', '1', '1', '1', '1', '1')
    assert code == 1
    assert out == ''


def test_covariant_and_curve(capsys, settings):
    sextic = '{"order": 6, "cayley": ["1", "0", "0", "0", "0", "0", "1"]}'
    result = invoke_json(capsys, settings, 'covariant', 'lambda', '--f-json', sextic)
    assert result['covariant']['order'] == 2
    curve = invoke_json(capsys, settings, 'curve', '--f-json', sextic)
    assert curve['curve']['variables'] == ['q0', 'q1', 'q2']


def test_centres(capsys, settings):
    quartic = '{"order": 4, "cayley": ["1", "0", "0", "0", "1"]}'
    result = invoke_json(capsys, settings, 'centres', '-s', '+-+-+', '--f-json', quartic)
    assert isinstance(result, list)
    assert result
    assert all(generator['variables'] == ['q0', 'q1', 'q2'] for generator in result)


def test_centres_reject_quadratic_variable_names(capsys, settings):
    coefficient = '{"variables": ["q0"], "terms": [{"exponents": [1], "coeff": "1"}]}'
    quartic = '{"order": 4, "cayley": [%s, "0", "0", "0", "1"]}' % coefficient
    code, out = invoke(capsys, settings, 'centres', '-s', '+-+-+', '--f-json', quartic)
    assert code == 1
    assert out == ''


def test_sys_output(capsys, settings):
    result = invoke_json(capsys, settings, 'sys', '-d', '6')
    assert sorted(result['equations']) == ['2', '4', '6']


@pytest.mark.parametrize('argv', [
    ['z-of-sign', '-s', '+--+-'],
    ['frobnicate'],
    ['geometric'],
    ['transvect', '--a-json', '{}', '--b-json', '{}', '-r', '0'],
    ['canonical', '-s', '+-+'],
    ['verify'],
])
def test_invalid_input_exits_one(capsys, settings, argv):
    code, out = invoke(capsys, settings, *argv)
    assert code == 1
    assert out == ''


def test_invalid_settings_exit_one(capsys, settings, monkeypatch):
    monkeypatch.setattr(type(settings), 'VERIFY_WORKERS', 0)
    code, _ = invoke(capsys, settings, 'geometric', '-d', '2')
    assert code == 1


def test_help_exits_zero(capsys, settings):
    code, out = invoke(capsys, settings, '--help')
    assert code == 0
    assert 'paper-check' in out


def test_repeated_runs_are_byte_identical(capsys, settings):
    _, first = invoke(capsys, settings, 'omega', '-a', '5', '-b', '6', '-r', '2', '-s', '4', '-d', '5')
    _, second = invoke(capsys, settings, 'omega', '-a', '5', '-b', '6', '-r', '2', '-s', '4', '-d', '5')
    assert first == second
    assert first.endswith('\n')


@pytest.mark.slow
def test_paper_check(capsys, settings):
    result = invoke_json(capsys, settings, 'paper-check')
    assert result['passed'] is True
