"""
BinaryInvolutions 二元型对合计算库 - 重耦系数层测试
"""
import itertools
import random
from fractions import Fraction

import pytest
import sympy
from sympy.physics.wigner import wigner_6j

from forms.binary_form import BinaryForm
from forms.generic import generic_form, merge_variables, symbolic_pair
from forms.transvectant import transvectant
from involution.involutor import geometric_involutor
from recoupling.halfint import HalfInt, is_triad
from recoupling.omega import expand_compound, omega, t_window
from recoupling.sixj import (
    SixJLabels, racah_6j, tetra_cg, tetra_from_sixj, triangle_delta_sq,
)
from recoupling.sqrt_rational import SqrtRational, rational_sqrt
from recoupling.theta import theta_coefficients
from recoupling.transition import transition_G, transition_matrix
from ring.errors import InternalCheckError, RangeError, TriadError, ValidationError
from ring.factorial import factorial_quotient
from tests.oracles import to_sympy_rational


def h(value):
    return HalfInt.parse(value)


def valid_labels(max_twice):
    """2j <= max_twice 且四个三元组都成立的全部标签"""
    for doubled in itertools.product(range(max_twice + 1), repeat=6):
        labels = SixJLabels(*(HalfInt(v) for v in doubled))
        if all(is_triad(*triad) for triad in labels.triads()):
            yield labels


# ==================== 半整数与根式 ====================

def test_halfint_parsing():
    assert HalfInt.parse('3/2').twice_value == 3
    assert HalfInt.parse(2).value == 2
    assert str(HalfInt(5)) == '5/2'
    with pytest.raises(ValidationError):
        HalfInt.parse('1/3')
    with pytest.raises(ValidationError):
        HalfInt(-1)


def test_triad_predicate():
    assert is_triad(h(1), h(1), h(0))
    assert is_triad(h('1/2'), h('1/2'), h(1))
    assert not is_triad(h('1/2'), h(1), h(1))
    assert not is_triad(h(1), h(1), h(3))


def test_sqrt_rational_products():
    root_two = SqrtRational(1, 2)
    assert (root_two * root_two).to_rational() == 2
    assert SqrtRational(3, Fraction(1, 4)).simplified() == SqrtRational(Fraction(3, 2))
    assert SqrtRational(0, 7).radicand == 1
    assert rational_sqrt(Fraction(9, 16)) == Fraction(3, 4)
    assert rational_sqrt(Fraction(2)) is None
    with pytest.raises(InternalCheckError):
        root_two.to_rational()
    with pytest.raises(ValidationError):
        SqrtRational(1, -1)


# ==================== Δ 与 6-j ====================

@pytest.mark.parametrize('labels, expected', [
    ((0, 0, 0), Fraction(1)),
    ((1, 1, 0), Fraction(1, 3)),
    (('1/2', '1/2', 1), Fraction(1, 6)),
])
def test_triangle_delta_sq(labels, expected):
    assert triangle_delta_sq(*(h(v) for v in labels)) == expected


def test_triangle_delta_rejects_non_triads():
    with pytest.raises(TriadError):
        triangle_delta_sq(h(1), h(1), h(3))


def test_sixj_trivial():
    assert racah_6j(0, 0, 0, 0, 0, 0) == 1


def test_sixj_with_zero_coupling():
    value = racah_6j(1, 1, 1, 0, 1, 1)
    assert value == Fraction(-1, 3)
    assert value.simplified().radicand == 1


def test_sixj_rejects_bad_triads():
    with pytest.raises(TriadError):
        racah_6j(1, 1, 1, 3, 1, 1)


def test_sixj_matches_sympy():
    checked = 0
    for labels in valid_labels(3):
        j1, j2, j3, j12, j23, J = (label.value for label in (
            labels.j1, labels.j2, labels.j3, labels.j12, labels.j23, labels.J))
        ours = racah_6j(labels.j1, labels.j2, labels.j3, labels.j12, labels.j23, labels.J)
        expected = wigner_6j(*(to_sympy_rational(v) for v in (j1, j2, j12, j3, J, j23)))
        assert sympy.simplify(expected ** 2 - to_sympy_rational(ours.square())) == 0
        assert sympy.sign(expected) == ours.sign()
        checked += 1
    assert checked > 100


# ==================== 四面体 ====================

def test_tetra_trivial():
    assert tetra_cg(0, 0, 0, 0, 0, 0) == 1


def test_tetra_rejects_bad_triads():
    with pytest.raises(TriadError):
        tetra_cg(1, 1, 1, 1, 1, 3)


def test_tetra_matches_normalised_sixj():
    checked = 0
    for labels in valid_labels(4):
        values = (labels.j1, labels.j2, labels.j3, labels.j12, labels.j23, labels.J)
        assert tetra_cg(*values) == tetra_from_sixj(*values)
        checked += 1
    assert checked > 200


def test_tetra_all_ones():
    assert tetra_cg(1, 1, 1, 1, 1, 1) == tetra_from_sixj(1, 1, 1, 1, 1, 1)


# ==================== θ ====================

def test_theta_trivial_indices():
    table = theta_coefficients(3, 2, 4, 0, 0)
    assert table.to_dict() == {'0': '1'}


def test_theta_small_case():
    table = theta_coefficients(1, 1, 1, 1, 0)
    assert table.get(0) == 1
    assert table.get(1) == Fraction(-1, 2)
    assert table.get(2) == 0


@pytest.mark.parametrize('args', [(1, 1, 1, 2, 0), (1, 2, 2, 1, 3), (-1, 0, 0, 0, 0)])
def test_theta_preconditions(args):
    with pytest.raises(RangeError):
        theta_coefficients(*args)


def recoupling_cases():
    cases = []
    for a, b, c in itertools.product(range(1, 4), repeat=3):
        for r in range(min(b, c) + 1):
            for s in range(min(a, b + c - 2 * r) + 1):
                cases.append((a, b, c, r, s))
    return cases + [(2, 2, 2, 1, 1), (4, 4, 4, 2, 2), (6, 5, 4, 3, 2), (5, 6, 3, 2, 4)]


def test_recoupling_case_count():
    assert len(recoupling_cases()) >= 50


@pytest.mark.parametrize('a, b, c, r, s', recoupling_cases())
def test_recoupling_expansion_matches_direct(a, b, c, r, s):
    variables = merge_variables(*([f"{p}{i}" for i in range(n + 1)] for p, n in (('a', a), ('b', b), ('c', c))))
    A = generic_form(a, 'a', variables)
    B = generic_form(b, 'b', variables)
    C = generic_form(c, 'c', variables)
    left = transvectant(A, transvectant(B, C, r), s)
    right = BinaryForm.zero(left.order)
    for k, theta in theta_coefficients(a, b, c, r, s).coefficients.items():
        right = right + transvectant(transvectant(A, B, k), C, r + s - k).scale(theta)
    assert (left - right).is_zero()


# ==================== ω ====================

def test_omega_worked_example_magnitudes():
    expansion = expand_compound(5, 6, 2, 4, 5).as_dict()
    assert {t: abs(v) for t, v in expansion.items()} == {
        5: Fraction(95, 286286), 7: Fraction(575, 1123122), 9: Fraction(95, 9438)}


def test_omega_worked_example_signs():
    assert omega(5, 6, 2, 4, 5, 5) == Fraction(-95, 286286)
    assert omega(5, 6, 2, 4, 7, 5) == Fraction(575, 1123122)
    assert omega(5, 6, 2, 4, 9, 5) == Fraction(-95, 9438)


def test_omega_worked_example_reproduces_direct_transvectant():
    quadratic, form = symbolic_pair(5)
    expansion = expand_compound(5, 6, 2, 4, 5)
    direct = transvectant(quadratic ** 5, transvectant(quadratic ** 6, form, 2), 4)
    assert (expansion.evaluate(quadratic, form) - direct).is_zero()


def test_omega_outside_window_is_zero():
    assert omega(5, 6, 2, 4, 6, 5) == 0
    assert omega(5, 6, 2, 4, 11, 5) == 0


def test_trivial_compound_expansion():
    assert list(t_window(0, 0, 0, 0, 0)) == [0]
    assert expand_compound(0, 0, 0, 0, 0).as_dict() == {0: 1}


def test_omega_preconditions():
    with pytest.raises(RangeError):
        omega(1, 1, 3, 0, 0, 2)
    with pytest.raises(RangeError):
        expand_compound(1, 1, 0, 3, 2)


def compound_cases():
    cases = []
    for d in range(1, 5):
        for a, b in itertools.product(range(1, 3), repeat=2):
            for r in range(min(d, 2 * b) + 1):
                for s in range(min(2 * a, 2 * b + d - 2 * r) + 1):
                    cases.append((a, b, r, s, d))
    cases += [(1, 1, 2, 0, 2), (3, 4, 5, 4, 6), (4, 3, 2, 6, 5), (4, 4, 6, 2, 6)]
    return cases


def test_compound_case_count():
    assert len(compound_cases()) >= 30


@pytest.mark.parametrize('a, b, r, s, d', compound_cases())
def test_compound_expansion_matches_direct(a, b, r, s, d):
    quadratic, form = symbolic_pair(d)
    direct = transvectant(quadratic ** a, transvectant(quadratic ** b, form, r), s)
    assert (expand_compound(a, b, r, s, d).evaluate(quadratic, form) - direct).is_zero()


def sampled_compound_cases(count=24, seed=1331):
    """d <= 6、a,b <= 4 全范围内的固定随机样本，每个 d 至少一例，并含 a = b = 4, d = 6"""
    rng = random.Random(seed)
    everything = [
        (a, b, r, s, d)
        for d in range(7) for a in range(1, 5) for b in range(1, 5)
        for r in range(min(d, 2 * b) + 1) for s in range(min(2 * a, 2 * b + d - 2 * r) + 1)
    ]
    by_order = {d: [case for case in everything if case[-1] == d] for d in range(7)}
    picked = [rng.choice(by_order[d]) for d in range(7)]
    picked.append(rng.choice([case for case in by_order[6] if case[0] == case[1] == 4]))
    picked += rng.sample(everything, count - len(picked))
    return sorted(set(picked), key=lambda case: (case[-1], case))


def test_sampled_compound_cases_cover_every_order():
    cases = sampled_compound_cases()
    assert {case[-1] for case in cases} == set(range(7))
    assert max(max(case[0], case[1]) for case in cases) == 4


@pytest.mark.slow
@pytest.mark.parametrize('a, b, r, s, d', sampled_compound_cases())
def test_compound_expansion_over_full_range(a, b, r, s, d):
    quadratic, form = symbolic_pair(d)
    direct = transvectant(quadratic ** a, transvectant(quadratic ** b, form, r), s)
    assert (expand_compound(a, b, r, s, d).evaluate(quadratic, form) - direct).is_zero()


def test_norm_coefficients_are_positive():
    for d in range(13):
        for i in range(d // 2 + 1):
            k = d - 2 * i
            assert omega(k, k, k, k, 0, d) > 0


# ==================== G ====================

def test_transition_examples():
    assert 2 ** 4 * transition_G(0, 0, 4) == 16
    assert 2 ** 4 * transition_G(0, 2, 4) == Fraction(1, 5)
    assert transition_G(2, 1, 4) == 0
    with pytest.raises(RangeError):
        transition_G(0, 3, 4)


def test_transition_diagonal_matches_factorials():
    for d in range(1, 10):
        for i in range(d // 2 + 1):
            expected = factorial_quotient([d - 2 * i, 2 * d - 4 * i + 1, d - 2 * i],
                                          [d - 2 * i, d - 2 * i, 2 * d - 4 * i + 1, 0])
            assert transition_G(i, i, d) == expected


def test_geometric_involutor_is_first_row():
    for d in range(1, 9):
        row = transition_matrix(d)[0]
        assert list(geometric_involutor(d).z) == [2 ** d * value for value in row]


def test_transition_matrix_is_upper_triangular():
    matrix = transition_matrix(6)
    assert len(matrix) == 4
    assert all(matrix[i][j] == 0 for i in range(4) for j in range(i))
