"""
BinaryInvolutions 二元型对合计算库 - 中心轨迹协变量

四次型: β = (Q^2,F)_3, α = 16(Q^3,F)_4 + (24/5)Δ(Q,F)_2
六次型: λ = (Q^3,F)_5, μ = (Q^4,F)_6 + (2/7)Δ(Q^2,F)_4
以及四次型中心二次曲线的判别式与六次型的平面三次曲线。
"""
from fractions import Fraction
from typing import Any, List, Sequence, Union

from ring.errors import InternalCheckError, RangeError
from ring.multipoly import MultiPoly
from forms.binary_form import BinaryForm
from forms.covariants import quartic_covariants
from forms.generic import QUADRATIC_VARIABLES, quadratic_over
from forms.transvectant import delta, transvectant

# det((Q^2,F)_4 的对称矩阵) = CATALECTICANT_CONSTANT · B_F
CATALECTICANT_CONSTANT = Fraction(2, 3)


def _require_order(form: BinaryForm, order: int) -> None:
    if form.order != order:
        raise RangeError(f"需要 {order} 次型，收到阶数 {form.order}")


def beta_covariant(form: BinaryForm) -> BinaryForm:
    """β = (Q^2, F)_3"""
    _require_order(form, 4)
    quadratic = quadratic_over(form)
    return transvectant(quadratic ** 2, form, 3)


def alpha_covariant(form: BinaryForm) -> BinaryForm:
    """α = 16(Q^3,F)_4 + (24/5)Δ(Q,F)_2"""
    _require_order(form, 4)
    quadratic = quadratic_over(form)
    return transvectant(quadratic ** 3, form, 4).scale(16) \
        + transvectant(quadratic, form, 2).scale(Fraction(24, 5) * delta(quadratic))


def lambda_covariant(form: BinaryForm) -> BinaryForm:
    """λ = (Q^3, F)_5"""
    _require_order(form, 6)
    quadratic = quadratic_over(form)
    return transvectant(quadratic ** 3, form, 5)


def mu_covariant(form: BinaryForm) -> BinaryForm:
    """μ = (Q^4,F)_6 + (2/7)Δ(Q^2,F)_4"""
    _require_order(form, 6)
    quadratic = quadratic_over(form)
    return transvectant(quadratic ** 4, form, 6) \
        + transvectant(quadratic ** 2, form, 4).scale(Fraction(2, 7) * delta(quadratic))


def _as_poly(value: Any) -> MultiPoly:
    return value if isinstance(value, MultiPoly) else MultiPoly.constant(QUADRATIC_VARIABLES, value)


def quartic_centre_quadric(form: BinaryForm) -> MultiPoly:
    """(Q^2, F)_4，q0,q1,q2 的二次式"""
    _require_order(form, 4)
    quadratic = quadratic_over(form)
    return _as_poly(transvectant(quadratic ** 2, form, 4).coeffs[0])


def ternary_quadratic_matrix(poly: MultiPoly, names: Sequence[str] = QUADRATIC_VARIABLES) -> List[List[MultiPoly]]:
    """三元二次式 q^T M q 的对称矩阵，非对角元取交叉项系数的一半"""
    groups = poly.coefficients_in(names)
    zero = MultiPoly.constant(poly.variables, 0)
    matrix = [[zero] * 3 for _ in range(3)]
    for exponents, coeff in groups.items():
        if sum(exponents) != 2:
            raise RangeError(f"不是二次齐次式: {poly}")
        indices = [k for k, e in enumerate(exponents) for _ in range(e)]
        i, j = indices
        if i == j:
            matrix[i][i] = coeff
        else:
            matrix[i][j] = coeff / 2
            matrix[j][i] = coeff / 2
    return matrix


def symmetric_determinant(matrix: List[List[Any]]) -> Any:
    """3x3 行列式（按第一行展开）"""
    (a, b, c), (d, e, f), (g, h, i) = matrix
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def quartic_centre_discriminant(form: BinaryForm) -> Union[Fraction, MultiPoly]:
    """
    中心二次曲线 (Q^2,F)_4 = 0 的判别式，并核对它等于 c·B_F

    Args:
        form: 四次型（有理或符号系数）

    Returns:
        有理系数时返回 Fraction，否则返回 MultiPoly
    """
    _require_order(form, 4)
    quadric = quartic_centre_quadric(form)
    determinant = symmetric_determinant(ternary_quadratic_matrix(quadric))
    _, b_invariant = quartic_covariants(form)
    if determinant != CATALECTICANT_CONSTANT * b_invariant:
        raise InternalCheckError(f"判别式 {determinant} 不等于 {CATALECTICANT_CONSTANT}·B_F = {b_invariant}")
    if determinant.is_constant():
        return determinant.constant_value()
    return determinant


def sextic_cubic_curve(form: BinaryForm) -> MultiPoly:
    """六次型的平面三次曲线 (Q^3, F)_6"""
    _require_order(form, 6)
    quadratic = quadratic_over(form)
    return _as_poly(transvectant(quadratic ** 3, form, 6).coeffs[0])
