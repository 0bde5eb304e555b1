"""
BinaryInvolutions 二元型对合计算库 - 超越运算

(A,B)_r = (m-r)!(n-r)!/(m!n!) Σ_i (-1)^i C(r,i) ∂^rA/∂x1^{r-i}∂x2^i · ∂^rB/∂x1^i∂x2^{r-i}
"""
from fractions import Fraction
from typing import Any, List

from ring.errors import RangeError
from ring.factorial import binomial, factorial
from forms.binary_form import BinaryForm


def transvectant(a: BinaryForm, b: BinaryForm, r: int) -> BinaryForm:
    """
    第 r 个超越

    Args:
        a: 阶数为 m 的二元型
        b: 阶数为 n 的二元型
        r: 指标，0 <= r <= min(m, n)

    Returns:
        阶数为 m + n - 2r 的二元型
    """
    m, n = a.order, b.order
    if not isinstance(r, int) or isinstance(r, bool) or r < 0 or r > min(m, n):
        raise RangeError(f"超越指标 r={r} 超出 0..{min(m, n)}")

    coeffs: List[Any] = [Fraction(0)] * (m + n - 2 * r + 1)
    for i in range(r + 1):
        weight = binomial(r, i) * (-1 if i % 2 else 1)
        term = a.derivative(r - i, i).product(b.derivative(i, r - i))
        for k, c in enumerate(term.coeffs):
            if c:
                coeffs[k] = coeffs[k] + c * weight

    prefactor = Fraction(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n))
    return BinaryForm(tuple(c * prefactor if c else c for c in coeffs))


def delta(quadratic: BinaryForm) -> Any:
    """
    二次型的判别式 Δ_Q = 4(q1^2 - q0 q2)，q_i 为 Cayley 系数

    Args:
        quadratic: 阶数为 2 的二元型

    Returns:
        系数环元素
    """
    if quadratic.order != 2:
        raise RangeError(f"Δ 只对二次型定义，收到阶数 {quadratic.order}")
    q0, q1, q2 = quadratic.cayley()
    return (q1 * q1 - q0 * q2) * 4
