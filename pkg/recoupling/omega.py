"""
BinaryInvolutions 二元型对合计算库 - ω 系数

(Q^a,(Q^b,F)_r)_s = Σ_t ω(a,b;r,s;t) Δ^{(a+b-t)/2} (Q^t,F)_{r+s-a-b+t}，F 的阶数为 d
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from ring.errors import RangeError
from ring.factorial import factorial, factorial_quotient
from ring.rational import format_rational, minus_one_pow
from forms.binary_form import BinaryForm
from forms.transvectant import delta, transvectant


def _validate(a: int, b: int, r: int, s: int, d: int) -> None:
    for name, value in (('a', a), ('b', b), ('r', r), ('s', s), ('d', d)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise RangeError(f"{name}={value!r} 必须是非负整数")
    if r > min(d, 2 * b):
        raise RangeError(f"r={r} 超过 min(d, 2b)={min(d, 2 * b)}")
    if s > min(2 * a, 2 * b + d - 2 * r):
        raise RangeError(f"s={s} 超过 min(2a, 2b+d-2r)={min(2 * a, 2 * b + d - 2 * r)}")


def t_window(a: int, b: int, r: int, s: int, d: int) -> range:
    """max(|a+b-r-s|, |a-b|) <= t <= min(a+b+d-r-s, a+b)，且 t ≡ a+b (mod 2)"""
    low = max(abs(a + b - r - s), abs(a - b))
    high = min(a + b + d - r - s, a + b)
    if (low - a - b) % 2:
        low += 1
    return range(low, high + 1, 2)


def omega_p1(a: int, b: int, r: int, s: int, d: int) -> Fraction:
    return factorial_quotient(
        [a, b, r, s, d - r, 2 * b - r, 2 * a - s, 2 * b + d - 2 * r - s],
        [2 * a, 2 * b, 2 * b + d - 2 * r],
    )


def omega_p2(a: int, b: int, r: int, s: int, t: int, d: int) -> Fraction:
    return factorial_quotient(
        [2 * t + 1, (a + b + t) // 2, a + b - t, a - b + t, b - a + t],
        [t, a + b + t + 1, a + b + d - r - s + t + 1,
         (a + b - t) // 2, (a - b + t) // 2, (b - a + t) // 2],
    )


def omega_p3(a: int, b: int, r: int, s: int, t: int, d: int) -> Fraction:
    # z 取遍所有阶乘参数非负的整数
    lower = [a + b + t, 2 * b + d - r, 2 * a + 2 * b + d - 2 * r - s, a + b + d - r - s + t]
    upper = [a + b + d - r + t, 2 * a + 2 * b + d - r - s, a + 3 * b + d - 2 * r - s + t]
    total = Fraction(0)
    for z in range(max(lower), min(upper) + 1):
        denominator = 1
        for l in lower:
            denominator *= factorial(z - l)
        for u in upper:
            denominator *= factorial(u - z)
        total += Fraction(minus_one_pow(z) * factorial(z + 1), denominator)
    return total


@lru_cache(maxsize=None)
def omega(a: int, b: int, r: int, s: int, t: int, d: int) -> Fraction:
    """
    ω(a,b;r,s;t)，F 的阶数为 d

    Args:
        a, b: Q 的幂次
        r, s: 内外两层超越指标
        t: 展开项的下标
        d: F 的阶数

    Returns:
        精确有理数；t 不在窗口内时为 0
    """
    _validate(a, b, r, s, d)
    if t not in t_window(a, b, r, s, d):
        return Fraction(0)
    sign = minus_one_pow(d + r + s + (a + b - t) // 2)
    return sign * omega_p1(a, b, r, s, d) * omega_p2(a, b, r, s, t, d) * omega_p3(a, b, r, s, t, d)


@dataclass(frozen=True)
class ExpansionTerm:
    """展开中的一项 ω Δ^delta_power (Q^t, F)_index"""
    t: int
    coefficient: Fraction
    delta_power: int
    index: int


@dataclass(frozen=True)
class CompoundExpansion:
    """(Q^a,(Q^b,F)_r)_s 的完整展开"""
    a: int
    b: int
    r: int
    s: int
    d: int
    terms: Tuple[ExpansionTerm, ...]

    def as_dict(self) -> Dict[int, Fraction]:
        return {term.t: term.coefficient for term in self.terms}

    def to_dict(self) -> Dict[str, str]:
        return {str(term.t): format_rational(term.coefficient) for term in self.terms}

    def evaluate(self, quadratic: BinaryForm, form: BinaryForm) -> BinaryForm:
        """用展开式计算 (Q^a,(Q^b,F)_r)_s"""
        if form.order != self.d:
            raise RangeError(f"F 的阶数 {form.order} 与 d={self.d} 不符")
        discriminant = delta(quadratic)
        result = BinaryForm.zero(2 * self.a + 2 * self.b + self.d - 2 * self.r - 2 * self.s)
        for term in self.terms:
            piece = transvectant(quadratic ** term.t, form, term.index)
            result = result + piece.scale(term.coefficient * discriminant ** term.delta_power)
        return result


def expand_compound(a: int, b: int, r: int, s: int, d: int) -> CompoundExpansion:
    """所有非零 ω(a,b;r,s;t)，附带 Δ 的幂次与超越指标"""
    _validate(a, b, r, s, d)
    terms = []
    for t in t_window(a, b, r, s, d):
        coefficient = omega(a, b, r, s, t, d)
        if coefficient:
            terms.append(ExpansionTerm(t, coefficient, (a + b - t) // 2, r + s - a - b + t))
    return CompoundExpansion(a, b, r, s, d, tuple(terms))
