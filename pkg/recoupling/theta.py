"""
BinaryInvolutions 二元型对合计算库 - θ 重耦系数

(A,(B,C)_r)_s = Σ_k θ_k ((A,B)_k, C)_{r+s-k}，A、B、C 的阶数为 a、b、c
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Mapping

from ring.errors import RangeError
from ring.factorial import factorial, factorial_quotient
from ring.rational import format_rational, minus_one_pow


@dataclass(frozen=True)
class ThetaTable:
    """θ_k 表，只保存非零项"""
    a: int
    b: int
    c: int
    r: int
    s: int
    coefficients: Mapping[int, Fraction] = field(default_factory=dict)

    def get(self, k: int) -> Fraction:
        return self.coefficients.get(k, Fraction(0))

    def to_dict(self) -> Dict[str, str]:
        return {str(k): format_rational(v) for k, v in sorted(self.coefficients.items())}


def theta_window(a: int, b: int, c: int, r: int, s: int) -> range:
    """六个不等式 k>=0, k>=r+s-c, k<=a, k<=a+b-r-s, k<=b, k<=r+s 给出的 k 范围"""
    low = max(0, r + s - c)
    high = min(a, b, a + b - r - s, r + s)
    return range(low, high + 1)


def _validate(a: int, b: int, c: int, r: int, s: int) -> None:
    for name, value in (('a', a), ('b', b), ('c', c), ('r', r), ('s', s)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise RangeError(f"{name}={value!r} 必须是非负整数")
    if r > min(b, c):
        raise RangeError(f"r={r} 超过 min(b,c)={min(b, c)}")
    if s > min(a, b + c - 2 * r):
        raise RangeError(f"s={s} 超过 min(a, b+c-2r)={min(a, b + c - 2 * r)}")


def _t2(a: int, b: int, c: int, r: int, s: int, k: int) -> Fraction:
    lower = [a + b - k, b + c - r, a + b + c - 2 * r - s, a + b + c - r - s - k]
    upper = [a + b + c - r - s, a + b + c - r - k, a + 2 * b + c - 2 * r - s - k]
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
def theta_coefficients(a: int, b: int, c: int, r: int, s: int) -> ThetaTable:
    """
    θ 重耦系数表

    Args:
        a, b, c: 三个二元型的阶数
        r: 内层超越指标，0 <= r <= min(b,c)
        s: 外层超越指标，0 <= s <= min(a, b+c-2r)

    Returns:
        ThetaTable，窗口之外的 θ_k 为零
    """
    _validate(a, b, c, r, s)
    t1 = factorial_quotient(
        [r, b - r, c - r, s, a - s, b + c - 2 * r - s],
        [b + c - 2 * r],
    )
    sign = minus_one_pow(a + b + c + r + s)
    coefficients = {}
    for k in theta_window(a, b, c, r, s):
        value = sign * t1 * factorial_quotient(
            [a + b - 2 * k + 1],
            [a + b - k + 1, a + b + c - r - s - k + 1],
        ) * _t2(a, b, c, r, s, k)
        if value:
            coefficients[k] = value
    return ThetaTable(a, b, c, r, s, MappingProxyType(coefficients))
