"""
BinaryInvolutions 二元型对合计算库 - 6-j 符号与四面体归一化

标签顺序统一为 (j1, j2, j3, j12, j23, J)，对应 6-j 符号 {j1 j2 j12; j3 J j23}。
所有阶乘参数以 2j 计算后再折半，出现奇数说明三元组检查有漏洞。
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from ring.errors import InternalCheckError
from ring.factorial import factorial, factorial_quotient
from ring.rational import minus_one_pow
from recoupling.halfint import HalfInt, require_triad
from recoupling.sqrt_rational import SqrtRational


def _half(twice: int) -> int:
    if twice % 2:
        raise InternalCheckError(f"阶乘参数不是整数: {twice}/2")
    return twice // 2


@dataclass(frozen=True)
class SixJLabels:
    """六个半整数标签"""
    j1: HalfInt
    j2: HalfInt
    j3: HalfInt
    j12: HalfInt
    j23: HalfInt
    J: HalfInt

    @classmethod
    def parse(cls, *values) -> 'SixJLabels':
        return cls(*(HalfInt.parse(v) for v in values))

    def triads(self) -> List[Tuple[HalfInt, HalfInt, HalfInt]]:
        return [
            (self.j1, self.j2, self.j12),
            (self.j2, self.j3, self.j23),
            (self.j1, self.j23, self.J),
            (self.j12, self.j3, self.J),
        ]

    def validate(self) -> None:
        for triad in self.triads():
            require_triad(*triad)

    def doubled(self) -> Tuple[int, int, int, int, int, int]:
        return (self.j1.twice_value, self.j2.twice_value, self.j3.twice_value,
                self.j12.twice_value, self.j23.twice_value, self.J.twice_value)

    def triad_sums(self) -> List[int]:
        """T1..T4"""
        return [_half(sum(h.twice_value for h in triad)) for triad in self.triads()]

    def quad_sums(self) -> List[int]:
        """S1..S3"""
        j1, j2, j3, j12, j23, J = self.doubled()
        return [_half(j1 + j2 + j3 + J), _half(j2 + j12 + j23 + J), _half(j1 + j3 + j12 + j23)]

    def sign(self) -> int:
        j1, j2, j3, _, _, J = self.doubled()
        return minus_one_pow(_half(j1 + j2 + j3 + J))


def triangle_delta_sq(a: HalfInt, b: HalfInt, c: HalfInt) -> Fraction:
    """
    Δ(a,b,c)^2 = (a+b-c)!(a+c-b)!(b+c-a)! / (a+b+c+1)!

    Args:
        a, b, c: 构成三元组的半整数

    Returns:
        精确有理数
    """
    require_triad(a, b, c)
    x, y, z = a.twice_value, b.twice_value, c.twice_value
    return factorial_quotient(
        [_half(x + y - z), _half(x + z - y), _half(y + z - x)],
        [_half(x + y + z) + 1],
    )


def racah_sum(labels: SixJLabels) -> Fraction:
    """Racah 单重求和，n 取遍 max(T) <= n <= min(S)"""
    lower = labels.triad_sums()
    upper = labels.quad_sums()
    total = Fraction(0)
    for n in range(max(lower), min(upper) + 1):
        denominator = 1
        for t in lower:
            denominator *= factorial(n - t)
        for s in upper:
            denominator *= factorial(s - n)
        total += Fraction(minus_one_pow(n) * factorial(n + 1), denominator)
    return total


def racah_6j(*values) -> SqrtRational:
    """
    Wigner 6-j 符号 {j1 j2 j12; j3 J j23}

    Args:
        values: (j1, j2, j3, j12, j23, J)，可为 HalfInt、整数或 "p/q"

    Returns:
        Racah 和 · √(四个 Δ^2 之积)
    """
    labels = SixJLabels.parse(*values)
    labels.validate()
    radicand = Fraction(1)
    for triad in labels.triads():
        radicand *= triangle_delta_sq(*triad)
    return SqrtRational(racah_sum(labels), radicand)


def _vertex_factorials(labels: SixJLabels) -> List[int]:
    """四个顶点各三个 (a+b-c)! 型参数"""
    arguments = []
    for triad in labels.triads():
        x, y, z = (h.twice_value for h in triad)
        arguments += [_half(x + y - z), _half(x + z - y), _half(y + z - x)]
    return arguments


def tetra_cg(*values) -> Fraction:
    """
    四面体图的 Clebsch-Gordan 归一化

    (-1)^{j1+j2+j3+J} · (V/E) · Σ_n (-1)^n (n+1)! / [Π(n-T_k)! Π(S_k-n)!]，
    V 为十二个顶点阶乘之积，E 为六个 (2j)! 之积；求和为空时返回 0。
    """
    labels = SixJLabels.parse(*values)
    labels.validate()
    vertex = factorial_quotient(_vertex_factorials(labels), [])
    edges = factorial_quotient([], labels.doubled())
    return labels.sign() * vertex * edges * racah_sum(labels)


def alpha_tilde_p1(labels: SixJLabels) -> Fraction:
    j1, j2, j3, j12, j23, J = labels.doubled()
    return factorial_quotient([
        _half(j1 + j12 - j2), _half(j2 + j12 - j1), _half(j12 + J - j3), _half(j3 + J - j12),
    ], [])


def alpha_tilde_p2(labels: SixJLabels) -> Fraction:
    j1, j2, j3, j12, j23, J = labels.doubled()
    return factorial_quotient([
        _half(j1 + j23 - J), _half(j1 + J - j23), _half(j23 + J - j1),
        _half(j2 + j3 - j23), _half(j2 + j23 - j3), _half(j3 + j23 - j2),
        _half(j1 + j2 - j12), _half(j12 + j3 - J),
    ], [])


def alpha_tilde_p3(labels: SixJLabels) -> Fraction:
    return factorial_quotient([t + 1 for t in labels.triad_sums()], [])


def alpha_tilde(*values) -> SqrtRational:
    """α~ = (-1)^{j1+j2+j3+J} / (2J+1) · √(P2 P3 / P1) · 6-j"""
    labels = SixJLabels.parse(*values)
    labels.validate()
    sixj = racah_6j(labels.j1, labels.j2, labels.j3, labels.j12, labels.j23, labels.J)
    p1, p2, p3 = alpha_tilde_p1(labels), alpha_tilde_p2(labels), alpha_tilde_p3(labels)
    return SqrtRational(
        labels.sign() * sixj.rational_part / (labels.J.twice_value + 1),
        sixj.radicand * p2 * p3 / p1,
    )


def normalisation_factor(*values) -> Fraction:
    """组合归一化因子 P1 / E"""
    labels = SixJLabels.parse(*values)
    labels.validate()
    return alpha_tilde_p1(labels) * factorial_quotient([], labels.doubled())


def tetra_from_sixj(*values) -> Fraction:
    """(2J+1) · 归一化因子 · α~，根式必须完全约去"""
    labels = SixJLabels.parse(*values)
    product = alpha_tilde(*values) * ((labels.J.twice_value + 1) * normalisation_factor(*values))
    return product.to_rational()
