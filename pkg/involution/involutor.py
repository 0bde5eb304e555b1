"""
BinaryInvolutions 二元型对合计算库 - 对合子

对合子 z = (z_0,...,z_n) 使 σ_{Q,z}^2 = Δ^d。
符号序列 s 通过闭式 z_i(s) = E_{1,i} E_{2,i} 给出全部对合子。
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from loguru import logger

from ring.errors import InternalCheckError, RangeError, ValidationError
from ring.factorial import factorial, factorial_quotient
from ring.rational import format_rational, minus_one_pow, to_rational
from involution.sign_sequence import SignSequence, all_sign_sequences


@dataclass(frozen=True)
class Involutor:
    """d 次型上的对合子系数向量"""
    d: int
    z: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.d < 0:
            raise ValidationError(f"d 必须非负: {self.d}")
        z = tuple(to_rational(v) for v in self.z)
        if len(z) != self.d // 2 + 1:
            raise ValidationError(f"d={self.d} 的对合子需要 {self.d // 2 + 1} 个分量，收到 {len(z)}")
        object.__setattr__(self, 'z', z)

    @classmethod
    def parse(cls, d: int, text: str) -> 'Involutor':
        """由逗号分隔的 "p/q" 列表构造"""
        return cls(d, tuple(to_rational(part) for part in text.split(',')))

    @property
    def n(self) -> int:
        return self.d // 2

    def negated(self) -> 'Involutor':
        return Involutor(self.d, tuple(-v for v in self.z))

    def to_dict(self) -> Dict:
        return {'d': self.d, 'z': [format_rational(v) for v in self.z]}


def geometric_involutor(d: int) -> Involutor:
    """
    几何对合子 g_i = 2^{d-2i} d!(d-i)!(2d-4i+1)! / (i!(d-2i)!^2(2d-2i+1)!)

    Args:
        d: 阶数

    Returns:
        Involutor
    """
    if d < 0:
        raise RangeError(f"d 必须非负: {d}")
    g = []
    for i in range(d // 2 + 1):
        value = factorial_quotient(
            [d, d - i, 2 * d - 4 * i + 1],
            [i, d - 2 * i, d - 2 * i, 2 * d - 2 * i + 1],
        )
        g.append(value * Fraction(2) ** (d - 2 * i))
    return Involutor(d, tuple(g))


def improper_involutor(d: int, sign: int = 1) -> Involutor:
    """偶数 d 的平凡对合子 (0,...,0,±1)"""
    if d % 2:
        raise RangeError(f"平凡对合子只对偶数 d 存在，收到 d={d}")
    if sign not in (1, -1):
        raise ValidationError(f"sign 只能是 ±1: {sign}")
    return Involutor(d, (Fraction(0),) * (d // 2) + (Fraction(sign),))


def _e1(d: int, i: int) -> Fraction:
    return Fraction(factorial(d) * factorial(2 * d - 4 * i + 1), factorial(d - 2 * i) ** 2) \
        / Fraction(2) ** (2 * i - 1)


def _e2(signs: SignSequence, i: int) -> Fraction:
    d, n = signs.d, signs.n
    total = Fraction(0)
    for e in range(i + 1):
        outer = factorial_quotient([d - 2 * e, d - i - e], [2 * d - 2 * i - 2 * e + 1, i - e])
        for ell in range(n + 1):
            weight = Fraction(1, 2) if d == 2 * ell else Fraction(1)
            for p in range(ell + 1):
                q = d - 2 * e - p
                if q < 0 or q > d - ell:
                    continue
                term = factorial_quotient([], [p, q, ell - p, d - ell - q])
                total += signs.signs[ell] * weight * minus_one_pow(q) * outer * term
    return total


def z_from_sign(signs: SignSequence) -> Involutor:
    """
    符号序列对应的对合子 z_i(s) = E_{1,i} E_{2,i}

    Args:
        signs: 合法的符号序列

    Returns:
        Involutor
    """
    if not isinstance(signs, SignSequence):
        signs = SignSequence.parse(str(signs))
    return Involutor(signs.d, tuple(_e1(signs.d, i) * _e2(signs, i) for i in range(signs.n + 1)))


def enumerate_involutors(d: int) -> List[Tuple[SignSequence, Involutor]]:
    """
    按固定顺序枚举 d 次的全部 2^{n+1} 个对合子

    Args:
        d: 阶数

    Returns:
        (符号序列, 对合子) 列表
    """
    if d < 0:
        raise RangeError(f"d 必须非负: {d}")
    pairs = [(signs, z_from_sign(signs)) for signs in all_sign_sequences(d)]
    distinct = {involutor.z for _, involutor in pairs}
    if len(distinct) != len(pairs):
        raise InternalCheckError(f"d={d} 的对合子出现重复")
    logger.debug(f"d={d} 共枚举 {len(pairs)} 个对合子")
    return pairs
