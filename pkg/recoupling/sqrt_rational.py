"""
BinaryInvolutions 二元型对合计算库 - 有理数乘根式

值为 rational_part * sqrt(radicand)，根式部分保持不求值
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Union

from ring.errors import InternalCheckError, ValidationError
from ring.rational import format_rational, to_rational


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """有理数的有理平方根，不是完全平方时返回 None"""
    if value < 0:
        return None
    numerator_root = math.isqrt(value.numerator)
    denominator_root = math.isqrt(value.denominator)
    if numerator_root ** 2 == value.numerator and denominator_root ** 2 == value.denominator:
        return Fraction(numerator_root, denominator_root)
    return None


@dataclass(frozen=True)
class SqrtRational:
    """rational_part · √radicand"""
    rational_part: Fraction
    radicand: Fraction = Fraction(1)

    def __post_init__(self):
        rational_part = to_rational(self.rational_part)
        radicand = to_rational(self.radicand)
        if radicand < 0:
            raise ValidationError(f"根式被开方数为负: {radicand}")
        if not rational_part or not radicand:
            rational_part, radicand = Fraction(0), Fraction(1)
        object.__setattr__(self, 'rational_part', rational_part)
        object.__setattr__(self, 'radicand', radicand)

    def __mul__(self, other: Union['SqrtRational', int, Fraction]) -> 'SqrtRational':
        if isinstance(other, SqrtRational):
            return SqrtRational(self.rational_part * other.rational_part, self.radicand * other.radicand)
        if isinstance(other, (int, Fraction)):
            return SqrtRational(self.rational_part * other, self.radicand)
        return NotImplemented

    __rmul__ = __mul__

    def square(self) -> Fraction:
        return self.rational_part ** 2 * self.radicand

    def sign(self) -> int:
        return (self.rational_part > 0) - (self.rational_part < 0)

    def to_rational(self) -> Fraction:
        """根式完全约去时返回有理值，否则是内部错误"""
        root = rational_sqrt(self.radicand)
        if root is None:
            raise InternalCheckError(f"根式未能约去: √{self.radicand}")
        return self.rational_part * root

    def simplified(self) -> 'SqrtRational':
        """被开方数为完全平方时并入有理部分"""
        root = rational_sqrt(self.radicand)
        if root is None:
            return self
        return SqrtRational(self.rational_part * root)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SqrtRational(Fraction(other))
        if not isinstance(other, SqrtRational):
            return NotImplemented
        return self.sign() == other.sign() and self.square() == other.square()

    def __hash__(self) -> int:
        return hash((self.sign(), self.square()))

    def to_dict(self) -> Dict[str, str]:
        return {'rational': format_rational(self.rational_part), 'radicand': format_rational(self.radicand)}

    def __str__(self) -> str:
        if self.radicand == 1:
            return format_rational(self.rational_part)
        return f"{format_rational(self.rational_part)}*sqrt({format_rational(self.radicand)})"
