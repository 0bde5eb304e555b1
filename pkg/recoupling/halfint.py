"""
BinaryInvolutions 二元型对合计算库 - 半整数

半整数以 2j 的整数形式存储
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ring.errors import TriadError, ValidationError
from ring.rational import format_rational, to_rational


@dataclass(frozen=True, order=True)
class HalfInt:
    """非负半整数 j，存储 twice_value = 2j"""
    twice_value: int

    def __post_init__(self):
        if not isinstance(self.twice_value, int) or isinstance(self.twice_value, bool):
            raise ValidationError(f"twice_value 必须是整数: {self.twice_value!r}")
        if self.twice_value < 0:
            raise ValidationError(f"半整数必须非负: {self.twice_value}/2")

    @classmethod
    def parse(cls, value: Union[int, str, Fraction, 'HalfInt']) -> 'HalfInt':
        """接受 3、"3/2"、Fraction(3, 2)"""
        if isinstance(value, HalfInt):
            return value
        doubled = to_rational(value) * 2
        if doubled.denominator != 1:
            raise ValidationError(f"{value!r} 不是半整数")
        return cls(int(doubled))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __str__(self) -> str:
        return format_rational(self.value)


def is_triad(a: HalfInt, b: HalfInt, c: HalfInt) -> bool:
    """a+b+c 为整数且满足三角不等式"""
    x, y, z = a.twice_value, b.twice_value, c.twice_value
    return (x + y + z) % 2 == 0 and abs(x - y) <= z <= x + y


def require_triad(a: HalfInt, b: HalfInt, c: HalfInt) -> None:
    if not is_triad(a, b, c):
        raise TriadError(f"({a}, {b}, {c}) 不构成三元组")
