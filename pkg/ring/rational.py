"""
BinaryInvolutions 二元型对合计算库 - 精确有理数

有理数直接使用 fractions.Fraction，本模块负责字符串 "p/q" 的解析与格式化
"""
import re
from fractions import Fraction
from typing import Union

from ring.errors import ValidationError

Rational = Fraction

_RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


def to_rational(value: Union[int, str, Fraction]) -> Fraction:
    """
    将整数、Fraction 或 "p/q" 字符串转换为有理数

    Args:
        value: 输入值，浮点数一律拒绝

    Returns:
        最简形式的 Fraction
    """
    if isinstance(value, bool):
        raise ValidationError(f"布尔值不是有理数: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if not match:
            raise ValidationError(f"无法解析有理数: {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise ValidationError(f"分母为零: {value!r}")
        return Fraction(numerator, denominator)
    raise ValidationError(f"不支持的有理数类型: {type(value).__name__}")


def format_rational(value: Union[int, Fraction]) -> str:
    """格式化为 "p/q"，分母为 1 时只输出 "p" """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def minus_one_pow(exponent: int) -> int:
    """(-1)^exponent"""
    return -1 if exponent % 2 else 1
