"""
BinaryInvolutions 二元型对合计算库 - 阶乘表

所有系数公式都是阶乘商，这里维护一张可增长的大整数阶乘表
"""
import threading
from fractions import Fraction
from typing import Iterable, List

from ring.errors import InternalCheckError, RangeError


class FactorialTable:
    """可增长的阶乘备忘表，扩展时加锁，读取无锁"""

    def __init__(self):
        self._values: List[int] = [1]
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        """
        返回 n!

        Args:
            n: 非负整数

        Returns:
            n 的阶乘
        """
        if n < 0:
            raise RangeError(f"阶乘参数为负: {n}")
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(self._values) <= n:
                self._values.append(self._values[-1] * len(self._values))
            return self._values[n]

    def __len__(self) -> int:
        return len(self._values)


factorial = FactorialTable()


def binomial(n: int, k: int) -> int:
    """二项式系数 C(n, k)，k 越界时为 0"""
    if k < 0 or k > n or n < 0:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def falling_factorial(x: int, k: int) -> int:
    """下降阶乘 x(x-1)...(x-k+1)"""
    result = 1
    for offset in range(k):
        result *= x - offset
    return result


def factorial_quotient(numerator_args: Iterable[int], denominator_args: Iterable[int]) -> Fraction:
    """
    计算 Π n! / Π m!

    参数必须全部非负；出现负参数说明调用方的求和范围或三元组检查有误。

    Args:
        numerator_args: 分子阶乘参数
        denominator_args: 分母阶乘参数

    Returns:
        精确有理数
    """
    numerator = 1
    for n in numerator_args:
        if n < 0:
            raise InternalCheckError(f"阶乘参数为负: {n}")
        numerator *= factorial(n)
    denominator = 1
    for m in denominator_args:
        if m < 0:
            raise InternalCheckError(f"阶乘参数为负: {m}")
        denominator *= factorial(m)
    return Fraction(numerator, denominator)
