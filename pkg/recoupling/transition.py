"""
BinaryInvolutions 二元型对合计算库 - 过渡矩阵 G

上三角矩阵 G_{i,j}，几何对合子满足 g_i = 2^d G_{0,i}
"""
from fractions import Fraction
from typing import List

from ring.errors import RangeError
from ring.factorial import factorial_quotient


def transition_G(i: int, j: int, d: int) -> Fraction:
    """
    G_{i,j} = (d-2i)!(2d-4j+1)!(d-i-j)! / (4^{j-i}(d-2j)!^2(2d-2i-2j+1)!(j-i)!)

    Args:
        i, j: 0 <= i, j <= d//2
        d: 阶数

    Returns:
        精确有理数；j < i 时为 0
    """
    n = d // 2
    if d < 0 or not (0 <= i <= n and 0 <= j <= n):
        raise RangeError(f"下标 ({i},{j}) 超出 0..{n}（d={d}）")
    if j < i:
        return Fraction(0)
    return factorial_quotient(
        [d - 2 * i, 2 * d - 4 * j + 1, d - i - j],
        [d - 2 * j, d - 2 * j, 2 * d - 2 * i - 2 * j + 1, j - i],
    ) / 4 ** (j - i)


def transition_matrix(d: int) -> List[List[Fraction]]:
    """完整的 (n+1)x(n+1) G 表"""
    n = d // 2
    return [[transition_G(i, j, d) for j in range(n + 1)] for i in range(n + 1)]
