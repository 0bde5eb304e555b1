"""
BinaryInvolutions 二元型对合计算库 - 标准形

Q = x1x2 时，σ_{Q,z(s)} 把 Cayley 系数 a_i 变为 s_i a_i，
因此被固定的二元型恰好支撑在 s_i = +1 的单项式上。
"""
from dataclasses import dataclass
from typing import Dict, Tuple

from ring.errors import RangeError
from forms.binary_form import BinaryForm
from involution.sign_sequence import SignSequence

Monomial = Tuple[int, int]


@dataclass(frozen=True)
class CanonicalBasis:
    """s_i = +1 与 s_i = -1 的单项式指数 (d-i, i)"""
    plus: Tuple[Monomial, ...]
    minus: Tuple[Monomial, ...]

    def to_dict(self) -> Dict:
        return {'plus': [list(m) for m in self.plus], 'minus': [list(m) for m in self.minus]}


def canonical_basis(signs: SignSequence) -> CanonicalBasis:
    d = signs.d
    return CanonicalBasis(
        plus=tuple((d - i, i) for i in signs.plus_indices()),
        minus=tuple((d - i, i) for i in signs.minus_indices()),
    )


def canonical_check(signs: SignSequence, form: BinaryForm) -> bool:
    """
    判断 F 是否为 s 的标准形

    偶数 d：支撑集包含于 plus；奇数 d：支撑集包含于 plus 或包含于 minus。

    Args:
        signs: 符号序列
        form: 阶数为 d 的二元型

    Returns:
        是否满足
    """
    if form.order != signs.d:
        raise RangeError(f"F 的阶数 {form.order} 与符号序列的 d={signs.d} 不符")
    support = set(form.support())
    plus = set(signs.plus_indices())
    if signs.d % 2 == 0:
        return support <= plus
    return support <= plus or support <= set(signs.minus_indices())
