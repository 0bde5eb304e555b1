"""
BinaryInvolutions 二元型对合计算库 - 通用（符号）二元型

"通用 Q" 指 Cayley 系数为符号 q0,q1,q2 的二次型；"通用 F" 指 Cayley 系数为 a0..ad 的 d 次型。
符号恒等式的验证全部建立在这些二元型之上。
"""
from typing import Sequence, Tuple

from ring.errors import ValidationError, VariableOrderError
from ring.multipoly import MultiPoly
from forms.binary_form import BinaryForm

QUADRATIC_VARIABLES: Tuple[str, ...] = ('q0', 'q1', 'q2')


def coefficient_names(order: int, prefix: str = 'a') -> Tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(order + 1))


def merge_variables(*groups: Sequence[str]) -> Tuple[str, ...]:
    """按顺序合并变量表，去掉重复"""
    merged = []
    for group in groups:
        for name in group:
            if name not in merged:
                merged.append(name)
    return tuple(merged)


def generic_form(order: int, prefix: str = 'a', variables: Sequence[str] = None,
                 names: Sequence[str] = None) -> BinaryForm:
    """
    Cayley 系数全为符号的二元型

    Args:
        order: 阶数
        prefix: 符号前缀
        variables: 多项式环的变量表，默认只含本型的符号
        names: 显式指定的符号名，覆盖 prefix

    Returns:
        通用二元型
    """
    names = tuple(names) if names is not None else coefficient_names(order, prefix)
    if len(names) != order + 1:
        raise ValidationError(f"阶数 {order} 需要 {order + 1} 个符号，收到 {len(names)}")
    variables = tuple(variables) if variables is not None else names
    return BinaryForm.from_cayley([MultiPoly.variable(variables, name) for name in names])


def generic_quadratic(variables: Sequence[str] = None) -> BinaryForm:
    """通用二次型 Q = (q0, q1, q2 ⧸ x1,x2)^2"""
    return generic_form(2, names=QUADRATIC_VARIABLES,
                        variables=variables if variables is not None else QUADRATIC_VARIABLES)


def quadratic_over(form: BinaryForm) -> BinaryForm:
    """与 form 的系数环兼容的通用二次型（变量表为 q0,q1,q2 加上 form 的变量）"""
    clashes = sorted({
        name for c in form.coeffs if isinstance(c, MultiPoly)
        for name in QUADRATIC_VARIABLES if c.degree(name) > 0
    })
    if clashes:
        raise VariableOrderError(f"F 的系数使用了二次型保留的变量名 {clashes}")
    return generic_quadratic(merge_variables(QUADRATIC_VARIABLES, form.coefficient_variables()))


def symbolic_pair(order: int) -> Tuple[BinaryForm, BinaryForm]:
    """同一多项式环上的通用 Q 与通用 d 次型 F"""
    variables = merge_variables(QUADRATIC_VARIABLES, coefficient_names(order))
    return generic_quadratic(variables), generic_form(order, variables=variables)
