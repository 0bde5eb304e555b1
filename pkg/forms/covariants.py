"""
BinaryInvolutions 二元型对合计算库 - 四次型不变量

A_F = (F,F)_4, B_F = (F,(F,F)_2)_4, j(F) = A^3 / (A^3 - 6B^2)
"""
from fractions import Fraction
from typing import Any, Tuple

from loguru import logger

from ring.errors import DegenerateFormError, RangeError
from forms.binary_form import BinaryForm
from forms.transvectant import transvectant


def quartic_covariants(form: BinaryForm) -> Tuple[Any, Any]:
    """
    四次型的两个基本不变量

    Args:
        form: 阶数为 4 的二元型

    Returns:
        (A_F, B_F)
    """
    if form.order != 4:
        raise RangeError(f"需要四次型，收到阶数 {form.order}")
    a_invariant = transvectant(form, form, 4).coeffs[0]
    b_invariant = transvectant(form, transvectant(form, form, 2), 4).coeffs[0]
    return a_invariant, b_invariant


def j_invariant(form: BinaryForm) -> Fraction:
    """有理四次型的 j 不变量"""
    a_invariant, b_invariant = quartic_covariants(form.numeric())
    denominator = a_invariant ** 3 - 6 * b_invariant ** 2
    if denominator == 0:
        raise DegenerateFormError(f"A^3 - 6B^2 = 0，j 不变量无定义: {form}")
    value = Fraction(a_invariant ** 3) / denominator
    logger.debug(f"j({form}) = {value}")
    return value
