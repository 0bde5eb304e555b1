"""
BinaryInvolutions 二元型对合计算库 - 幺模变量替换
"""
from typing import Any, List, Sequence

from ring.errors import ValidationError
from forms.binary_form import BinaryForm


def unimodular_substitute(form: BinaryForm, matrix: Sequence[Sequence[Any]]) -> BinaryForm:
    """
    变量替换 x1 -> a x1 + b x2, x2 -> c x1 + d x2，矩阵 [[a, b], [c, d]] 行列式须为 1

    Args:
        form: 二元型
        matrix: 2x2 矩阵

    Returns:
        替换后的二元型
    """
    try:
        (a, b), (c, d) = matrix
    except (TypeError, ValueError) as e:
        raise ValidationError(f"替换矩阵必须是 2x2: {matrix!r}") from e

    image_x1 = BinaryForm((a, b))
    image_x2 = BinaryForm((c, d))
    determinant = image_x1.coeffs[0] * image_x2.coeffs[1] - image_x1.coeffs[1] * image_x2.coeffs[0]
    if determinant != 1:
        raise ValidationError(f"替换矩阵行列式为 {determinant}，不是 1")

    m = form.order
    x1_powers: List[BinaryForm] = [BinaryForm.constant(1)]
    x2_powers: List[BinaryForm] = [BinaryForm.constant(1)]
    for _ in range(m):
        x1_powers.append(x1_powers[-1].product(image_x1))
        x2_powers.append(x2_powers[-1].product(image_x2))

    result = BinaryForm.zero(m)
    for i, coeff in enumerate(form.coeffs):
        if coeff:
            result = result + x1_powers[m - i].product(x2_powers[i]).scale(coeff)
    return result
