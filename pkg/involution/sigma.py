"""
BinaryInvolutions 二元型对合计算库 - 对合映射 σ

σ_{Q,z}(F) = Σ_i z_i Δ^i (Q^{d-2i}, F)_{d-2i}
"""
from typing import List, Sequence

from loguru import logger

from ring.errors import RangeError
from forms.binary_form import BinaryForm
from forms.transvectant import delta, transvectant
from involution.involutor import Involutor


def sigma_apply(quadratic: BinaryForm, involutor: Involutor, form: BinaryForm) -> BinaryForm:
    """
    计算 σ_{Q,z}(F)

    Args:
        quadratic: 二次型 Q
        involutor: 对合子 z
        form: 阶数为 z.d 的二元型 F

    Returns:
        阶数为 d 的二元型
    """
    if quadratic.order != 2:
        raise RangeError(f"Q 必须是二次型，收到阶数 {quadratic.order}")
    d = involutor.d
    if form.order != d:
        raise RangeError(f"F 的阶数 {form.order} 与对合子的 d={d} 不符")

    discriminant = delta(quadratic)
    if discriminant == 0:
        logger.warning(f"Δ_Q = 0，σ 在二次曲线上退化: Q = {quadratic}")

    # Q^{d-2i} 从 i = n 开始逐次乘 Q^2
    square = quadratic.product(quadratic)
    powers: List[BinaryForm] = []
    power = quadratic if d % 2 else BinaryForm.constant(1)
    for _ in range(involutor.n + 1):
        powers.append(power)
        power = power.product(square)
    powers.reverse()

    result = BinaryForm.zero(d)
    discriminant_power = 1
    for i, z_i in enumerate(involutor.z):
        if z_i:
            term = transvectant(powers[i], form, d - 2 * i)
            result = result + term.scale(z_i * discriminant_power)
        discriminant_power = discriminant_power * discriminant
    return result


def sigma_product_form(quadratic: BinaryForm, factors: Sequence[BinaryForm]) -> BinaryForm:
    """
    线性因子乘积上的几何对合 2^d Π (Q, ℓ_i)_1

    Args:
        quadratic: 二次型 Q
        factors: 一次型列表 ℓ_1..ℓ_d

    Returns:
        阶数为 d 的二元型
    """
    if not factors:
        raise RangeError("线性因子列表不能为空")
    if quadratic.order != 2:
        raise RangeError(f"Q 必须是二次型，收到阶数 {quadratic.order}")
    result = BinaryForm.constant(2 ** len(factors))
    for factor in factors:
        if factor.order != 1:
            raise RangeError(f"因子必须是一次型，收到阶数 {factor.order}")
        result = result.product(transvectant(quadratic, factor, 1))
    return result
