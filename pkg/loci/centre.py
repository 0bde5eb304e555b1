"""
BinaryInvolutions 二元型对合计算库 - 对合中心

[Q] 是 F 的对合中心当且仅当
偶数 d: σ_{Q,z}(F) = Δ^{d/2} F；奇数 d: σ_{Q,z}(F)^2 = Δ^d F^2。
把 q0,q1,q2 视为符号，残差二元型的各系数就是中心轨迹的定义方程（未去掉 Δ=0 的点）。
"""
from dataclasses import dataclass
from typing import Any, Dict, Mapping, Tuple

from loguru import logger

from ring.errors import RangeError
from ring.multipoly import MultiPoly
from forms.binary_form import BinaryForm
from forms.generic import quadratic_over
from forms.transvectant import delta
from involution.involutor import Involutor
from involution.sigma import sigma_apply


def involution_residual(involutor: Involutor, quadratic: BinaryForm, form: BinaryForm) -> BinaryForm:
    """
    中心条件的 左边 - 右边

    Args:
        involutor: 对合子 z
        quadratic: 二次型 Q（数值或符号）
        form: 阶数为 d 的二元型 F

    Returns:
        偶数 d 时阶数为 d，奇数 d 时阶数为 2d
    """
    if form.order != involutor.d:
        raise RangeError(f"F 的阶数 {form.order} 与对合子的 d={involutor.d} 不符")
    d = involutor.d
    image = sigma_apply(quadratic, involutor, form)
    discriminant = delta(quadratic)
    if d % 2 == 0:
        return image - form.scale(discriminant ** (d // 2))
    return image.product(image) - form.product(form).scale(discriminant ** d)


def satisfies_involution(involutor: Involutor, quadratic: BinaryForm, form: BinaryForm) -> bool:
    return involution_residual(involutor, quadratic, form).is_zero()


@dataclass(frozen=True)
class CentreSystem:
    """中心轨迹的生成元（q 的多项式）"""
    d: int
    generators: Tuple[MultiPoly, ...]

    def vanishes_at(self, bindings: Mapping[str, Any]) -> bool:
        """所有生成元在给定 q 值（或 q 的多项式）处是否为零"""
        return all(g.substitute(bindings).is_zero() for g in self.generators)

    def to_dict(self) -> Dict:
        return {'d': self.d, 'generators': [g.to_dict() for g in self.generators]}


def centre_conditions(involutor: Involutor, form: BinaryForm) -> CentreSystem:
    """
    中心轨迹的定义方程

    Args:
        involutor: 对合子 z
        form: 阶数为 d 的二元型 F

    Returns:
        CentreSystem，生成元为残差的非零系数
    """
    residual = involution_residual(involutor, quadratic_over(form), form)
    generators = tuple(
        c if isinstance(c, MultiPoly) else MultiPoly.constant((), c)
        for c in residual.coeffs if c
    )
    logger.debug(f"d={involutor.d} 的中心方程共 {len(generators)} 个")
    return CentreSystem(involutor.d, generators)
