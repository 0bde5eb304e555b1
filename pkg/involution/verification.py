"""
BinaryInvolutions 二元型对合计算库 - 对合子验证

两条路径：
- fast: 代入 SYS(d)，纯有理数运算
- symbolic: 对通用 Q、F 计算 σ(σ(F)) - Δ^d F 并检查为零多项式
"""
from concurrent.futures import ProcessPoolExecutor
from typing import List, Sequence

from loguru import logger

from ring.errors import InternalCheckError, ValidationError
from forms.binary_form import BinaryForm
from forms.generic import symbolic_pair
from forms.transvectant import delta
from involution.involutor import Involutor
from involution.sigma import sigma_apply
from involution.system import build_sys

VERIFY_METHODS = ('fast', 'symbolic', 'both')
DEFAULT_SYMBOLIC_MAX_D = 6


def symbolic_residual(involutor: Involutor) -> BinaryForm:
    """通用 Q、F 上的 σ_{Q,z}(σ_{Q,z}(F)) - Δ^d F"""
    quadratic, form = symbolic_pair(involutor.d)
    once = sigma_apply(quadratic, involutor, form)
    twice = sigma_apply(quadratic, involutor, once)
    return twice - form.scale(delta(quadratic) ** involutor.d)


def verify_involutor(involutor: Involutor, method: str = 'fast',
                     max_symbolic_d: int = DEFAULT_SYMBOLIC_MAX_D) -> bool:
    """
    验证 z 是否为对合子

    Args:
        involutor: 待验证的系数向量
        method: fast / symbolic / both
        max_symbolic_d: 符号路径允许的最大 d

    Returns:
        是否满足 σ^2 = Δ^d
    """
    if method not in VERIFY_METHODS:
        raise ValidationError(f"未知的验证方式: {method}，可选 {VERIFY_METHODS}")
    if method in ('symbolic', 'both') and involutor.d > max_symbolic_d:
        raise ValidationError(f"d={involutor.d} 超过符号验证上限 {max_symbolic_d}")

    fast = build_sys(involutor.d).is_satisfied(involutor) if method in ('fast', 'both') else None
    if method == 'fast':
        return fast

    logger.debug(f"符号验证 d={involutor.d}, z={[str(v) for v in involutor.z]}")
    symbolic = symbolic_residual(involutor).is_zero()
    if method == 'both' and fast != symbolic:
        raise InternalCheckError(f"SYS 判定 {fast} 与符号判定 {symbolic} 不一致: {involutor.z}")
    return symbolic


def _verify_task(args) -> bool:
    involutor, method, max_symbolic_d = args
    return verify_involutor(involutor, method, max_symbolic_d)


def verify_many(involutors: Sequence[Involutor], method: str = 'fast', workers: int = 1,
                max_symbolic_d: int = DEFAULT_SYMBOLIC_MAX_D) -> List[bool]:
    """
    批量验证，workers > 1 时按进程分发

    Args:
        involutors: 对合子列表
        method: 验证方式
        workers: 进程数
        max_symbolic_d: 符号路径允许的最大 d

    Returns:
        与输入同序的结果列表
    """
    tasks = [(involutor, method, max_symbolic_d) for involutor in involutors]
    if workers <= 1 or len(tasks) <= 1:
        return [_verify_task(task) for task in tasks]
    logger.info(f"使用 {workers} 个进程验证 {len(tasks)} 个对合子")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(_verify_task, tasks))
