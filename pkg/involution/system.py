"""
BinaryInvolutions 二元型对合计算库 - 二次方程组 SYS(d)

α_{i,j}^{(t)} = ω(d-2j, d-2i; d-2i, d-2j; t)。
SYS(d) 由 t = 2,4,...,2n 的 n 个方程 Σ α z_i z_j = 0 与范数条件 Σ α_{i,i}^{(0)} z_i^2 = 1 组成。
α 按 (i,j,t) 不对称存储；与打印形式比较时把 z_i z_j (i<j) 的两项合并。
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, List, Mapping, Sequence, Tuple

from loguru import logger

from ring.errors import RangeError, ValidationError
from ring.rational import format_rational, to_rational
from recoupling.omega import omega

AlphaKey = Tuple[int, int, int]


def in_alpha_window(i: int, j: int, t: int, d: int) -> bool:
    """t 为偶数且 2|i-j| <= t <= min(d, 2(d-i-j))"""
    return t % 2 == 0 and 2 * abs(i - j) <= t <= min(d, 2 * (d - i - j))


@dataclass(frozen=True)
class QuadraticSystem:
    """SYS(d) 的 α 系数表"""
    d: int
    alpha: Mapping[AlphaKey, Fraction]

    @property
    def n(self) -> int:
        return self.d // 2

    def equation_indices(self) -> range:
        """二次方程的 t 值 2,4,...,2n"""
        return range(2, 2 * self.n + 1, 2)

    def coefficient(self, i: int, j: int, t: int) -> Fraction:
        return self.alpha.get((i, j, t), Fraction(0))

    def equation(self, t: int) -> Dict[Tuple[int, int], Fraction]:
        """第 t 个方程的不对称系数 (i,j) -> α"""
        return {(i, j): value for (i, j, tt), value in self.alpha.items() if tt == t}

    def collected(self, t: int) -> Dict[Tuple[int, int], Fraction]:
        """合并 z_i z_j 与 z_j z_i 后的系数，键满足 i <= j"""
        result: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), value in self.equation(t).items():
            key = (min(i, j), max(i, j))
            result[key] = result.get(key, Fraction(0)) + value
        return {key: value for key, value in sorted(result.items()) if value}

    def evaluate(self, t: int, z: Sequence) -> Fraction:
        """Σ α_{i,j}^{(t)} z_i z_j"""
        z = self._check(z)
        return sum((value * z[i] * z[j] for (i, j), value in self.equation(t).items()), Fraction(0))

    def norm(self, z: Sequence) -> Fraction:
        return self.evaluate(0, z)

    def residuals(self, z: Sequence) -> Dict[int, Fraction]:
        """各方程的残差；t=0 对应 范数 - 1"""
        result = {0: self.norm(z) - 1}
        for t in self.equation_indices():
            result[t] = self.evaluate(t, z)
        return result

    def is_satisfied(self, z: Sequence) -> bool:
        return not any(self.residuals(z).values())

    def _check(self, z: Sequence) -> List[Fraction]:
        values = getattr(z, 'z', z)
        values = [to_rational(v) for v in values]
        if len(values) != self.n + 1:
            raise ValidationError(f"SYS({self.d}) 需要 {self.n + 1} 个未知数，收到 {len(values)}")
        return values

    def render(self, t: int) -> str:
        """合并后的方程文本，如 -25/20328*z0^2 + 5/3234*z0*z1"""
        pieces = []
        for (i, j), value in self.collected(t).items():
            monomial = f"z{i}^2" if i == j else f"z{i}*z{j}"
            magnitude = abs(value)
            body = monomial if magnitude == 1 else f"{format_rational(magnitude)}*{monomial}"
            pieces.append(('-' if value < 0 else '+', body))
        if not pieces:
            return '0'
        text = ('-' if pieces[0][0] == '-' else '') + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_dict(self) -> Dict:
        return {
            'd': self.d,
            'alpha': [
                {'i': i, 'j': j, 't': t, 'value': format_rational(value)}
                for (i, j, t), value in sorted(self.alpha.items(), key=lambda item: (item[0][2], item[0][0], item[0][1]))
            ],
            'equations': {str(t): f"{self.render(t)} = 0" for t in self.equation_indices()},
            'norm': f"{self.render(0)} = 1",
        }


def build_sys(d: int, cache=None) -> QuadraticSystem:
    """
    构造 SYS(d)

    Args:
        d: 阶数
        cache: 可选的 CoefficientCache

    Returns:
        QuadraticSystem
    """
    if not isinstance(d, int) or d < 0:
        raise RangeError(f"d 必须是非负整数: {d!r}")

    if cache is not None:
        cached = cache.load_alpha(d)
        if cached is not None:
            return QuadraticSystem(d, MappingProxyType(cached))

    alpha = _alpha_table(d)
    if cache is not None:
        cache.store_alpha(d, alpha)
    return QuadraticSystem(d, alpha)


@lru_cache(maxsize=None)
def _alpha_table(d: int) -> Mapping[AlphaKey, Fraction]:
    n = d // 2
    alpha: Dict[AlphaKey, Fraction] = {}
    for t in range(0, d + 1, 2):
        for i in range(n + 1):
            for j in range(n + 1):
                if not in_alpha_window(i, j, t, d):
                    continue
                value = omega(d - 2 * j, d - 2 * i, d - 2 * i, d - 2 * j, t, d)
                if value:
                    alpha[(i, j, t)] = value
    logger.debug(f"SYS({d}) 共 {len(alpha)} 个非零 α 系数")
    return MappingProxyType(alpha)
