"""
BinaryInvolutions 二元型对合计算库 - 二元型

二元型 Σ c_i x1^{m-i} x2^i 以原始单项式系数 c_0..c_m 存储，
Cayley 系数 a_i = c_i / C(m,i) 只是视图。系数可以是有理数或 MultiPoly。
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping, Sequence, Tuple, Union

from ring.errors import RangeError, ValidationError
from ring.factorial import binomial, falling_factorial
from ring.multipoly import MultiPoly
from ring.rational import format_rational, to_rational

Coefficient = Union[Fraction, MultiPoly]


def normalize_coefficient(value: Any) -> Coefficient:
    """把 int / "p/q" / Fraction / MultiPoly 统一为系数环元素"""
    if isinstance(value, MultiPoly):
        return value
    return to_rational(value)


def is_scalar(value: Any) -> bool:
    return isinstance(value, (int, Fraction, MultiPoly)) and not isinstance(value, bool)


@dataclass(frozen=True)
class BinaryForm:
    """二元型（不可变）"""
    coeffs: Tuple[Coefficient, ...]

    def __post_init__(self):
        coeffs = tuple(normalize_coefficient(c) for c in self.coeffs)
        if not coeffs:
            raise ValidationError("二元型至少需要一个系数")
        object.__setattr__(self, 'coeffs', coeffs)

    # ==================== 构造 ====================

    @classmethod
    def zero(cls, order: int) -> 'BinaryForm':
        if order < 0:
            raise RangeError(f"阶数为负: {order}")
        return cls((Fraction(0),) * (order + 1))

    @classmethod
    def constant(cls, value: Coefficient) -> 'BinaryForm':
        return cls((value,))

    @classmethod
    def monomial(cls, order: int, index: int, coeff: Coefficient = 1) -> 'BinaryForm':
        """coeff * x1^{order-index} x2^index"""
        if not 0 <= index <= order:
            raise RangeError(f"单项式下标 {index} 超出 0..{order}")
        coeffs: List[Coefficient] = [Fraction(0)] * (order + 1)
        coeffs[index] = normalize_coefficient(coeff)
        return cls(tuple(coeffs))

    @classmethod
    def from_cayley(cls, cayley: Sequence[Any]) -> 'BinaryForm':
        """由 Cayley 系数 (a_0,...,a_m ⧸ x1,x2)^m 构造"""
        order = len(cayley) - 1
        return cls(tuple(normalize_coefficient(a) * binomial(order, i) for i, a in enumerate(cayley)))

    @classmethod
    def from_monomials(cls, order: int, monomials: Mapping[int, Any]) -> 'BinaryForm':
        """由 {i: c_i} 的原始系数构造，其余系数为零"""
        coeffs: List[Coefficient] = [Fraction(0)] * (order + 1)
        for index, coeff in monomials.items():
            if not 0 <= index <= order:
                raise RangeError(f"单项式下标 {index} 超出 0..{order}")
            coeffs[index] = normalize_coefficient(coeff)
        return cls(tuple(coeffs))

    # ==================== 属性 ====================

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def cayley(self) -> Tuple[Coefficient, ...]:
        """Cayley 系数 a_i = c_i / C(m,i)"""
        return tuple(c / binomial(self.order, i) for i, c in enumerate(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> Tuple[int, ...]:
        """非零原始系数的下标"""
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def coefficient_variables(self) -> Tuple[str, ...]:
        """系数中出现的变量名，按首次出现的顺序"""
        names: List[str] = []
        for c in self.coeffs:
            if isinstance(c, MultiPoly):
                for name in c.variables:
                    if name not in names:
                        names.append(name)
        return tuple(names)

    # ==================== 运算 ====================

    def map_coeffs(self, fn: Callable[[Coefficient], Any]) -> 'BinaryForm':
        return BinaryForm(tuple(fn(c) for c in self.coeffs))

    def scale(self, factor: Any) -> 'BinaryForm':
        if not is_scalar(factor):
            raise ValidationError(f"不能用 {type(factor).__name__} 缩放二元型")
        return BinaryForm(tuple(c * factor for c in self.coeffs))

    def _require_same_order(self, other: 'BinaryForm') -> None:
        if other.order != self.order:
            raise RangeError(f"阶数不一致: {self.order} 与 {other.order}")

    def __add__(self, other: 'BinaryForm') -> 'BinaryForm':
        if not isinstance(other, BinaryForm):
            return NotImplemented
        self._require_same_order(other)
        return BinaryForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'BinaryForm') -> 'BinaryForm':
        if not isinstance(other, BinaryForm):
            return NotImplemented
        self._require_same_order(other)
        return BinaryForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> 'BinaryForm':
        return BinaryForm(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> 'BinaryForm':
        if isinstance(other, BinaryForm):
            return self.product(other)
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> 'BinaryForm':
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> 'BinaryForm':
        return form_pow(self, exponent)

    def product(self, other: 'BinaryForm') -> 'BinaryForm':
        """两个二元型的乘积（系数卷积）"""
        result: List[Any] = [Fraction(0)] * (self.order + other.order + 1)
        right = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in right:
                result[i + j] = result[i + j] + a * b
        return BinaryForm(tuple(result))

    def derivative(self, x1_times: int, x2_times: int) -> 'BinaryForm':
        """
        偏导 ∂^{x1_times}/∂x1 ∂^{x2_times}/∂x2

        Args:
            x1_times: 对 x1 求导次数
            x2_times: 对 x2 求导次数

        Returns:
            阶数为 m - x1_times - x2_times 的二元型
        """
        m = self.order
        new_order = m - x1_times - x2_times
        if x1_times < 0 or x2_times < 0 or new_order < 0:
            raise RangeError(f"求导次数 ({x1_times},{x2_times}) 超过阶数 {m}")
        coeffs = []
        for j in range(new_order + 1):
            i = j + x2_times
            c = self.coeffs[i]
            if c:
                c = c * (falling_factorial(m - i, x1_times) * falling_factorial(i, x2_times))
            coeffs.append(c)
        return BinaryForm(tuple(coeffs))

    def substitute(self, bindings: Mapping[str, Any]) -> 'BinaryForm':
        """对每个多项式系数做变量代入"""
        return self.map_coeffs(lambda c: c.substitute(bindings) if isinstance(c, MultiPoly) else c)

    def numeric(self) -> 'BinaryForm':
        """把常数多项式系数化为有理数，遇到非常数系数抛出 ValidationError"""
        return self.map_coeffs(lambda c: c.constant_value() if isinstance(c, MultiPoly) else c)

    # ==================== 序列化 ====================

    def to_dict(self) -> Dict:
        """JSON 编码 {"order": m, "cayley": [...]}"""
        return {
            'order': self.order,
            'cayley': [
                a.to_dict() if isinstance(a, MultiPoly) else format_rational(a)
                for a in self.cayley()
            ],
        }

    @classmethod
    def from_dict(cls, payload: Mapping) -> 'BinaryForm':
        """从 {"order": m, "cayley": [...]} 恢复"""
        if not isinstance(payload, Mapping) or 'cayley' not in payload:
            raise ValidationError("二元型 JSON 需要 cayley 字段")
        cayley = payload['cayley']
        if not isinstance(cayley, list) or not cayley:
            raise ValidationError("cayley 必须是非空列表")
        order = payload.get('order', len(cayley) - 1)
        if order != len(cayley) - 1:
            raise ValidationError(f"order={order} 与 cayley 长度 {len(cayley)} 不符")
        values = [MultiPoly.from_dict(a) if isinstance(a, Mapping) else a for a in cayley]
        return cls.from_cayley(values)

    def __str__(self) -> str:
        m = self.order
        pieces = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            monomial = '*'.join(
                part for part in (
                    '' if m - i == 0 else ('x1' if m - i == 1 else f"x1^{m - i}"),
                    '' if i == 0 else ('x2' if i == 1 else f"x2^{i}"),
                ) if part
            )
            coeff = f"({c})" if isinstance(c, MultiPoly) else format_rational(c)
            pieces.append(f"{coeff}*{monomial}" if monomial else coeff)
        return ' + '.join(pieces) if pieces else '0'


def form_pow(form: BinaryForm, exponent: int) -> BinaryForm:
    """
    二元型的幂

    Args:
        form: 底
        exponent: 非负整数

    Returns:
        阶数为 exponent * form.order 的二元型
    """
    if not isinstance(exponent, int) or exponent < 0:
        raise RangeError(f"幂次必须是非负整数: {exponent}")
    result = BinaryForm.constant(1)
    for _ in range(exponent):
        result = result.product(form)
    return result
