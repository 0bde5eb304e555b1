"""
BinaryInvolutions 二元型对合计算库 - 稀疏多元多项式

以 指数向量 -> 有理系数 的稀疏映射存储多项式。
变量表在构造时固定；两个多项式运算时，较短的变量表必须是较长变量表的子序列，
结果嵌入较长的变量表，否则抛出 VariableOrderError。
"""
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ring.errors import RangeError, ValidationError, VariableOrderError
from ring.rational import format_rational, to_rational

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def _is_subsequence(short: Tuple[str, ...], long: Tuple[str, ...]) -> bool:
    position = 0
    for name in long:
        if position < len(short) and short[position] == name:
            position += 1
    return position == len(short)


class MultiPoly:
    """有理数域上的不可变稀疏多元多项式"""

    __slots__ = ('_variables', '_terms')

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        """
        初始化多项式

        Args:
            variables: 变量名列表（有序，不可重复）
            terms: 指数向量 -> 系数
        """
        variables = tuple(str(name) for name in variables)
        if len(set(variables)) != len(variables):
            raise ValidationError(f"变量名重复: {variables}")

        normalized: Dict[Exponent, Fraction] = {}
        for exponents, coeff in (terms or {}).items():
            exponents = tuple(exponents)
            if any(isinstance(e, bool) or not isinstance(e, int) for e in exponents):
                raise ValidationError(f"指数必须是非负整数: {exponents}")
            if len(exponents) != len(variables) or any(e < 0 for e in exponents):
                raise ValidationError(f"指数向量 {exponents} 与变量表 {variables} 不匹配")
            value = normalized.get(exponents, Fraction(0)) + to_rational(coeff)
            if value:
                normalized[exponents] = value
            else:
                normalized.pop(exponents, None)

        self._variables = variables
        self._terms = normalized

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: Dict[Exponent, Fraction]) -> 'MultiPoly':
        # 调用方保证 terms 已规范化
        poly = object.__new__(cls)
        poly._variables = variables
        poly._terms = terms
        return poly

    # ==================== 构造 ====================

    @classmethod
    def constant(cls, variables: Sequence[str], value: Scalar) -> 'MultiPoly':
        """常数多项式"""
        variables = tuple(variables)
        value = to_rational(value)
        terms = {(0,) * len(variables): value} if value else {}
        return cls._raw(variables, terms)

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> 'MultiPoly':
        """变量表中的单个变量"""
        variables = tuple(variables)
        if name not in variables:
            raise ValidationError(f"变量 {name} 不在变量表 {variables} 中")
        exponents = tuple(1 if v == name else 0 for v in variables)
        return cls._raw(variables, {exponents: Fraction(1)})

    @classmethod
    def symbols(cls, variables: Sequence[str]) -> Tuple['MultiPoly', ...]:
        """按变量表依次返回各变量"""
        return tuple(cls.variable(variables, name) for name in variables)

    # ==================== 属性 ====================

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        """规范化后没有任何项"""
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(exponents) for exponents in self._terms)

    def constant_value(self) -> Fraction:
        """常数多项式的值，非常数时抛出 ValidationError"""
        if not self.is_constant():
            raise ValidationError(f"多项式不是常数: {self}")
        return next(iter(self._terms.values()), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(exponents) for exponents in self._terms), default=0)

    def degree(self, name: str) -> int:
        """某一变量的次数"""
        if name not in self._variables:
            return 0
        index = self._variables.index(name)
        return max((exponents[index] for exponents in self._terms), default=0)

    # ==================== 对齐 ====================

    def _embed(self, target: Tuple[str, ...]) -> Dict[Exponent, Fraction]:
        positions = [target.index(name) for name in self._variables]
        embedded = {}
        for exponents, coeff in self._terms.items():
            full = [0] * len(target)
            for position, e in zip(positions, exponents):
                full[position] = e
            embedded[tuple(full)] = coeff
        return embedded

    def _aligned(self, other: 'MultiPoly') -> Tuple[Tuple[str, ...], Mapping, Mapping]:
        if other._variables == self._variables:
            return self._variables, self._terms, other._terms
        if _is_subsequence(other._variables, self._variables):
            return self._variables, self._terms, other._embed(self._variables)
        if _is_subsequence(self._variables, other._variables):
            return other._variables, self._embed(other._variables), other._terms
        raise VariableOrderError(f"变量表不兼容: {self._variables} 与 {other._variables}")

    def _coerce(self, other) -> Optional['MultiPoly']:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.constant(self._variables, other)
        return None

    # ==================== 运算 ====================

    def __add__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        variables, left, right = self._aligned(other)
        result = dict(left)
        for exponents, coeff in right.items():
            value = result.get(exponents, 0) + coeff
            if value:
                result[exponents] = value
            else:
                result.pop(exponents, None)
        return MultiPoly._raw(variables, result)

    __radd__ = __add__

    def __neg__(self) -> 'MultiPoly':
        return MultiPoly._raw(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> 'MultiPoly':
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return MultiPoly._raw(self._variables, {})
            return MultiPoly._raw(self._variables, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        variables, left, right = self._aligned(other)
        result: Dict[Exponent, Fraction] = {}
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                exponents = tuple(x + y for x, y in zip(e1, e2))
                result[exponents] = result.get(exponents, 0) + c1 * c2
        return MultiPoly._raw(variables, {e: c for e, c in result.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'MultiPoly':
        if isinstance(other, MultiPoly):
            if not other.is_constant():
                raise ValidationError("多项式只能被常数整除")
            other = other.constant_value()
        if not isinstance(other, (int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("多项式除以零")
        divisor = Fraction(other)
        return MultiPoly._raw(self._variables, {e: c / divisor for e, c in self._terms.items()})

    def __pow__(self, exponent: int) -> 'MultiPoly':
        if not isinstance(exponent, int) or exponent < 0:
            raise RangeError(f"幂次必须是非负整数: {exponent}")
        result = MultiPoly.constant(self._variables, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        try:
            _, left, right = self._aligned(other)
        except VariableOrderError:
            return self.is_constant() and other.is_constant() and \
                self.constant_value() == other.constant_value()
        return left == right

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash(frozenset(
            (tuple((name, e) for name, e in zip(self._variables, exponents) if e), coeff)
            for exponents, coeff in self._terms.items()
        ))

    # ==================== 代入与提取 ====================

    def substitute(self, bindings: Mapping[str, Union['MultiPoly', Scalar]]) -> 'MultiPoly':
        """
        代入变量

        Args:
            bindings: 变量名 -> 多项式或有理数；不在变量表中的绑定被忽略

        Returns:
            代入后的多项式（仍以本多项式的变量表为基础）
        """
        bound = [(index, name) for index, name in enumerate(self._variables) if name in bindings]
        if not bound:
            return self
        bound_indices = {index for index, _ in bound}
        power_cache: Dict[Tuple[str, int], MultiPoly] = {}

        def power(name: str, e: int) -> MultiPoly:
            key = (name, e)
            if key not in power_cache:
                value = bindings[name]
                if not isinstance(value, MultiPoly):
                    value = MultiPoly.constant(self._variables, value)
                power_cache[key] = value ** e
            return power_cache[key]

        result = MultiPoly.constant(self._variables, 0)
        for exponents, coeff in self._terms.items():
            free = tuple(0 if index in bound_indices else e for index, e in enumerate(exponents))
            term = MultiPoly._raw(self._variables, {free: coeff})
            for index, name in bound:
                if exponents[index]:
                    term = term * power(name, exponents[index])
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """全部变量赋值后求值"""
        return self.substitute(values).constant_value()

    def coefficients_in(self, names: Sequence[str]) -> Dict[Exponent, 'MultiPoly']:
        """
        按指定变量的指数分组

        Args:
            names: 作为主变量的变量名

        Returns:
            主变量指数向量 -> 余下变量上的系数多项式（变量表不变）
        """
        indices = [self._variables.index(name) for name in names if name in self._variables]
        missing = [name for name in names if name not in self._variables]
        if missing:
            raise VariableOrderError(f"变量 {missing} 不在变量表 {self._variables} 中")
        groups: Dict[Exponent, Dict[Exponent, Fraction]] = {}
        for exponents, coeff in self._terms.items():
            key = tuple(exponents[index] for index in indices)
            rest = tuple(0 if index in indices else e for index, e in enumerate(exponents))
            groups.setdefault(key, {})[rest] = coeff
        return {key: MultiPoly._raw(self._variables, terms) for key, terms in groups.items()}

    # ==================== 序列化 ====================

    def _sorted_terms(self) -> List[Tuple[Exponent, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))

    def to_dict(self) -> Dict:
        """JSON 编码：变量表加按次数降序排列的项"""
        return {
            'variables': list(self._variables),
            'terms': [
                {'exponents': list(exponents), 'coeff': format_rational(coeff)}
                for exponents, coeff in self._sorted_terms()
            ],
        }

    @classmethod
    def from_dict(cls, payload: Mapping) -> 'MultiPoly':
        """从 to_dict 的输出恢复"""
        try:
            variables = payload['variables']
            entries: Iterable[Mapping] = payload['terms']
            terms: Dict[Exponent, Fraction] = {}
            for entry in entries:
                exponents = tuple(entry['exponents'])
                terms[exponents] = terms.get(exponents, Fraction(0)) + to_rational(entry['coeff'])
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"多项式 JSON 格式错误: {e}") from e
        return cls(variables, terms)

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        pieces = []
        for exponents, coeff in self._sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self._variables, exponents) if e
            ]
            magnitude = abs(coeff)
            if factors and magnitude == 1:
                body = '*'.join(factors)
            else:
                body = '*'.join([format_rational(magnitude)] + factors)
            sign = '-' if coeff < 0 else '+'
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self})"
