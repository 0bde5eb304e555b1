"""
BinaryInvolutions 二元型对合计算库 - 符号序列

长度为 d+1 的 ±1 序列，满足 s_{d-i} = (-1)^d s_i，由前段 s_0..s_n 唯一确定
"""
import itertools
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ring.errors import ValidationError
from ring.rational import minus_one_pow

_SYMBOLS = {'+': 1, '-': -1}


@dataclass(frozen=True)
class SignSequence:
    """符号序列"""
    d: int
    signs: Tuple[int, ...]

    def __post_init__(self):
        signs = tuple(self.signs)
        if self.d < 0:
            raise ValidationError(f"d 必须非负: {self.d}")
        if len(signs) != self.d + 1:
            raise ValidationError(f"d={self.d} 需要 {self.d + 1} 个符号，收到 {len(signs)}")
        if any(s not in (1, -1) for s in signs):
            raise ValidationError(f"符号只能是 ±1: {signs}")
        parity = minus_one_pow(self.d)
        for i in range(self.d + 1):
            if signs[self.d - i] != parity * signs[i]:
                raise ValidationError(f"{_render(signs)} 不满足 s_(d-i) = (-1)^d s_i（i={i}）")
        object.__setattr__(self, 'signs', signs)

    @classmethod
    def parse(cls, text: str) -> 'SignSequence':
        """由 '+'/'-' 字符串构造，校验对称性而不自动补全"""
        text = (text or '').strip()
        if not text or any(ch not in _SYMBOLS for ch in text):
            raise ValidationError(f"符号序列只能由 '+' 和 '-' 组成: {text!r}")
        return cls(len(text) - 1, tuple(_SYMBOLS[ch] for ch in text))

    @classmethod
    def from_segment(cls, d: int, segment: Sequence[int]) -> 'SignSequence':
        """由前段 s_0..s_n 补全"""
        n = d // 2
        segment = tuple(segment)
        if len(segment) != n + 1:
            raise ValidationError(f"d={d} 的前段长度应为 {n + 1}，收到 {len(segment)}")
        signs = list(segment) + [0] * (d - n)
        parity = minus_one_pow(d)
        for i in range(n + 1, d + 1):
            signs[i] = parity * signs[d - i]
        return cls(d, tuple(signs))

    @classmethod
    def gamma(cls, d: int) -> 'SignSequence':
        """几何对合子对应的序列：奇数 d 为 (-,+,...,-,+)，偶数 d 为 (+,-,...,-,+)"""
        if d % 2:
            return cls(d, tuple(minus_one_pow(i + 1) for i in range(d + 1)))
        return cls(d, tuple(minus_one_pow(i) for i in range(d + 1)))

    @classmethod
    def all_plus(cls, d: int) -> 'SignSequence':
        """(+,...,+)，仅偶数 d 合法"""
        return cls(d, (1,) * (d + 1))

    @property
    def n(self) -> int:
        return self.d // 2

    @property
    def segment(self) -> Tuple[int, ...]:
        return self.signs[:self.n + 1]

    def negated(self) -> 'SignSequence':
        return SignSequence(self.d, tuple(-s for s in self.signs))

    def plus_indices(self) -> Tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.signs) if s == 1)

    def minus_indices(self) -> Tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.signs) if s == -1)

    def __str__(self) -> str:
        return _render(self.signs)


def _render(signs: Sequence[int]) -> str:
    return ''.join('+' if s == 1 else '-' for s in signs)


def all_sign_sequences(d: int) -> List[SignSequence]:
    """按前段字典序（'+' < '-'）列出全部 2^{n+1} 个符号序列"""
    n = d // 2
    return [SignSequence.from_segment(d, segment) for segment in itertools.product((1, -1), repeat=n + 1)]
