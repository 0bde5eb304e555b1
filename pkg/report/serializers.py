"""
BinaryInvolutions 二元型对合计算库 - JSON 编码

输出键排序、有理数规范化，保证相同输入得到逐字节相同的输出
"""
import json
from fractions import Fraction
from typing import Any

from ring.multipoly import MultiPoly
from ring.rational import format_rational


def encode(value: Any) -> Any:
    """把领域对象递归转换为 JSON 可表示的结构"""
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, MultiPoly) or hasattr(value, 'to_dict'):
        return value.to_dict()
    if isinstance(value, dict):
        return {str(key): encode(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(item) for item in value]
    raise TypeError(f"无法编码为 JSON: {type(value).__name__}")


def dumps(payload: Any) -> str:
    return json.dumps(encode(payload), sort_keys=True, ensure_ascii=False, indent=2)
