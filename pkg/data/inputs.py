"""
BinaryInvolutions 二元型对合计算库 - 输入载荷

命令行的二元型可来自 JSON 文件（--f path.json）或内联 JSON（--f-json '{...}'）
"""
import json
from pathlib import Path
from typing import Any, List, Optional

from loguru import logger

from ring.errors import UsageError, ValidationError
from forms.binary_form import BinaryForm
from involution.involutor import Involutor
from involution.sign_sequence import SignSequence


def _decode(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"{source} 不是合法 JSON: {e}") from e


def load_form(path: Optional[str] = None, inline: Optional[str] = None, name: str = 'f') -> BinaryForm:
    """
    读取二元型

    Args:
        path: JSON 文件路径
        inline: 内联 JSON 字符串
        name: 参数名，用于错误信息

    Returns:
        BinaryForm
    """
    if (path is None) == (inline is None):
        raise UsageError(f"--{name} 与 --{name}-json 必须且只能给出一个")
    if path is not None:
        file_path = Path(path)
        if not file_path.exists():
            raise ValidationError(f"文件不存在: {path}")
        payload = _decode(file_path.read_text(encoding='utf-8'), str(file_path))
        logger.debug(f"从 {path} 读取二元型")
    else:
        payload = _decode(inline, f"--{name}-json")
    return BinaryForm.from_dict(payload)


def load_forms(text: str) -> List[BinaryForm]:
    """JSON 数组形式的二元型列表"""
    payload = _decode(text, 'factors')
    if not isinstance(payload, list):
        raise ValidationError("因子列表必须是 JSON 数组")
    return [BinaryForm.from_dict(item) for item in payload]


def load_signs(text: str) -> SignSequence:
    return SignSequence.parse(text)


def load_involutor(d: int, text: str) -> Involutor:
    """逗号分隔的 z 分量，如 "16,24/7,1/5" """
    return Involutor.parse(d, text)
