# BinaryInvolutions 二元型对合计算库 - 输出层

from .serializers import dumps, encode
from .templates import ResultTemplates
from .generator import PaperCheckGenerator

__all__ = ['dumps', 'encode', 'ResultTemplates', 'PaperCheckGenerator']
