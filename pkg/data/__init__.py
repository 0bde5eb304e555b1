# BinaryInvolutions 二元型对合计算库 - 数据层

from .cache import CoefficientCache
from .inputs import load_form, load_forms, load_signs, load_involutor

__all__ = ['CoefficientCache', 'load_form', 'load_forms', 'load_signs', 'load_involutor']
