# BinaryInvolutions 二元型对合计算库 - 精确运算层

from .errors import (
    InvolutionError, ValidationError, RangeError, TriadError,
    DegenerateFormError, VariableOrderError, UsageError, InternalCheckError,
)
from .rational import Rational, to_rational, format_rational
from .factorial import factorial, binomial, factorial_quotient
from .multipoly import MultiPoly

__all__ = [
    'InvolutionError', 'ValidationError', 'RangeError', 'TriadError',
    'DegenerateFormError', 'VariableOrderError', 'UsageError', 'InternalCheckError',
    'Rational', 'to_rational', 'format_rational',
    'factorial', 'binomial', 'factorial_quotient',
    'MultiPoly',
]
