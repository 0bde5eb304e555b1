# BinaryInvolutions 二元型对合计算库 - 二元型层

from .binary_form import BinaryForm, form_pow
from .transvectant import transvectant, delta
from .substitution import unimodular_substitute
from .covariants import quartic_covariants, j_invariant
from .generic import generic_form, generic_quadratic, quadratic_over, symbolic_pair

__all__ = [
    'BinaryForm', 'form_pow', 'transvectant', 'delta', 'unimodular_substitute',
    'quartic_covariants', 'j_invariant',
    'generic_form', 'generic_quadratic', 'quadratic_over', 'symbolic_pair',
]
