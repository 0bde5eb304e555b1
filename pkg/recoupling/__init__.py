# BinaryInvolutions 二元型对合计算库 - 重耦系数层

from .halfint import HalfInt, is_triad
from .sqrt_rational import SqrtRational
from .sixj import triangle_delta_sq, racah_6j, tetra_cg, alpha_tilde, normalisation_factor, tetra_from_sixj
from .theta import ThetaTable, theta_coefficients
from .omega import omega, expand_compound, CompoundExpansion
from .transition import transition_G, transition_matrix

__all__ = [
    'HalfInt', 'is_triad', 'SqrtRational',
    'triangle_delta_sq', 'racah_6j', 'tetra_cg', 'alpha_tilde', 'normalisation_factor', 'tetra_from_sixj',
    'ThetaTable', 'theta_coefficients',
    'omega', 'expand_compound', 'CompoundExpansion',
    'transition_G', 'transition_matrix',
]
