# BinaryInvolutions 二元型对合计算库 - 对合层

from .sign_sequence import SignSequence, all_sign_sequences
from .involutor import Involutor, geometric_involutor, improper_involutor, z_from_sign, enumerate_involutors
from .system import QuadraticSystem, build_sys
from .sigma import sigma_apply, sigma_product_form
from .verification import verify_involutor, verify_many
from .canonical import CanonicalBasis, canonical_basis, canonical_check

__all__ = [
    'SignSequence', 'all_sign_sequences',
    'Involutor', 'geometric_involutor', 'improper_involutor', 'z_from_sign', 'enumerate_involutors',
    'QuadraticSystem', 'build_sys',
    'sigma_apply', 'sigma_product_form',
    'verify_involutor', 'verify_many',
    'CanonicalBasis', 'canonical_basis', 'canonical_check',
]
