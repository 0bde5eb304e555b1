# BinaryInvolutions 二元型对合计算库 - 中心轨迹层

from .centre import CentreSystem, centre_conditions, involution_residual, satisfies_involution
from .covariants import (
    CATALECTICANT_CONSTANT, beta_covariant, alpha_covariant, lambda_covariant, mu_covariant,
    quartic_centre_quadric, quartic_centre_discriminant, sextic_cubic_curve,
)

__all__ = [
    'CentreSystem', 'centre_conditions', 'involution_residual', 'satisfies_involution',
    'CATALECTICANT_CONSTANT', 'beta_covariant', 'alpha_covariant', 'lambda_covariant', 'mu_covariant',
    'quartic_centre_quadric', 'quartic_centre_discriminant', 'sextic_cubic_curve',
]
