# Servicios de la deformación maleable sobre H ⊕ H
from core.services.deformation.doubled import (
    DoubledModel,
    build_doubled,
    rotation_matrix,
    beta_matrix,
    copy_swap_matrix,
    first_copy_projection,
    alpha,
    beta,
    embed_first_copy,
    project_first_copy,
    first_copy_defect,
    malleability_residuals,
    alpha_group_residual,
    flow_commutation_residual,
    expectation_oracle_residual,
)
from core.services.deformation.transversality import (
    transversality_residual,
    scalar_transversality_gap,
)
from core.services.deformation.sn_identity import (
    select_orthogonal_system,
    sn_operator,
    sn_identity_operator,
    default_test_vectors,
    sn_identity_check,
)

__all__ = [
    "DoubledModel",
    "build_doubled",
    "rotation_matrix",
    "beta_matrix",
    "copy_swap_matrix",
    "first_copy_projection",
    "alpha",
    "beta",
    "embed_first_copy",
    "project_first_copy",
    "first_copy_defect",
    "malleability_residuals",
    "alpha_group_residual",
    "flow_commutation_residual",
    "expectation_oracle_residual",
    "transversality_residual",
    "scalar_transversality_gap",
    "select_orthogonal_system",
    "sn_operator",
    "sn_identity_operator",
    "default_test_vectors",
    "sn_identity_check",
]
