# Servicios del espacio de Fock truncado
from core.services.fock.operators import (
    FockOperator,
    TensorOperator,
    make_fock,
    check_capacity,
    creation,
    annihilation,
    identity,
    zero,
    compose,
    product,
    scale,
    block_diagonal,
    degree_scaling,
    from_matrix,
    vacuum_expectation,
    tensor_vector,
)
from core.services.fock.norms import (
    operator_norm,
    power_iteration,
    trace_norm,
    export_operator_csv,
)
from core.services.fock.checks import (
    majf_check,
    check_orthonormal,
    toeplitz_residual,
    headroom_residual,
)

__all__ = [
    "FockOperator",
    "TensorOperator",
    "make_fock",
    "check_capacity",
    "creation",
    "annihilation",
    "identity",
    "zero",
    "compose",
    "product",
    "scale",
    "block_diagonal",
    "degree_scaling",
    "from_matrix",
    "vacuum_expectation",
    "tensor_vector",
    "operator_norm",
    "power_iteration",
    "trace_norm",
    "export_operator_csv",
    "majf_check",
    "check_orthonormal",
    "toeplitz_residual",
    "headroom_residual",
]
