# Servicios del modelo de Araki-Woods libre
from core.services.araki_woods.model import (
    build_model,
    direct_sum,
    involution_apply,
    fixed_point_dimension,
    model_residuals,
    in_real_subspace,
)
from core.services.araki_woods.wick import (
    basis_vector,
    word_vectors,
    field_operator,
    wick_monomial,
    wick_operator,
    symbol_to_operator,
    operator_to_symbol,
    wick_recursion_residual,
    random_symbol,
)
from core.services.araki_woods.state import (
    catalan,
    two_point,
    two_point_formula,
    field_moment,
    semicircular_moment,
    flow_phases,
    modular_flow,
    flow_operator,
    conjugate_by_flow,
    flow_field_residual,
    state_invariance_residual,
    moment_table,
)

__all__ = [
    "build_model",
    "direct_sum",
    "involution_apply",
    "fixed_point_dimension",
    "model_residuals",
    "in_real_subspace",
    "basis_vector",
    "word_vectors",
    "field_operator",
    "wick_monomial",
    "wick_operator",
    "symbol_to_operator",
    "operator_to_symbol",
    "wick_recursion_residual",
    "random_symbol",
    "catalan",
    "two_point",
    "two_point_formula",
    "field_moment",
    "semicircular_moment",
    "flow_phases",
    "modular_flow",
    "flow_operator",
    "conjugate_by_flow",
    "flow_field_residual",
    "state_invariance_residual",
    "moment_table",
]
