# Servicios de multiplicadores radiales
from core.services.multipliers.hankel import (
    second_differences,
    hankel_matrix,
    circulant_reference,
    circulant_deviation,
)
from core.services.multipliers.radial import (
    TAIL_ZERO,
    TAIL_CONSTANT_ALTERNATING,
    decompose_phi,
    geometric_symbol,
    cutoff_symbol,
    symbol_from_spec,
    radial_norm,
    cb_norm_report,
    projection_pd_norm,
    apply_radial_multiplier,
    multiplier_operator,
)
from core.services.multipliers.net import (
    haagerup_net,
    net_symbol,
    truncated_geometric,
    telescoping_estimate,
    degree_projection_norm,
    is_nonincreasing,
)
from core.services.multipliers.toeplitz import ToeplitzWitness, toeplitz_lower_bound

__all__ = [
    "second_differences",
    "hankel_matrix",
    "circulant_reference",
    "circulant_deviation",
    "TAIL_ZERO",
    "TAIL_CONSTANT_ALTERNATING",
    "decompose_phi",
    "geometric_symbol",
    "cutoff_symbol",
    "symbol_from_spec",
    "radial_norm",
    "cb_norm_report",
    "projection_pd_norm",
    "apply_radial_multiplier",
    "multiplier_operator",
    "haagerup_net",
    "net_symbol",
    "truncated_geometric",
    "telescoping_estimate",
    "degree_projection_norm",
    "is_nonincreasing",
    "ToeplitzWitness",
    "toeplitz_lower_bound",
]
