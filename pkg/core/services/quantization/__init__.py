# Servicios de cuantización de contracciones
from core.services.quantization.functor import (
    iti,
    i_compatibility_defect,
    check_compatible,
    contraction_spec,
    tensor_power,
    apply_tensor_power,
    first_quantization,
    quantize_vector,
    second_quantize_symbol,
    random_compatible_contraction,
    monomial_operator,
    toeplitz_functor_check,
    functoriality_residual,
    conjugation_commutation_residual,
)
from core.services.quantization.bands import (
    BandUnit,
    band_units,
    approximation_residual,
    band_approximant,
    band_operator,
)
from core.services.quantization.cmap import (
    CmapMap,
    cmap_map,
    probe_residual,
    cmap_net_element,
    haagerup_split,
)

__all__ = [
    "iti",
    "i_compatibility_defect",
    "check_compatible",
    "contraction_spec",
    "tensor_power",
    "apply_tensor_power",
    "first_quantization",
    "quantize_vector",
    "second_quantize_symbol",
    "random_compatible_contraction",
    "monomial_operator",
    "toeplitz_functor_check",
    "functoriality_residual",
    "conjugation_commutation_residual",
    "BandUnit",
    "band_units",
    "approximation_residual",
    "band_approximant",
    "band_operator",
    "CmapMap",
    "cmap_map",
    "probe_residual",
    "cmap_net_element",
    "haagerup_split",
]
