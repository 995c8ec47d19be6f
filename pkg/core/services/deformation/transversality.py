# Desigualdad de transversalidad en la norma de símbolos inducida por el estado

import logging

import numpy as np

from core.domain.errors import PreconditionError
from core.domain.model import Symbol
from core.services.deformation.doubled import DoubledModel, alpha, first_copy_defect, project_first_copy

logger = logging.getLogger(__name__)

FIRST_COPY_TOL = 1e-10


def transversality_residual(dm: DoubledModel, symbol: Symbol, s: float) -> float:
    """
    Holgura 2‖α_s(ξ) - Pα_s(ξ)‖ - ‖ξ - α_{2s}(ξ)‖ para ξ en la primera copia.
    Debe ser >= -1e-10; en grado 1 hay igualdad.
    """
    defect = first_copy_defect(dm, symbol)
    if defect > FIRST_COPY_TOL * max(1.0, symbol.vector.norm):
        raise PreconditionError(
            f"ξ no está soportado en la primera copia (‖ξ - Pξ‖ = {defect:.3e}).",
            check="first_copy",
            defect=defect,
        )
    moved = alpha(dm, s, symbol)
    projected = project_first_copy(dm, moved)
    lhs = 2.0 * (moved.vector - projected.vector).norm
    rhs = (symbol.vector - alpha(dm, 2 * s, symbol).vector).norm
    return float(lhs - rhs)


def scalar_transversality_gap(x, n: int) -> np.ndarray:
    """(2x - 1)^n - (2x^n - 1), no negativo para x ∈ [0, 1]"""
    x = np.asarray(x, dtype=float)
    return (2 * x - 1) ** n - (2 * x**n - 1)
