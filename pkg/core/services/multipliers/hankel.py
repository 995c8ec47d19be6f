# Matriz de Hankel B[i][j] = φ(i+j) - φ(i+j+2) y referencia circulante

import logging

import numpy as np
from scipy import linalg

from config.settings import settings
from core.domain.errors import CapacityError
from core.domain.radial import HankelData, RadialSymbol
from core.services.fock.norms import trace_norm

logger = logging.getLogger(__name__)


def second_differences(s: RadialSymbol, count: int) -> np.ndarray:
    """g(k) = ψ(k) - ψ(k+2) para k < count; c1 y c2 están en el núcleo"""
    psi = np.zeros(count + 2, dtype=complex)
    head = min(count + 2, len(s.psi))
    psi[:head] = s.psi[:head]
    return psi[:count] - psi[2 : count + 2]


def hankel_matrix(s: RadialSymbol, size: int = None) -> HankelData:
    """
    B de tamaño size (por defecto support + 1, que captura todo el soporte).
    Un tamaño menor se marca como truncado.
    """
    required = s.support + 1
    size = required if size is None else size
    truncated = size < required
    if truncated:
        logger.warning(
            f"Hankel de tamaño {size} no cubre el soporte de ψ (N={s.support}); resultado truncado"
        )
    budget = settings.multipliers.hankel_max_size
    if size > budget:
        raise CapacityError(size, budget, quantity="hankel_size")
    if size <= 0:
        return HankelData(size=0, matrix=np.zeros((0, 0)), trace_norm=0.0, truncated=truncated)
    g = second_differences(s, 2 * size - 1)
    matrix = linalg.hankel(g[:size], g[size - 1 :])
    if not np.any(np.imag(matrix)):
        matrix = np.real(matrix)
    return HankelData(
        size=size, matrix=matrix, trace_norm=trace_norm(matrix), truncated=truncated
    )


def circulant_reference(d: int) -> np.ndarray:
    """{|1 + e^{2iπk/(d+1)}| : k = 0..d} en orden descendente"""
    k = np.arange(d + 1)
    values = np.abs(1.0 + np.exp(2j * np.pi * k / (d + 1)))
    return np.sort(values)[::-1]


def circulant_deviation(d: int) -> float:
    """max |σ(B + e_dd) - referencia| con B la Hankel de δ_{<=d}"""
    s = RadialSymbol(psi=np.ones(d + 1))
    matrix = hankel_matrix(s, d + 1).matrix.astype(float)
    matrix[d, d] += 1.0
    singular = np.sort(np.linalg.svd(matrix, compute_uv=False))[::-1]
    return float(np.max(np.abs(singular - circulant_reference(d))))
