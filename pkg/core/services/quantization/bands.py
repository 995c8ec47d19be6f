# Aproximantes de rango finito por bandas espectrales de A

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from config.settings import settings
from core.domain.contraction import ContractionSpec
from core.domain.errors import PreconditionError, ValidationError
from core.domain.model import RepModel
from core.services.quantization.functor import contraction_spec

logger = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-12


@dataclass(frozen=True)
class BandUnit:
    """Bloque mínimo seleccionable: un par de autovalores o la parte trivial"""

    name: str
    projection: np.ndarray

    @property
    def rank(self) -> int:
        return int(round(np.trace(self.projection).real))


def _pair_projection(model: RepModel, pair: int) -> np.ndarray:
    projection = np.zeros((model.dim, model.dim), dtype=complex)
    for index in model.pair_indices[pair]:
        projection[index, index] = 1.0
    return projection


def _trivial_unit(model: RepModel, family: Sequence[np.ndarray]) -> Optional[BandUnit]:
    """Proyección sobre span(P₀F + I P₀F); en la parte trivial I es la conjugación"""
    if not model.trivial_indices:
        return None
    mask = np.zeros(model.dim)
    mask[list(model.trivial_indices)] = 1.0
    columns = []
    for f in family:
        p0 = mask * np.asarray(f, dtype=complex)
        columns.extend([p0, np.conj(p0)])
    if not columns:
        return None
    basis = linalg.orth(np.column_stack(columns))
    if basis.shape[1] == 0:
        return None
    return BandUnit(name="trivial", projection=basis @ basis.conj().T)


def band_units(model: RepModel, family: Sequence[np.ndarray]) -> List[BandUnit]:
    units = [
        BandUnit(
            name=f"pair{k}(λ={model.pair_eigenvalue(k):g})",
            projection=_pair_projection(model, k),
        )
        for k in range(len(model.pair_indices))
    ]
    trivial = _trivial_unit(model, family)
    if trivial is not None:
        units.append(trivial)
    return units


def approximation_residual(t: np.ndarray, family: Sequence[np.ndarray]) -> float:
    """max_f ‖Tf - f‖ / ‖f‖ sobre los f no nulos"""
    worst = 0.0
    for f in family:
        f = np.asarray(f, dtype=complex)
        norm = np.linalg.norm(f)
        if norm == 0:
            continue
        worst = max(worst, float(np.linalg.norm(t @ f - f) / norm))
    return worst


def _combine(model: RepModel, units: Sequence[BandUnit]) -> np.ndarray:
    total = np.zeros((model.dim, model.dim), dtype=complex)
    for unit in units:
        total += unit.projection
    return total


def _exhaustive(
    model: RepModel, units: List[BandUnit], family, epsilon: float
) -> Tuple[BandUnit, ...]:
    best: Optional[Tuple[int, Tuple[BandUnit, ...]]] = None
    for size in range(len(units) + 1):
        for subset in combinations(units, size):
            rank = sum(unit.rank for unit in subset)
            if best is not None and rank >= best[0]:
                continue
            if approximation_residual(_combine(model, subset), family) <= epsilon + RESIDUAL_TOL:
                best = (rank, subset)
    # El conjunto completo siempre cumple (T = Id sobre span(F))
    return best[1] if best is not None else tuple(units)


def _greedy(model: RepModel, units: List[BandUnit], family, epsilon: float) -> Tuple[BandUnit, ...]:
    chosen: List[BandUnit] = []
    remaining = list(units)
    residual = approximation_residual(_combine(model, chosen), family)
    while residual > epsilon + RESIDUAL_TOL and remaining:
        scored = [
            (approximation_residual(_combine(model, chosen + [unit]), family), unit.rank, i)
            for i, unit in enumerate(remaining)
        ]
        residual, _, index = min(scored)
        chosen.append(remaining.pop(index))
    return tuple(chosen)


def band_approximant(
    model: RepModel, family: Sequence[np.ndarray], epsilon: float
) -> ContractionSpec:
    """
    Selección de bandas de rango mínimo con ‖Tf - f‖ <= ε‖f‖ para todo f de F.

    Las bandas son espacios propios exactos de A (δ = 0), así que el factor
    1/(1 + 2δ/λ) vale 1 y T es una suma de proyecciones compatibles con I.
    """
    if epsilon <= 0:
        raise PreconditionError(f"ε debe ser > 0 (recibido {epsilon}).", check="epsilon")
    family = [np.asarray(f, dtype=complex).reshape(-1) for f in family]
    for f in family:
        if f.shape != (model.dim,):
            raise ValidationError(
                f"Vector de dimensión {f.size} en F, se esperaba d={model.dim}.", field="family"
            )

    units = band_units(model, family)
    limit = settings.multipliers.band_exhaustive_limit
    if len(units) <= limit:
        selected = _exhaustive(model, units, family, epsilon)
    else:
        logger.warning(
            f"{len(units)} bandas superan el límite exhaustivo ({limit}); selección voraz"
        )
        selected = _greedy(model, units, family, epsilon)

    matrix = _combine(model, selected)
    spec = contraction_spec(matrix, model, bands=tuple(unit.name for unit in selected))
    logger.debug(
        f"band_approximant: ε={epsilon:g}, bandas={spec.bands}, rango={spec.rank}, "
        f"defecto I={spec.i_defect:.1e}"
    )
    return spec


def band_operator(
    model: RepModel, pairs: Sequence[int], delta: float
) -> Tuple[ContractionSpec, float]:
    """
    T_E = (1/(1 + 2δ/λ))(P_E ⊕ I P_E I) para una banda de anchura 2δ que agrupa
    los pares indicados (λ = mínimo de la banda).

    Devuelve T_E y ‖T_E - (P_E ⊕ J P_E J)‖, que queda por debajo de 4δ/λ.
    """
    if delta < 0:
        raise ValidationError(f"δ debe ser >= 0 (recibido {delta}).", field="delta")
    if not pairs:
        raise PreconditionError("La banda debe contener al menos un par.", check="band")
    for k in pairs:
        if not 0 <= k < len(model.pair_indices):
            raise PreconditionError(f"Par {k} inexistente en el modelo.", check="band")
    lambdas = [model.pair_eigenvalue(k) for k in pairs]
    lam = min(lambdas)
    if max(lambdas) - lam > 2 * delta + RESIDUAL_TOL:
        raise PreconditionError(
            f"Los pares {list(pairs)} no caben en una banda de anchura 2δ={2 * delta:g}.",
            check="band_width",
        )

    exact = sum(_pair_projection(model, k) for k in pairs)
    factor = 1.0 / (1.0 + 2.0 * delta / lam)
    matrix = factor * exact
    deviation = float(np.linalg.norm(matrix - exact, 2))
    names = tuple(f"pair{k}(λ={model.pair_eigenvalue(k):g})" for k in pairs)
    return contraction_spec(matrix, model, bands=names), deviation
