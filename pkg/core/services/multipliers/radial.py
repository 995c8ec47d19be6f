# Descomposición de φ, norma radial |c1| + |c2| + ‖B‖₁ y aplicación del multiplicador

import logging
import math
from typing import Sequence

import numpy as np

from config.settings import settings
from core.domain.errors import CapacityError, InconsistentTailError, ValidationError
from core.domain.fock import FockVector
from core.domain.model import RepModel, Symbol
from core.domain.radial import (
    CutoffProjectionPhi,
    FinitePhi,
    GeneralPhi,
    GeometricPhi,
    RadialSymbol,
)
from core.domain.reports import CbNormReport, NormReport, ProjectionNormReport
from core.services.araki_woods.wick import operator_to_symbol, symbol_to_operator
from core.services.fock.operators import FockOperator
from core.services.multipliers.hankel import circulant_deviation, hankel_matrix

logger = logging.getLogger(__name__)

TAIL_ZERO = "zero"
TAIL_CONSTANT_ALTERNATING = "constant_alternating"


def decompose_phi(
    values: Sequence[complex], tail: str = TAIL_ZERO, c1: complex = 0.0, c2: complex = 0.0
) -> RadialSymbol:
    """
    φ(n) = c1 + c2(-1)^n + ψ(n). La cola la declara quien llama:
    'zero' (finitamente soportada) o 'constant_alternating' con (c1, c2) explícitos.
    """
    values = np.asarray(values, dtype=complex).reshape(-1)
    if tail == TAIL_ZERO:
        return RadialSymbol(psi=values)
    if tail != TAIL_CONSTANT_ALTERNATING:
        raise ValidationError(f"Tipo de cola desconocido: {tail}", field="tail")
    n = np.arange(values.size)
    psi = values - c1 - c2 * (-1.0) ** n
    if psi.size and abs(psi[-1]) > 1e-12:
        raise InconsistentTailError(float(abs(psi[-1])))
    return RadialSymbol(c1=c1, c2=c2, psi=psi)


def geometric_symbol(t: float, size: int = None) -> RadialSymbol:
    """ψ_t(k) = e^{-kt} truncada en N = ceil(geometric_tail / t)"""
    if t <= 0:
        raise ValidationError("t debe ser > 0", field="t")
    budget = settings.multipliers.hankel_max_size
    if size is None:
        # acotado antes de ceil: t subnormal da 30/t = inf
        size = math.ceil(min(settings.multipliers.geometric_tail / t, float(budget)))
    if size + 1 > budget:
        raise CapacityError(size + 1, budget, quantity="hankel_size")
    return RadialSymbol(psi=np.exp(-t * np.arange(size + 1)))


def cutoff_symbol(d: int) -> RadialSymbol:
    """δ_{<=d}: proyección sobre palabras de longitud <= d"""
    return RadialSymbol(psi=np.ones(d + 1))


def symbol_from_spec(spec) -> RadialSymbol:
    if isinstance(spec, FinitePhi):
        return decompose_phi(spec.values, TAIL_ZERO)
    if isinstance(spec, GeometricPhi):
        return geometric_symbol(spec.t)
    if isinstance(spec, CutoffProjectionPhi):
        return cutoff_symbol(spec.d)
    if isinstance(spec, GeneralPhi):
        return RadialSymbol(c1=spec.c1, c2=spec.c2, psi=spec.psi)
    raise ValidationError(f"Especificación de φ no soportada: {type(spec).__name__}", field="kind")


def radial_norm(s: RadialSymbol) -> NormReport:
    """|c1| + |c2| + ‖B‖₁ con B dimensionada al soporte completo"""
    hankel = hankel_matrix(s)
    return NormReport(
        value=abs(s.c1) + abs(s.c2) + hankel.trace_norm,
        method="trace-norm-svd",
        residual=0.0,
    )


def cb_norm_report(s: RadialSymbol) -> CbNormReport:
    hankel = hankel_matrix(s)
    return CbNormReport(
        c1=(s.c1.real, s.c1.imag),
        c2=(s.c2.real, s.c2.imag),
        support=s.support,
        hankel_size=hankel.size,
        hankel_trace_norm=hankel.trace_norm,
        truncated=hankel.truncated,
        norm=NormReport(
            value=abs(s.c1) + abs(s.c2) + hankel.trace_norm, method="trace-norm-svd"
        ),
    )


def projection_pd_norm(d: int, circulant: bool = True) -> ProjectionNormReport:
    """‖P_d‖_cb con su asintótica (4/π)d; ratio es NaN en d = 0"""
    if d < 0:
        raise ValidationError("d debe ser >= 0", field="d")
    value = radial_norm(cutoff_symbol(d)).value
    asymptote = 4.0 * d / np.pi
    ratio = value / asymptote if d > 0 else float("nan")
    return ProjectionNormReport(
        value=value,
        method="trace-norm-svd",
        d=d,
        asymptote=asymptote,
        ratio=ratio,
        circulant_max_deviation=circulant_deviation(d) if circulant else None,
    )


def apply_radial_multiplier(s: RadialSymbol, symbol: Symbol) -> Symbol:
    """m_φ a nivel de símbolo: el bloque de grado n se multiplica por φ(n)"""
    weights = s.values(symbol.space.max_degree + 1)
    vector: FockVector = symbol.vector.map_blocks(lambda n, block: weights[n] * block)
    return symbol.with_vector(vector)


def multiplier_operator(model: RepModel, s: RadialSymbol, x: FockOperator) -> FockOperator:
    """m_φ(x) reconstruido vía símbolo escalado y symbol_to_operator"""
    return symbol_to_operator(model, apply_radial_multiplier(s, operator_to_symbol(model, x)))
