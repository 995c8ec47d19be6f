# Red de Haagerup: φ_n = ψ_t·δ_{<=d} con t = 1/n y certificado ‖m_φ‖_cb <= 1 + 1/n

import logging
import math

import numpy as np

from config.settings import settings
from core.domain.errors import SearchCapError, ValidationError
from core.domain.radial import RadialSymbol
from core.domain.reports import HaagerupNetReport
from core.services.multipliers.radial import radial_norm
from utils.metrics import timed

logger = logging.getLogger(__name__)

# Cuántos d posteriores se revisan para la monotonía del certificado
TAIL_CHECK = 5


def truncated_geometric(t: float, d: int) -> RadialSymbol:
    """ψ_t·δ_{<=d}"""
    return RadialSymbol(psi=np.exp(-t * np.arange(d + 1)))


def degree_projection_norm(k: int) -> float:
    """‖δ_k‖_cb, norma de la proyección sobre palabras de longitud exactamente k"""
    psi = np.zeros(k + 1)
    psi[k] = 1.0
    return radial_norm(RadialSymbol(psi=psi)).value


def telescoping_estimate(t: float, d: int) -> float:
    """Σ_{k>d} e^{-kt}‖δ_k‖_cb hasta que e^{-kt} cae por debajo de la cola geométrica"""
    last = max(d + 1, math.ceil(settings.multipliers.geometric_tail / t))
    return float(
        sum(np.exp(-k * t) * degree_projection_norm(k) for k in range(d + 1, last + 1))
    )


@timed("haagerup_net")
def haagerup_net(n: int, telescoping: bool = False, cap: int = None) -> HaagerupNetReport:
    """
    Búsqueda lineal del menor d >= n con radial_norm(ψ_t·δ_{<=d}) <= 1 + 1/n.

    El corte δ_{<=0} certifica 1 para cualquier t sin aproximar ψ_t, por eso la
    búsqueda arranca en la escala de decaimiento d = n = 1/t.
    Los certificados de d..d+5 se reportan para la comprobación de monotonía.
    """
    if n < 1:
        raise ValidationError(f"n debe ser >= 1 (recibido {n}).", field="n")
    cap = cap or settings.multipliers.haagerup_search_cap
    t = 1.0 / n
    target = 1.0 + 1.0 / n
    best = float("inf")
    for d in range(n, cap + 1):
        certificate = radial_norm(truncated_geometric(t, d)).value
        best = min(best, certificate)
        if certificate <= target:
            tail = [certificate] + [
                radial_norm(truncated_geometric(t, d + j)).value for j in range(1, TAIL_CHECK + 1)
            ]
            logger.info(f"haagerup_net(n={n}): t={t:.4g}, d={d}, certificado={certificate:.12g}")
            return HaagerupNetReport(
                n=n,
                t=t,
                d=d,
                certificate=certificate,
                tail_certificates=tail,
                telescoping_estimate=telescoping_estimate(t, d) if telescoping else None,
            )
    raise SearchCapError(n, cap, best)


def net_symbol(report: HaagerupNetReport) -> RadialSymbol:
    return truncated_geometric(report.t, report.d)


def is_nonincreasing(values, tol: float = 1e-12) -> bool:
    return all(b <= a + tol for a, b in zip(values, values[1:]))
