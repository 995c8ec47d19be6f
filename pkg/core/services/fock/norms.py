# Normas de operador (‖·‖∞) y norma traza (‖·‖₁)

import logging
from pathlib import Path
from typing import Union

import numpy as np
import pandas as pd
from scipy import sparse

from config.settings import settings
from core.domain.errors import ConvergenceError
from core.domain.reports import NormReport
from core.services.fock.operators import FockOperator

logger = logging.getLogger(__name__)

OperatorLike = Union[FockOperator, np.ndarray, sparse.spmatrix]


def _as_matrix(x: OperatorLike):
    if isinstance(x, FockOperator):
        return x.matrix
    if sparse.issparse(x):
        return x.tocsr()
    return np.asarray(x, dtype=complex)


def operator_norm(x: OperatorLike, seed: int = 0) -> NormReport:
    """
    Mayor valor singular del operador truncado.
    SVD densa hasta svd_threshold, iteración de potencia sobre x*x por encima.
    """
    m = _as_matrix(x)
    size = max(m.shape) if m.ndim == 2 else 0
    if size == 0:
        return NormReport(value=0.0, method="exact-svd")
    if size <= settings.fock.svd_threshold:
        dense = m.toarray() if sparse.issparse(m) else m
        value = float(np.linalg.norm(dense, 2))
        return NormReport(value=value, method="exact-svd")
    return power_iteration(m, seed=seed)


def power_iteration(m, seed: int = 0, max_iter: int = None, tol: float = None) -> NormReport:
    """σ_max por iteración de potencia sobre m*m; criterio: deriva relativa del cociente de Rayleigh"""
    max_iter = max_iter or settings.fock.power_max_iter
    tol = tol or settings.fock.power_tol
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(m.shape[1]) + 1j * rng.standard_normal(m.shape[1])
    v /= np.linalg.norm(v)

    previous = np.inf
    drift = np.inf
    for iteration in range(1, max_iter + 1):
        mv = m @ v
        w = m.conj().T @ mv
        rayleigh = float(np.real(np.vdot(v, w)))
        norm_w = np.linalg.norm(w)
        if norm_w == 0.0:
            return NormReport(value=0.0, method="power-iteration", iterations=iteration, residual=0.0)
        drift = abs(rayleigh - previous) / max(rayleigh, np.finfo(float).tiny)
        if drift <= tol:
            residual = float(np.linalg.norm(w - rayleigh * v))
            value = float(np.sqrt(max(rayleigh, 0.0)))
            logger.debug(f"Iteración de potencia convergió en {iteration} pasos (σ={value:.12g})")
            return NormReport(
                value=value,
                method="power-iteration",
                iterations=iteration,
                residual=residual / max(value, 1.0),
            )
        previous = rayleigh
        v = w / norm_w
    raise ConvergenceError(max_iter, float(drift))


def trace_norm(m) -> float:
    """Suma de todos los valores singulares (SVD completa)"""
    dense = m.toarray() if sparse.issparse(m) else np.asarray(m)
    if dense.size == 0:
        return 0.0
    return float(np.sum(np.linalg.svd(dense, compute_uv=False)))


def export_operator_csv(x: OperatorLike, path: Union[str, Path]) -> Path:
    """
    Exporta la matriz densa en orden de base graduado-lexicográfico.
    Cada entrada compleja ocupa dos columnas (re, im), 17 dígitos significativos.
    """
    dense = _as_matrix(x)
    dense = dense.toarray() if sparse.issparse(dense) else dense
    n = dense.shape[1]
    columns = {}
    for j in range(n):
        columns[f"re_{j}"] = dense[:, j].real
        columns[f"im_{j}"] = dense[:, j].imag
    frame = pd.DataFrame(columns)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n", encoding="utf-8")
    logger.info(f"Operador {dense.shape} exportado a {path}")
    return path
