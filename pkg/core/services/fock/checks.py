# Chequeos de identidades sobre el espacio de Fock truncado

import logging
from dataclasses import replace
from typing import Sequence

import numpy as np

from config.settings import settings
from core.domain.errors import PreconditionError
from core.domain.fock import FockSpace
from core.domain.reports import MajfReport
from core.services.fock.norms import operator_norm
from core.services.fock.operators import (
    FockOperator,
    annihilation,
    compose,
    creation,
    identity,
)

logger = logging.getLogger(__name__)

# Tolerancia del chequeo de Gram para familias ortonormales
GRAM_TOL = 1e-10


def check_orthonormal(family: np.ndarray, name: str = "family") -> np.ndarray:
    family = np.atleast_2d(np.asarray(family, dtype=complex))
    gram = family.conj() @ family.T
    defect = float(np.max(np.abs(gram - np.eye(family.shape[0])))) if family.size else 0.0
    if defect > GRAM_TOL:
        raise PreconditionError(
            f"La familia '{name}' no es ortonormal (defecto de Gram {defect:.3e}).",
            check="orthonormal",
            defect=defect,
        )
    return family


def toeplitz_residual(space: FockSpace, f, e) -> float:
    """max |ℓ(f)*ℓ(e) - ⟨f, e⟩·Id| entrada a entrada"""
    product = compose(annihilation(space, f), creation(space, e))
    expected = complex(np.vdot(np.asarray(f, dtype=complex), np.asarray(e, dtype=complex)))
    diff = product.matrix - expected * identity(space).matrix
    return float(np.max(np.abs(diff.toarray()))) if diff.nnz else 0.0


def headroom_residual(op: FockOperator, extra: int) -> float:
    """
    Compara la evaluación con holgura en L con la de L + extra comprimida a grado <= L.
    """
    larger = replace(op, space=op.space.with_max_degree(op.space.max_degree + extra))
    n = op.space.total_dim
    diff = op.matrix - larger.matrix[:n, :n]
    return float(np.max(np.abs(diff.toarray()))) if diff.nnz else 0.0


def majf_check(
    space: FockSpace,
    alpha: Sequence[complex],
    e: np.ndarray,
    f: np.ndarray,
) -> MajfReport:
    """
    Normas de (1/n)Σ α_i ℓ(e_i)ℓ(f_i)* (cota 1/n) y (1/n)Σ α_i ℓ(e_i)ℓ(f_i) (cota 1/√n).
    """
    alpha = np.asarray(alpha, dtype=complex).reshape(-1)
    n = alpha.size
    e = check_orthonormal(e, "e")
    f = check_orthonormal(f, "f")
    if e.shape[0] != n or f.shape[0] != n:
        raise PreconditionError(
            f"Se esperaban {n} vectores en cada familia.", check="family_size"
        )
    if np.any(np.abs(alpha) > 1.0 + settings.fock.identity_tol):
        raise PreconditionError("Los coeficientes α deben cumplir |α_i| <= 1.", check="alpha")

    mixed = FockOperator.sum(
        [
            (alpha[i] / n) * compose(creation(space, e[i]), annihilation(space, f[i]))
            for i in range(n)
        ]
    )
    raising = FockOperator.sum(
        [(alpha[i] / n) * compose(creation(space, e[i]), creation(space, f[i])) for i in range(n)]
    )
    mixed_norm = operator_norm(mixed).value
    raising_norm = operator_norm(raising).value
    report = MajfReport(
        n=n,
        creation_annihilation_norm=mixed_norm,
        creation_creation_norm=raising_norm,
        creation_annihilation_slack=1.0 / n - mixed_norm,
        creation_creation_slack=1.0 / np.sqrt(n) - raising_norm,
    )
    logger.debug(
        f"majf n={n}: slacks {report.creation_annihilation_slack:.3e}, "
        f"{report.creation_creation_slack:.3e}"
    )
    return report
