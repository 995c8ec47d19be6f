# Construcción del modelo (A, J, I, K_R) a partir de una RepSpec

import logging
from typing import Dict, List

import numpy as np
from scipy import linalg

from core.domain.errors import PreconditionError
from core.domain.model import RepModel, RepSpec
from core.services.fock.operators import make_fock

logger = logging.getLogger(__name__)


def _pair_kr_vectors(d: int, plus: int, minus: int, lam: float) -> List[np.ndarray]:
    """Base real de fix(I) en el par (e₊, e₋): I e₊ = λ^{-1/2} e₋, I e₋ = λ^{1/2} e₊"""
    norm = np.sqrt(1.0 + lam)
    first = np.zeros(d, dtype=complex)
    first[plus], first[minus] = np.sqrt(lam) / norm, 1.0 / norm
    second = np.zeros(d, dtype=complex)
    second[plus], second[minus] = -1j * np.sqrt(lam) / norm, 1j / norm
    return [first, second]


def build_model(spec: RepSpec, max_degree: int = None) -> RepModel:
    """
    Layout determinista: pares (+, -) por multiplicidad, luego índices triviales.
    I ξ = M conj(ξ) con M = S A^{-1/2} (S = permutación que intercambia cada par).
    """
    lambdas: List[float] = []
    for pair in spec.pairs:
        if not np.isfinite(pair.lambda_) or pair.lambda_ <= 1.0:
            raise PreconditionError(
                f"λ={pair.lambda_} no válido: los pares requieren λ > 1 (usar trivial_dim para λ=1).",
                check="lambda",
                value=pair.lambda_,
            )
        lambdas.extend([pair.lambda_] * pair.multiplicity)

    d = spec.dim
    eigenvalues = np.ones(d)
    swap = np.arange(d)
    pair_indices = []
    kr_basis: List[np.ndarray] = []
    for k, lam in enumerate(lambdas):
        plus, minus = 2 * k, 2 * k + 1
        eigenvalues[plus], eigenvalues[minus] = lam, 1.0 / lam
        swap[plus], swap[minus] = minus, plus
        pair_indices.append((plus, minus))
        kr_basis.extend(_pair_kr_vectors(d, plus, minus, lam))
    trivial = tuple(range(2 * len(lambdas), d))
    for index in trivial:
        vector = np.zeros(d, dtype=complex)
        vector[index] = 1.0
        kr_basis.append(vector)

    s_matrix = np.eye(d)[swap]
    involution_matrix = s_matrix @ np.diag(eigenvalues**-0.5)

    space = make_fock(d, spec.max_degree if max_degree is None else max_degree)
    model = RepModel(
        spec=spec,
        space=space,
        eigenvalues=eigenvalues,
        swap=swap,
        involution_matrix=involution_matrix,
        kr_basis=tuple(kr_basis),
        pair_indices=tuple(pair_indices),
        trivial_indices=trivial,
    )
    logger.debug(f"Modelo construido: d={d}, pares={len(lambdas)}, L={space.max_degree}")
    return model


def direct_sum(first: RepModel, second: RepModel, max_degree: int = None) -> RepModel:
    """
    Modelo sobre H₁ ⊕ H₂: copia 1 en índices 0..d₁-1, copia 2 a continuación.
    Cada copia conserva su estructura de pares.
    """
    d1 = first.dim
    d = d1 + second.dim
    matrix = np.zeros((d, d))
    matrix[:d1, :d1] = first.involution_matrix
    matrix[d1:, d1:] = second.involution_matrix

    def pad(vector: np.ndarray, offset: int) -> np.ndarray:
        out = np.zeros(d, dtype=complex)
        out[offset : offset + vector.size] = vector
        return out

    spec = RepSpec(
        pairs=list(first.spec.pairs) + list(second.spec.pairs),
        trivial_dim=first.spec.trivial_dim + second.spec.trivial_dim,
        max_degree=first.max_degree if max_degree is None else max_degree,
    )
    return RepModel(
        spec=spec,
        space=make_fock(d, spec.max_degree),
        eigenvalues=np.concatenate([first.eigenvalues, second.eigenvalues]),
        swap=np.concatenate([first.swap, second.swap + d1]),
        involution_matrix=matrix,
        kr_basis=tuple(pad(v, 0) for v in first.kr_basis)
        + tuple(pad(v, d1) for v in second.kr_basis),
        pair_indices=first.pair_indices
        + tuple((p + d1, m + d1) for p, m in second.pair_indices),
        trivial_indices=first.trivial_indices + tuple(i + d1 for i in second.trivial_indices),
    )


def involution_apply(model: RepModel, xi) -> np.ndarray:
    """ē = I ξ (conjugado-lineal)"""
    return model.involution(xi)


def fixed_point_dimension(model: RepModel, tol: float = 1e-10) -> int:
    """
    Dimensión real de fix(I): con ξ = x + iy, Iξ = ξ equivale a
    (M - 1)x = 0 y (-M - 1)y = 0.
    """
    m = model.involution_matrix
    eye = np.eye(model.dim)
    system = linalg.block_diag(m - eye, -m - eye)
    return int(linalg.null_space(system, rcond=tol).shape[1])


def model_residuals(model: RepModel) -> Dict[str, float]:
    """Residuos de JAJ = A^{-1}, I∘I = Id, I*I = A^{-1} y Iξ = ξ en la base de K_R"""
    a = model.a_matrix
    a_inv = np.diag(1.0 / model.eigenvalues)
    j = model.j_matrix
    m = model.involution_matrix
    kr = max(
        (float(np.max(np.abs(model.involution(v) - v))) for v in model.kr_basis), default=0.0
    )
    return {
        "jaj": float(np.max(np.abs(j @ a @ j.T - a_inv))),
        "ii": float(np.max(np.abs(m @ np.conj(m) - np.eye(model.dim)))),
        "istar_i": float(np.max(np.abs(m.conj().T @ m - a_inv))),
        "kr_fixed": kr,
    }


def in_real_subspace(model: RepModel, xi, tol: float = 1e-10) -> bool:
    xi = np.asarray(xi, dtype=complex)
    return float(np.linalg.norm(model.involution(xi) - xi)) <= tol * max(1.0, np.linalg.norm(xi))
