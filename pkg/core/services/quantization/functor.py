# Primera y segunda cuantización de contracciones

import logging
from functools import reduce
from typing import Sequence, Tuple, Union

import numpy as np

from config.settings import settings
from core.domain.contraction import ContractionSpec
from core.domain.errors import CompatibilityError, PreconditionError
from core.domain.fock import FockSpace, FockVector
from core.domain.model import RepModel, Symbol
from core.domain.reports import ResidualReport
from core.services.fock.operators import (
    FockOperator,
    annihilation,
    block_diagonal,
    compose,
    creation,
    product,
)

logger = logging.getLogger(__name__)

# Tolerancia para ‖T‖ <= 1 e ITI = T
NORM_TOL = 1e-12
COMPATIBILITY_TOL = 1e-12

MatrixLike = Union[ContractionSpec, np.ndarray]

# Monomio ℓ(h₁)···ℓ(h_k) ℓ(h_{k+1})*···ℓ(h_n)*: (creadores, aniquiladores)
Monomial = Tuple[Sequence[np.ndarray], Sequence[np.ndarray]]


def as_matrix(t: MatrixLike) -> np.ndarray:
    return t.matrix if isinstance(t, ContractionSpec) else np.asarray(t, dtype=complex)


def iti(model: RepModel, t: MatrixLike) -> np.ndarray:
    """ITI como matriz lineal: M conj(T) M"""
    m = model.involution_matrix
    return m @ np.conj(as_matrix(t)) @ m


def i_compatibility_defect(model: RepModel, t: MatrixLike) -> float:
    """‖ITI - T‖ en norma de operador"""
    matrix = as_matrix(t)
    return float(np.linalg.norm(iti(model, matrix) - matrix, 2))


def contraction_spec(matrix, model: RepModel = None, bands: Tuple[str, ...] = ()) -> ContractionSpec:
    """Certifica ‖T‖ <= 1 por SVD y registra el defecto de I-compatibilidad si hay modelo"""
    matrix = np.asarray(matrix, dtype=complex)
    norm = float(np.linalg.norm(matrix, 2)) if matrix.size else 0.0
    if norm > 1.0 + NORM_TOL:
        raise CompatibilityError(f"T no es una contracción (‖T‖ = {norm:.6g}).", norm=norm)
    defect = i_compatibility_defect(model, matrix) if model is not None else None
    return ContractionSpec(matrix=matrix, norm_bound=norm, i_defect=defect, bands=bands)


def tensor_power(t: MatrixLike, n: int) -> np.ndarray:
    matrix = as_matrix(t)
    return reduce(np.kron, [matrix] * n, np.ones((1, 1), dtype=complex))


def apply_tensor_power(t: np.ndarray, block: np.ndarray, n: int) -> np.ndarray:
    """T^{⊗n} aplicado a un bloque de grado n sin formar la potencia tensorial"""
    if n == 0:
        return block.copy()
    tensor = block.reshape((t.shape[1],) * n)
    for axis in range(n):
        tensor = np.moveaxis(np.tensordot(t, tensor, axes=([1], [axis])), 0, axis)
    return tensor.reshape(-1)


def first_quantization(t: MatrixLike, space: FockSpace) -> FockOperator:
    """Γ̃(T) = 1 ⊕ ⊕ T^{⊗n}, diagonal por grado"""
    matrix = as_matrix(t)
    norm = float(np.linalg.norm(matrix, 2)) if matrix.size else 0.0
    if norm > 1.0 + NORM_TOL:
        raise CompatibilityError(f"T no es una contracción (‖T‖ = {norm:.6g}).", norm=norm)
    if matrix.shape != (space.dim, space.dim):
        raise PreconditionError(
            f"T de forma {matrix.shape} no actúa sobre C^{space.dim}.", check="dimension"
        )
    return block_diagonal(space, lambda n: tensor_power(matrix, n), label="Γ̃(T)")


def check_compatible(model: RepModel, matrix: np.ndarray):
    norm = float(np.linalg.norm(matrix, 2))
    if norm > 1.0 + NORM_TOL:
        raise CompatibilityError(f"T no es una contracción (‖T‖ = {norm:.6g}).", norm=norm)
    defect = i_compatibility_defect(model, matrix)
    if defect > COMPATIBILITY_TOL:
        raise CompatibilityError(
            f"T no es compatible con I (‖ITI - T‖ = {defect:.3e}).", defect=defect, norm=norm
        )


def quantize_vector(t: np.ndarray, vector: FockVector) -> FockVector:
    return vector.map_blocks(lambda n, block: apply_tensor_power(t, block, n))


def second_quantize_symbol(model: RepModel, t: MatrixLike, symbol: Symbol) -> Symbol:
    """Símbolo de Γ(T)x: Γ̃(T) aplicado a xΩ"""
    matrix = as_matrix(t)
    check_compatible(model, matrix)
    return symbol.with_vector(quantize_vector(matrix, symbol.vector))


def random_compatible_contraction(model: RepModel, rng: np.random.Generator) -> np.ndarray:
    """T = (X + M X̄ M)/2 con X aleatoria, reescalada a ‖T‖ <= 1"""
    d = model.dim
    x = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    t = (x + iti(model, x)) / 2
    norm = np.linalg.norm(t, 2)
    return t / norm if norm > 1.0 else t


def monomial_operator(space: FockSpace, monomial: Monomial) -> FockOperator:
    creators, annihilators = monomial
    factors = [creation(space, h) for h in creators]
    factors += [annihilation(space, h) for h in annihilators]
    return product(factors, space)


def _classify(matrix: np.ndarray) -> str:
    tol = settings.fock.identity_tol * 1e3
    eye = np.eye(matrix.shape[0])
    if np.max(np.abs(matrix.conj().T @ matrix - eye)) <= tol:
        return "unitary"
    if (
        np.max(np.abs(matrix @ matrix - matrix)) <= tol
        and np.max(np.abs(matrix - matrix.conj().T)) <= tol
    ):
        return "projection"
    raise PreconditionError(
        "T debe ser un unitario o una proyección ortogonal.", check="contraction_kind"
    )


def toeplitz_functor_check(
    space: FockSpace, t: MatrixLike, monomials: Sequence[Monomial]
) -> ResidualReport:
    """
    Unitario U: Γ̃(U) x Γ̃(U)* = ℓ(Uh₁)···ℓ(Uh_n)*.
    Proyección P: la compresión Γ̃(P) x Γ̃(P) coincide con la del monomio imagen.
    """
    matrix = as_matrix(t)
    kind = _classify(matrix)
    gamma = first_quantization(matrix, space)
    residual = 0.0
    for creators, annihilators in monomials:
        x = monomial_operator(space, (creators, annihilators))
        mapped = monomial_operator(
            space, ([matrix @ h for h in creators], [matrix @ h for h in annihilators])
        )
        if kind == "unitary":
            lhs = compose(compose(gamma, x), gamma.adjoint())
            rhs = mapped
        else:
            lhs = compose(compose(gamma, x), gamma)
            rhs = compose(compose(gamma, mapped), gamma)
        diff = (lhs.matrix - rhs.matrix).toarray()
        residual = max(residual, float(np.max(np.abs(diff))) if diff.size else 0.0)
    logger.debug(f"Chequeo funtorial ({kind}): residuo {residual:.3e}")
    return ResidualReport(name=f"toeplitz_functor_{kind}", residual=residual, cases=len(monomials))


def functoriality_residual(s: np.ndarray, t: np.ndarray, space: FockSpace) -> float:
    """max |Γ̃(S)Γ̃(T) - Γ̃(ST)|"""
    lhs = compose(first_quantization(s, space), first_quantization(t, space)).matrix
    rhs = first_quantization(s @ t, space).matrix
    diff = (lhs - rhs).toarray()
    return float(np.max(np.abs(diff)))


def conjugation_commutation_residual(model: RepModel, t: np.ndarray) -> float:
    """
    Si ITI = T, Γ̃(T) conmuta con la conjugación I^{⊗n} grado a grado:
    se compara M^{⊗n} conj(T^{⊗n}) M^{⊗n} con T^{⊗n}.
    """
    residual = 0.0
    for n in range(1, model.max_degree + 1):
        m_n = tensor_power(model.involution_matrix, n)
        t_n = tensor_power(t, n)
        residual = max(residual, float(np.max(np.abs(m_n @ np.conj(t_n) @ m_n - t_n))))
    return residual

