# Modelo duplicado H ⊕ H y deformación maleable (α_s, β)

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from core.domain.fock import FockSpace, FockVector, TensorWord
from core.domain.model import RepModel, Symbol
from core.domain.reports import MalleabilityReport
from core.services.araki_woods.model import direct_sum
from core.services.araki_woods.state import flow_operator
from core.services.araki_woods.wick import symbol_to_operator, wick_operator
from core.services.fock.operators import compose, vacuum_expectation
from core.services.quantization.functor import (
    apply_tensor_power,
    first_quantization,
    quantize_vector,
    second_quantize_symbol,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DoubledModel:
    """
    base sobre H y doubled sobre H ⊕ H con U_t ⊕ U_t.
    La primera copia ocupa los índices 0..d-1 y la segunda d..2d-1.
    """

    base: RepModel
    doubled: RepModel

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def space(self) -> FockSpace:
        return self.doubled.space

    @property
    def first_injection(self) -> np.ndarray:
        """ι₁: H → H ⊕ H"""
        return np.vstack([np.eye(self.dim), np.zeros((self.dim, self.dim))]).astype(complex)

    @property
    def second_injection(self) -> np.ndarray:
        return np.vstack([np.zeros((self.dim, self.dim)), np.eye(self.dim)]).astype(complex)

    def iota1(self, xi) -> np.ndarray:
        return self.first_injection @ np.asarray(xi, dtype=complex)

    def iota2(self, xi) -> np.ndarray:
        return self.second_injection @ np.asarray(xi, dtype=complex)


def build_doubled(base: RepModel, max_degree: int = None) -> DoubledModel:
    return DoubledModel(base=base, doubled=direct_sum(base, base, max_degree))


def rotation_matrix(dm: DoubledModel, s: float) -> np.ndarray:
    """V_s = [[cos(πs/2), -sin(πs/2)], [sin(πs/2), cos(πs/2)]] ⊗ I_d"""
    c, sn = np.cos(np.pi * s / 2), np.sin(np.pi * s / 2)
    return np.kron(np.array([[c, -sn], [sn, c]]), np.eye(dm.dim)).astype(complex)


def beta_matrix(dm: DoubledModel) -> np.ndarray:
    return np.kron(np.diag([1.0, -1.0]), np.eye(dm.dim)).astype(complex)


def copy_swap_matrix(dm: DoubledModel) -> np.ndarray:
    return np.kron(np.array([[0.0, 1.0], [1.0, 0.0]]), np.eye(dm.dim)).astype(complex)


def first_copy_projection(dm: DoubledModel) -> np.ndarray:
    return np.kron(np.diag([1.0, 0.0]), np.eye(dm.dim)).astype(complex)


def alpha(dm: DoubledModel, s: float, symbol: Symbol) -> Symbol:
    """α_s = Γ(V_s)"""
    return second_quantize_symbol(dm.doubled, rotation_matrix(dm, s), symbol)


def beta(dm: DoubledModel, symbol: Symbol) -> Symbol:
    """β = Γ(1 ⊕ -1)"""
    return second_quantize_symbol(dm.doubled, beta_matrix(dm), symbol)


def embed_first_copy(dm: DoubledModel, symbol: Symbol) -> Symbol:
    """Palabras de H como palabras de la primera copia (isometría ι₁^{⊗n})"""
    data = np.zeros(dm.space.total_dim, dtype=complex)
    top = min(symbol.space.max_degree, dm.space.max_degree)
    for n in range(top + 1):
        data[dm.space.degree_slice(n)] = apply_tensor_power(
            dm.first_injection, symbol.vector.block(n), n
        )
    return Symbol(dm.doubled, FockVector(dm.space, data))


def project_first_copy(dm: DoubledModel, symbol: Symbol) -> Symbol:
    """
    E a nivel de símbolo: proyección ortogonal sobre las palabras con todas
    las letras en la primera copia, es decir Γ̃(P₁) con P₁ = 1 ⊕ 0.
    """
    return symbol.with_vector(quantize_vector(first_copy_projection(dm), symbol.vector))


def first_copy_defect(dm: DoubledModel, symbol: Symbol) -> float:
    """‖ξ - Pξ‖"""
    return (symbol.vector - project_first_copy(dm, symbol).vector).norm


def malleability_residuals(
    dm: DoubledModel, samples: Sequence[Symbol], s: float
) -> MalleabilityReport:
    """βα_s = α_{-s}β, β² = 1, α₁ lleva la primera copia a la segunda y Ω queda fijo"""
    swap = copy_swap_matrix(dm)
    beta_alpha = beta_squared = copy_swap = state = 0.0
    for xi in samples:
        lhs = beta(dm, alpha(dm, s, xi)).vector
        rhs = alpha(dm, -s, beta(dm, xi)).vector
        beta_alpha = max(beta_alpha, (lhs - rhs).norm)
        beta_squared = max(beta_squared, (beta(dm, beta(dm, xi)).vector - xi.vector).norm)

        first = project_first_copy(dm, xi)
        swapped = alpha(dm, 1.0, first).vector - quantize_vector(swap, first.vector)
        copy_swap = max(copy_swap, swapped.norm)

        moved = alpha(dm, s, xi).vector.vacuum_amplitude - xi.vector.vacuum_amplitude
        state = max(state, abs(moved))
    report = MalleabilityReport(
        s=s,
        beta_alpha=beta_alpha,
        beta_squared=beta_squared,
        copy_swap=copy_swap,
        state_invariance=state,
    )
    logger.debug(f"Maleabilidad s={s}: residuo máximo {report.max_residual:.3e}")
    return report


def alpha_group_residual(dm: DoubledModel, s: float, t: float, samples: Iterable[Symbol]) -> float:
    """max ‖α_s α_t ξ - α_{s+t} ξ‖"""
    return max(
        (alpha(dm, s, alpha(dm, t, xi)).vector - alpha(dm, s + t, xi).vector).norm
        for xi in samples
    )


def flow_commutation_residual(dm: DoubledModel, s: float, t: float) -> float:
    """max |Γ̃(V_s)Γ̃(U_t ⊕ U_t) - Γ̃(U_t ⊕ U_t)Γ̃(V_s)| entrada a entrada"""
    rotation = first_quantization(rotation_matrix(dm, s), dm.space)
    flow = flow_operator(dm.doubled, t)
    diff = compose(rotation, flow).matrix - compose(flow, rotation).matrix
    return float(np.max(np.abs(diff.toarray()))) if diff.nnz else 0.0


def expectation_oracle_residual(
    dm: DoubledModel, first_copy_words: Sequence[TensorWord], symbols: Sequence[Symbol]
) -> float:
    """
    max |χ̃(y·x) - χ̃(y·E(x))| con y palabras de Wick de la primera copia y
    E(x) reconstruido desde el símbolo proyectado.
    """
    residual = 0.0
    for x_symbol in symbols:
        x = symbol_to_operator(dm.doubled, x_symbol)
        ex = symbol_to_operator(dm.doubled, project_first_copy(dm, x_symbol))
        for word in first_copy_words:
            y = wick_operator(dm.doubled, word)
            lhs = vacuum_expectation(compose(y, x))
            rhs = vacuum_expectation(compose(y, ex))
            residual = max(residual, abs(lhs - rhs))
    return residual
