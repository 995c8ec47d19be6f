# Estado cuasi-libre χ, flujo modular y momentos

import logging
from functools import reduce
from typing import List

import numpy as np
from scipy import sparse
from scipy.special import comb

from core.domain.errors import DegreeError, PreconditionError
from core.domain.fock import FockVector
from core.domain.model import RepModel, Symbol
from core.domain.reports import MomentRow
from core.services.araki_woods.model import in_real_subspace
from core.services.araki_woods.wick import field_operator
from core.services.fock.operators import (
    FockOperator,
    block_diagonal,
    compose,
    vacuum_expectation,
)

logger = logging.getLogger(__name__)


def catalan(k: int) -> int:
    return int(comb(2 * k, k, exact=True)) // (k + 1)


def two_point(model: RepModel, xi, eta) -> complex:
    """χ(W(ξ)W(η)); coincide con ⟨Iξ, η⟩ (conjugado-lineal en el primer argumento)"""
    return vacuum_expectation(compose(field_operator(model, xi), field_operator(model, eta)))


def two_point_formula(model: RepModel, xi, eta) -> complex:
    return complex(np.vdot(model.involution(xi), np.asarray(eta, dtype=complex)))


def field_moment(model: RepModel, xi, p: int) -> complex:
    """χ(W(ξ)^p) iterando W(ξ) sobre Ω; exacto si L >= p"""
    if p > model.max_degree:
        raise DegreeError(p, model.max_degree, required=p)
    w = field_operator(model, xi).matrix
    vector = FockVector.vacuum(model.space).amplitudes
    for _ in range(p):
        vector = w @ vector
    return complex(vector[0])


def semicircular_moment(model: RepModel, xi, k: int) -> float:
    """χ(W(ξ)^{2k}) para ξ ∈ K_R unitario: el k-ésimo número de Catalan"""
    xi = np.asarray(xi, dtype=complex)
    if not in_real_subspace(model, xi):
        raise PreconditionError("ξ no pertenece a K_R (Iξ ≠ ξ).", check="k_r")
    if abs(np.linalg.norm(xi) - 1.0) > 1e-10:
        raise PreconditionError(
            f"ξ debe ser unitario (‖ξ‖ = {np.linalg.norm(xi):.6f}).", check="unit"
        )
    if 2 * k > model.max_degree:
        raise DegreeError(2 * k, model.max_degree, required=2 * k)
    return float(np.real(field_moment(model, xi, 2 * k)))


def flow_phases(model: RepModel, t: float, n: int) -> np.ndarray:
    """Fases Π a_j^{it} de las palabras de grado n"""
    u = model.eigenvalues.astype(complex) ** (1j * t)
    return reduce(np.kron, [u] * n, np.ones(1, dtype=complex))


def modular_flow(model: RepModel, t: float, symbol: Symbol) -> Symbol:
    """F(U_t)ξ, símbolo de σ_{-t}(x) con U_t = A^{it}"""
    vector = symbol.vector.map_blocks(lambda n, block: flow_phases(model, t, n) * block)
    return symbol.with_vector(vector)


def flow_operator(model: RepModel, t: float) -> FockOperator:
    """F(U_t) = 1 ⊕ ⊕ U_t^{⊗n} como operador diagonal por grado"""
    return block_diagonal(
        model.space, lambda n: sparse.diags(flow_phases(model, t, n)), label=f"F(U_{t})"
    )


def conjugate_by_flow(model: RepModel, t: float, x: FockOperator) -> FockOperator:
    """σ_{-t}(x) = F(U_t) x F(U_t)*"""
    flow = flow_operator(model, t)
    return compose(compose(flow, x), flow.adjoint())


def flow_field_residual(model: RepModel, t: float, zeta) -> float:
    """max |F(U_t) W(ζ) F(U_t)* - W(U_t ζ)| entrada a entrada"""
    rotated = model.eigenvalues.astype(complex) ** (1j * t) * np.asarray(zeta, dtype=complex)
    diff = conjugate_by_flow(model, t, field_operator(model, zeta)).matrix - field_operator(
        model, rotated
    ).matrix
    return float(np.max(np.abs(diff.toarray()))) if diff.nnz else 0.0


def state_invariance_residual(model: RepModel, t: float, x: FockOperator) -> float:
    return abs(vacuum_expectation(conjugate_by_flow(model, t, x)) - vacuum_expectation(x))


def moment_table(model: RepModel, k_max: int, xi=None) -> List[MomentRow]:
    """Filas k = 1..k_max con χ(W(ξ)^{2k}), C_k y el momento impar χ(W(ξ)^{2k-1})"""
    if 2 * k_max > model.max_degree:
        raise DegreeError(2 * k_max, model.max_degree, required=2 * k_max)
    xi = model.kr_basis[0] if xi is None else xi
    rows = []
    for k in range(1, k_max + 1):
        moment = semicircular_moment(model, xi, k)
        rows.append(
            MomentRow(
                k=k,
                moment=moment,
                catalan=catalan(k),
                abs_error=abs(moment - catalan(k)),
                odd_moment=float(np.real(field_moment(model, xi, 2 * k - 1))),
            )
        )
    return rows
