# Sistemas ortonormales con ē_i ortogonales e identidad de S_n*S_n

import logging
from typing import List, Optional, Sequence

import numpy as np

from config.settings import settings
from core.domain.errors import PreconditionError
from core.domain.model import RepModel
from core.domain.reports import SnIdentityReport, SummandNorm
from core.services.araki_woods.wick import basis_vector, field_operator, wick_operator
from core.services.fock.checks import check_orthonormal
from core.services.fock.norms import operator_norm
from core.services.fock.operators import (
    FockOperator,
    TensorOperator,
    annihilation,
    compose,
    creation,
    identity,
)

logger = logging.getLogger(__name__)

DEFAULT_TEST_VECTORS = 4


def select_orthogonal_system(model: RepModel, n: int) -> List[np.ndarray]:
    """
    e_i = e₊ de cada par (‖ē_i‖ = λ^{-1/2} <= 1) y luego vectores triviales.
    Los soportes disjuntos hacen exactas las condiciones ⟨ē_i, ē_j⟩ = ⟨ē_i, e_j⟩ = 0.
    """
    available = len(model.pair_indices) + len(model.trivial_indices)
    if n < 1 or n > available:
        raise PreconditionError(
            f"Se piden {n} vectores pero el modelo sólo ofrece {available}.",
            check="dimension",
            available=available,
        )
    indices = [plus for plus, _ in model.pair_indices] + list(model.trivial_indices)
    system = [basis_vector(model, index) for index in indices[:n]]
    check_orthonormal(np.array(system), "e")
    return system


def sn_operator(model: RepModel, system: Sequence[np.ndarray]) -> TensorOperator:
    """S_n = (1/√n) Σ ℓ(e_i) ⊗ W(e_i)"""
    n = len(system)
    return TensorOperator(
        tuple(
            (1.0 / np.sqrt(n), creation(model.space, e), field_operator(model, e)) for e in system
        )
    )


def sn_identity_operator(model: RepModel, system: Sequence[np.ndarray]) -> TensorOperator:
    """1 ⊗ 1 + (1/n) Σ 1 ⊗ W(ē_i ⊗ e_i)"""
    n = len(system)
    one = identity(model.space)
    terms = [(1.0, one, one)]
    terms += [
        (1.0 / n, one, wick_operator(model, [model.involution(e), e])) for e in system
    ]
    return TensorOperator(tuple(terms))


def default_test_vectors(
    model: RepModel, count: int = DEFAULT_TEST_VECTORS, seed: int = None
) -> List[np.ndarray]:
    """Vectores aleatorios de F ⊗ F con grado <= L - 2 en cada factor"""
    rng = np.random.default_rng(settings.verify.seed if seed is None else seed)
    space = model.space
    size = space.offsets[space.max_degree - 1]
    n = space.total_dim
    vectors = []
    for _ in range(count):
        x = np.zeros((n, n), dtype=complex)
        x[:size, :size] = rng.standard_normal((size, size)) + 1j * rng.standard_normal(
            (size, size)
        )
        vectors.append((x / np.linalg.norm(x)).reshape(-1))
    return vectors


def _summands(model: RepModel, system: Sequence[np.ndarray]):
    n = len(system)
    space = model.space
    bars = [model.involution(e) for e in system]
    creation_creation = FockOperator.sum(
        [(1.0 / n) * compose(creation(space, b), creation(space, e)) for b, e in zip(bars, system)]
    )
    creation_annihilation = FockOperator.sum(
        [(1.0 / n) * compose(creation(space, b), annihilation(space, b)) for b in bars]
    )
    annihilation_annihilation = FockOperator.sum(
        [
            (1.0 / n) * compose(annihilation(space, e), annihilation(space, b))
            for b, e in zip(bars, system)
        ]
    )
    total = FockOperator.sum(
        [(1.0 / n) * wick_operator(model, [b, e]) for b, e in zip(bars, system)]
    )
    return (
        [
            ("creation_creation", creation_creation, 1.0 / np.sqrt(n)),
            ("creation_annihilation", creation_annihilation, 1.0 / n),
            ("annihilation_annihilation", annihilation_annihilation, 1.0 / np.sqrt(n)),
        ],
        total,
    )


def sn_identity_check(
    model: RepModel, n: int, test_vectors: Optional[Sequence[np.ndarray]] = None
) -> SnIdentityReport:
    """
    (a) S_n*S_n - 1⊗1 = (1/n) Σ 1 ⊗ W(ē_i ⊗ e_i) sobre los vectores de prueba.
    (b) ‖(1/n) Σ W(ē_i ⊗ e_i)‖ <= 3/√n a través de sus tres sumandos:
        ℓ(ē)ℓ(e) (1/√n), ℓ(ē)ℓ(ē)* (1/n) y ℓ(e)*ℓ(ē)* (1/√n).
    """
    if model.max_degree < 2:
        raise PreconditionError(
            f"Se requiere L >= 2 para tener holgura 2 (L = {model.max_degree}).",
            check="headroom",
        )
    system = select_orthogonal_system(model, n)
    vectors = default_test_vectors(model) if test_vectors is None else list(test_vectors)

    s = sn_operator(model, system)
    gram = s.adjoint() @ s
    expected = sn_identity_operator(model, system)
    residual = max(
        (float(np.max(np.abs(gram.apply(v) - expected.apply(v)))) for v in vectors),
        default=0.0,
    )

    pieces, total = _summands(model, system)
    summands = [
        SummandNorm(name=name, norm=operator_norm(op).value, bound=bound)
        for name, op, bound in pieces
    ]
    report = SnIdentityReport(
        n=n,
        identity_residual=residual,
        summands=summands,
        total_norm=operator_norm(total).value,
        total_bound=3.0 / np.sqrt(n),
    )
    logger.debug(
        f"S_n (n={n}): residuo {residual:.3e}, ‖suma‖={report.total_norm:.6g} <= {report.total_bound:.6g}"
    )
    return report
