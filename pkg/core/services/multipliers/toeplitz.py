# Testigos de cota inferior para ‖γ‖ sobre el álgebra de Toeplitz truncada

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Tuple

import numpy as np

from config.settings import settings
from core.domain.errors import PreconditionError
from core.domain.radial import RadialSymbol
from core.domain.reports import ToeplitzWitnessReport
from core.services.fock.operators import creation, make_fock
from core.services.multipliers.hankel import hankel_matrix
from core.services.multipliers.radial import radial_norm
from utils.metrics import timed

logger = logging.getLogger(__name__)

# Grado máximo en S y S* de los polinomios aleatorios
RANDOM_DEGREE = 6


class ToeplitzWitness:
    """
    Shift S = ℓ(1) sobre F(C) truncado en grado N (dimensión N+1).

    Para x = Σ c_ij S^i S*^j el cociente se toma contra
    max(‖PxP‖, |f(1)|, |f(-1)|), con f(z) = Σ c_ij z^{i+j}. Como la parte ψ
    de γ cumple γ_ψ(x) = Tr(B·PxP), el testigo nunca supera |c1| + |c2| + ‖B‖₁.
    """

    def __init__(self, s: RadialSymbol, size: int):
        if size < s.support:
            raise PreconditionError(
                f"N={size} no cubre el soporte de ψ (N >= {s.support} requerido).",
                check="support",
            )
        self.symbol = s
        self.size = size
        self.shift = creation(make_fock(1, size), np.ones(1)).to_dense()

    def _accumulate(self, x: np.ndarray, c: complex, i: int, j: int):
        """x += c·P S^i S*^j P sin formar potencias: e_a ↦ e_{a-j+i} para j <= a <= N y a-j+i <= N"""
        a = np.arange(j, min(self.size, self.size - i + j) + 1)
        x[a - j + i, a] += c

    def ratio(self, coefficients: np.ndarray) -> float:
        """|γ(x)| / max(‖PxP‖, |f(1)|, |f(-1)|) para x = Σ c_ij S^i S*^j"""
        m = coefficients.shape[0]
        phi = self.symbol.values(2 * m)
        x = np.zeros((self.size + 1, self.size + 1), dtype=complex)
        gamma = 0j
        at_one = 0j
        at_minus_one = 0j
        for i in range(m):
            for j in range(m):
                c = coefficients[i, j]
                if c == 0:
                    continue
                self._accumulate(x, c, i, j)
                gamma += c * phi[i + j]
                at_one += c
                at_minus_one += c * (-1) ** (i + j)
        denominator = max(np.linalg.norm(x, 2), abs(at_one), abs(at_minus_one))
        return float(abs(gamma) / denominator) if denominator > 0 else 0.0

    def identity_candidate(self) -> float:
        return self.ratio(np.ones((1, 1), dtype=complex))

    def polar_candidate(self) -> float:
        """
        x = Σ X_qp (S^q S*^p - S^{q+1} S*^{p+1}) = Σ X_qp e_q e_p*, con X = (V U^H)ᵀ
        para B = U Σ V^H: γ(x) = ‖B‖₁ y ‖x‖ = 1.
        """
        b = hankel_matrix(self.symbol).matrix
        if b.size == 0:
            return 0.0
        u, _, vh = np.linalg.svd(b)
        polar = (vh.conj().T @ u.conj().T).T
        size = polar.shape[0]
        coefficients = np.zeros((size + 1, size + 1), dtype=complex)
        coefficients[:size, :size] += polar
        coefficients[1:, 1:] -= polar
        return self.ratio(coefficients)

    def random_candidate(self, seed: np.random.SeedSequence, degree: int) -> float:
        rng = np.random.default_rng(seed)
        coefficients = rng.standard_normal((degree + 1, degree + 1)) + 1j * rng.standard_normal(
            (degree + 1, degree + 1)
        )
        return self.ratio(coefficients)


@timed("toeplitz_lower_bound")
def toeplitz_lower_bound(
    s: RadialSymbol, size: int, trials: int = None, seed: int = 0
) -> ToeplitzWitnessReport:
    """
    Máximo de los testigos: identidad, candidato polar y polinomios aleatorios.
    Los ensayos aleatorios corren en paralelo; el máximo no depende del orden.
    """
    trials = settings.multipliers.toeplitz_trials if trials is None else trials
    witness = ToeplitzWitness(s, size)
    degree = min(max(1, size // 2), RANDOM_DEGREE)

    candidates: Tuple[Tuple[str, float], ...] = (
        ("identity", witness.identity_candidate()),
        ("polar", witness.polar_candidate()),
    )
    seeds = np.random.SeedSequence(seed).spawn(trials)
    with ThreadPoolExecutor(max_workers=max(1, settings.verify.workers)) as pool:
        randoms = list(pool.map(lambda sq: witness.random_candidate(sq, degree), seeds))
    if randoms:
        candidates += (("random", max(randoms)),)

    source, best = max(candidates, key=lambda item: item[1])
    bound = radial_norm(s).value
    logger.info(f"Testigo de Toeplitz: {best:.12g} ({source}) vs norma radial {bound:.12g}")
    return ToeplitzWitnessReport(witness=best, radial_norm=bound, trials=trials, source=source)
