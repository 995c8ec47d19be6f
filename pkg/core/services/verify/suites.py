# Suites de verificación: cada una devuelve residuos por caso, deterministas dada la semilla

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from config.settings import settings
from core.domain.errors import ValidationError
from core.domain.fock import FockVector, TensorWord
from core.domain.model import EigenPair, RepModel, RepSpec, Symbol
from core.domain.reports import CaseFailure, SuiteReport
from core.services.araki_woods import (
    build_model,
    conjugate_by_flow,
    field_operator,
    flow_field_residual,
    modular_flow,
    moment_table,
    operator_to_symbol,
    random_symbol,
    state_invariance_residual,
    symbol_to_operator,
    two_point,
    two_point_formula,
    wick_operator,
    wick_recursion_residual,
)
from core.services.deformation import (
    DoubledModel,
    alpha,
    alpha_group_residual,
    build_doubled,
    default_test_vectors,
    embed_first_copy,
    expectation_oracle_residual,
    flow_commutation_residual,
    malleability_residuals,
    scalar_transversality_gap,
    sn_identity_check,
    transversality_residual,
)
from core.services.fock import majf_check, make_fock, operator_norm
from core.services.quantization import (
    approximation_residual,
    band_approximant,
    conjugation_commutation_residual,
    first_quantization,
    functoriality_residual,
    i_compatibility_defect,
    quantize_vector,
    random_compatible_contraction,
    second_quantize_symbol,
    toeplitz_functor_check,
)
from utils.metrics import metrics, timed

logger = logging.getLogger(__name__)

# (nombre, residuo) o (nombre, residuo, tolerancia propia del caso)
Case = Union[Tuple[str, float], Tuple[str, float, float]]

# Identidades exactas: más estrictas que la tolerancia de su suite
EXACT_TOLERANCE = 1e-12

WICK_WORDS = 100
MAJF_TRIALS = 20
TWO_POINT_PAIRS = 100
TRANSVERSALITY_TRIALS = 1000


@dataclass
class SuiteOutcome:
    cases: List[Case]
    note: Optional[str] = None


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[[int], SuiteOutcome]
    tolerance: float
    description: str = ""


def _model(lambdas: Sequence[float] = (), trivial: int = 0, max_degree: int = 4) -> RepModel:
    spec = RepSpec(
        pairs=[EigenPair(lambda_=lam) for lam in lambdas],
        trivial_dim=trivial,
        max_degree=max_degree,
    )
    return build_model(spec)


def _complex(rng: np.random.Generator, *shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def _orthonormal(rng: np.random.Generator, n: int) -> np.ndarray:
    """Filas ortonormales en C^n"""
    q, _ = np.linalg.qr(_complex(rng, n, n))
    return q.T


def _violation(slack: float) -> float:
    return max(0.0, -slack)


def wick_suite(seed: int) -> SuiteOutcome:
    """W(w)Ω = w y recursión de Wick sobre palabras aleatorias (d <= 3, longitud <= 4, L = 6)"""
    rng = np.random.default_rng(seed)
    models: Dict[Tuple[float, int], RepModel] = {}
    cases: List[Case] = []
    for _ in range(WICK_WORDS):
        lam = float(rng.choice([1.0, 2.0, 4.0]))
        d = int(rng.integers(1, 4)) if lam == 1.0 else int(rng.integers(2, 4))
        key = (lam, d)
        if key not in models:
            lambdas = () if lam == 1.0 else (lam,)
            models[key] = _model(lambdas, d - 2 * len(lambdas), max_degree=6)
        model = models[key]
        word = TensorWord(tuple(int(x) for x in rng.integers(0, d, size=int(rng.integers(1, 5)))))
        symbol = operator_to_symbol(model, wick_operator(model, word)).vector
        expected = FockVector.from_word(model.space, word.letters)
        cases.append((f"symbol λ={lam:g} d={d} w={word}", (symbol - expected).norm))
        if word.degree >= 2:
            cases.append((f"recursion λ={lam:g} d={d} w={word}", wick_recursion_residual(model, word)))
    return SuiteOutcome(cases)


def majf_suite(seed: int) -> SuiteOutcome:
    """Cotas 1/n y 1/√n con familias ortonormales aleatorias, n = 2..8, d = n, L = 2"""
    rng = np.random.default_rng(seed)
    cases: List[Case] = []
    for n in range(2, 9):
        space = make_fock(n, 2)
        for trial in range(MAJF_TRIALS):
            coefficients = rng.random(n) * np.exp(2j * np.pi * rng.random(n))
            report = majf_check(space, coefficients, _orthonormal(rng, n), _orthonormal(rng, n))
            slack = min(report.creation_annihilation_slack, report.creation_creation_slack)
            cases.append((f"n={n} trial={trial}", _violation(slack)))
    return SuiteOutcome(cases)


def moments_suite(seed: int) -> SuiteOutcome:
    """χ(W(ξ)^{2k}) = C_k para k <= 5 en los modelos trivial y λ = 2 (L = 10)"""
    cases: List[Case] = []
    for label, model in (("trivial", _model((), 1, 10)), ("λ=2", _model((2.0,), 0, 10))):
        for row in moment_table(model, 5):
            cases.append((f"{label} k={row.k}", row.abs_error))
            cases.append((f"{label} odd k={row.k}", abs(row.odd_moment)))
    return SuiteOutcome(cases)


def twopoint_suite(seed: int) -> SuiteOutcome:
    rng = np.random.default_rng(seed)
    cases: List[Case] = []
    models = {
        "trivial": _model((), 2, 2),
        "λ=2": _model((2.0,), 0, 2),
        "λ=4+1": _model((4.0,), 1, 2),
    }
    for label, model in models.items():
        worst = 0.0
        for _ in range(TWO_POINT_PAIRS):
            xi, eta = _complex(rng, model.dim), _complex(rng, model.dim)
            worst = max(worst, abs(two_point(model, xi, eta) - two_point_formula(model, xi, eta)))
        cases.append((f"{label} ({TWO_POINT_PAIRS} pares)", worst))
    return SuiteOutcome(cases)


def modular_suite(seed: int) -> SuiteOutcome:
    """Invariancia del estado y σ_{-t}(W(ζ)) = W(U_t ζ) para t ∈ {0.3, 1, 2}"""
    rng = np.random.default_rng(seed)
    model = _model((2.0,), 1, 3)
    cases: List[Case] = []
    for t in (0.3, 1.0, 2.0):
        for trial in range(3):
            zeta = _complex(rng, model.dim)
            cases.append(
                (f"t={t} campo #{trial}", flow_field_residual(model, t, zeta), EXACT_TOLERANCE)
            )
            rotated = operator_to_symbol(model, conjugate_by_flow(model, t, field_operator(model, zeta)))
            expected = modular_flow(model, t, Symbol(model, FockVector.from_tensor(model.space, [zeta])))
            cases.append(
                (f"t={t} símbolo #{trial}", (rotated.vector - expected.vector).norm, EXACT_TOLERANCE)
            )
            x = symbol_to_operator(model, random_symbol(model, rng, max_degree=2))
            cases.append((f"t={t} estado #{trial}", state_invariance_residual(model, t, x)))
    return SuiteOutcome(cases)


def malleability_suite(seed: int) -> SuiteOutcome:
    """βα_s = α_{-s}β, β² = 1, copia α₁, ley de grupo, V₄ = 1 y conmutación con el flujo (L = 3)"""
    rng = np.random.default_rng(seed)
    dm = build_doubled(_model((2.0,), 0, 3))
    samples = [random_symbol(dm.doubled, rng) for _ in range(4)]
    cases: List[Case] = []
    for s in (0.0, 0.3, 0.5, 1.0, -0.7):
        report = malleability_residuals(dm, samples, s)
        cases += [
            (f"s={s} βα", report.beta_alpha),
            (f"s={s} β²", report.beta_squared),
            (f"s={s} α₁ copia", report.copy_swap),
            (f"s={s} estado", report.state_invariance),
            (f"s={s} grupo", alpha_group_residual(dm, s, 0.25, samples)),
            (f"s={s} flujo", flow_commutation_residual(dm, s, 1.0)),
        ]
    period = max((alpha(dm, 4.0, xi).vector - xi.vector).norm for xi in samples)
    cases.append(("α₄ = 1", period))
    return SuiteOutcome(cases)


def _transversality_trial(dm: DoubledModel, seed: np.random.SeedSequence) -> float:
    rng = np.random.default_rng(seed)
    s = 1.0 - rng.random()
    return transversality_residual(dm, embed_first_copy(dm, random_symbol(dm.base, rng)), s)


def transversality_suite(seed: int) -> SuiteOutcome:
    """
    Holgura de transversalidad en 1000 símbolos aleatorios de la primera copia,
    igualdad en grado 1, reducción escalar y oráculo de la esperanza condicional.
    """
    rng = np.random.default_rng(seed)
    dm = build_doubled(_model((2.0,), 0, 3))
    seeds = np.random.SeedSequence(seed).spawn(TRANSVERSALITY_TRIALS)
    with ThreadPoolExecutor(max_workers=max(1, settings.verify.workers)) as pool:
        slacks = list(pool.map(lambda sq: _transversality_trial(dm, sq), seeds))
    cases: List[Case] = [(f"trial={i}", _violation(slack)) for i, slack in enumerate(slacks)]

    unit = Symbol(dm.base, FockVector.from_tensor(dm.base.space, [dm.base.kr_basis[0]]))
    for s in (0.25, 0.5, 1.0):
        slack = transversality_residual(dm, embed_first_copy(dm, unit), s)
        cases.append((f"grado 1 s={s}", abs(slack)))

    x = np.linspace(0.0, 1.0, 101)
    for n in range(1, 13):
        cases.append((f"escalar n={n}", _violation(float(np.min(scalar_transversality_gap(x, n))))))

    words = [TensorWord(w) for w in [(), (0,), (1,), (0, 1), (1, 0)]]
    symbols = [random_symbol(dm.doubled, rng, max_degree=2) for _ in range(2)]
    cases.append(("E: χ̃(y·x) = χ̃(y·E(x))", expectation_oracle_residual(dm, words, symbols)))

    note = (
        f"holgura mínima {min(slacks):.3e}; desigualdad verificada en la norma de "
        "símbolos del estado cuasi-libre, no en la traza del core"
    )
    return SuiteOutcome(cases, note)


def cas00_suite(seed: int) -> SuiteOutcome:
    """Identidad exacta de S_n*S_n y cota 3/√n para n ∈ {2, 4, 9} (L = 3)"""
    cases: List[Case] = []
    models = {
        2: _model((2.0, 4.0), 0, 3),
        4: _model((2.0, 4.0), 2, 3),
        9: _model((), 9, 3),
    }
    for n, model in models.items():
        report = sn_identity_check(model, n, default_test_vectors(model, seed=seed))
        cases.append((f"n={n} identidad", report.identity_residual, EXACT_TOLERANCE))
        for summand in report.summands:
            cases.append((f"n={n} {summand.name}", _violation(summand.slack)))
        cases.append((f"n={n} total", _violation(report.total_bound - report.total_norm)))
    return SuiteOutcome(cases)


def quantization_suite(seed: int) -> SuiteOutcome:
    """Funtorialidad, unitalidad, contractividad, Γ(T)W(w) = W(T^⊗w), bandas y monomios"""
    rng = np.random.default_rng(seed)
    model = _model((2.0,), 1, 3)
    space = model.space
    eye = np.eye(model.dim)
    cases: List[Case] = []
    for trial in range(5):
        s = random_compatible_contraction(model, rng)
        t = random_compatible_contraction(model, rng)
        gamma = first_quantization(t, space)
        vacuum = FockVector.vacuum(space)
        word = tuple(int(x) for x in rng.integers(0, model.dim, size=int(rng.integers(1, 4))))
        mapped = second_quantize_symbol(model, t, Symbol(model, FockVector.from_word(space, word)))
        expected = FockVector.from_tensor(space, [t @ eye[i] for i in word])
        cases += [
            (f"#{trial} ITI = T", i_compatibility_defect(model, t)),
            (f"#{trial} funtorialidad", functoriality_residual(s, t, space)),
            (f"#{trial} unitalidad", (quantize_vector(t, vacuum) - vacuum).norm),
            (f"#{trial} contractividad", max(0.0, operator_norm(gamma).value - 1.0)),
            (f"#{trial} Γ(T)W(w)", (mapped.vector - expected).norm),
            (f"#{trial} conjugación", conjugation_commutation_residual(model, t)),
        ]

    for trial in range(5):
        family = list(_complex(rng, int(rng.integers(1, 4)), model.dim))
        epsilon = 1.0 - rng.random()
        spec = band_approximant(model, family, epsilon)
        cases += [
            (f"banda #{trial} ITI = T", spec.i_defect),
            (f"banda #{trial} ‖Tf - f‖", max(0.0, approximation_residual(spec.matrix, family) - epsilon)),
            (f"banda #{trial} ‖T‖", max(0.0, spec.norm_bound - 1.0)),
        ]

    monomials = [
        ([eye[0]], [eye[1]]),
        ([eye[0], eye[2]], []),
        ([], [eye[1], eye[2]]),
        ([eye[1]], [eye[0], eye[2]]),
    ]
    unitary, _ = np.linalg.qr(_complex(rng, model.dim, model.dim))
    for label, t in (("unitario", unitary), ("proyección", np.diag([1.0, 0.0, 1.0]))):
        report = toeplitz_functor_check(space, t, monomials)
        cases.append((f"monomios {label}", report.residual))
    return SuiteOutcome(cases)


SUITES: Dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite("wick", wick_suite, 1e-12, "símbolos y recursión de Wick"),
        Suite("majf", majf_suite, 1e-10, "cotas de sumas de creación/aniquilación"),
        Suite("moments", moments_suite, 1e-10, "momentos semicirculares (Catalan)"),
        Suite("twopoint", twopoint_suite, 1e-12, "función de dos puntos"),
        Suite("modular", modular_suite, 1e-10, "flujo modular"),
        Suite("malleability", malleability_suite, 1e-12, "deformación maleable"),
        Suite("transversality", transversality_suite, 1e-10, "transversalidad"),
        Suite("cas00", cas00_suite, 1e-10, "identidad de S_n*S_n"),
        Suite("quantization", quantization_suite, 1e-12, "segunda cuantización y bandas"),
    )
}


@timed("verify")
def run_suite(name: str, seed: int = None, tol: float = None) -> SuiteReport:
    """Ejecuta una suite; pasa si todos los residuos quedan dentro de la tolerancia"""
    suite = SUITES.get(name)
    if suite is None:
        raise ValidationError(
            f"Suite desconocida '{name}'. Disponibles: {', '.join(SUITES)}", field="suite"
        )
    seed = settings.verify.seed if seed is None else seed
    tolerance = suite.tolerance if tol is None else tol
    outcome = suite.run(seed)

    failures = []
    for case in outcome.cases:
        label, residual = case[0], case[1]
        # --tol reemplaza todas las tolerancias, incluidas las de cada caso
        limit = case[2] if len(case) > 2 and tol is None else tolerance
        if not residual <= limit:
            failures.append(CaseFailure(case=label, residual=residual, tolerance=limit))
    max_residual = max((case[1] for case in outcome.cases), default=0.0)
    passed = not failures
    metrics.record_check(name, passed)
    if passed:
        logger.info(f"Suite {name}: {len(outcome.cases)} casos, residuo máximo {max_residual:.3e}")
    else:
        logger.warning(f"Suite {name}: {len(failures)} casos fuera de tolerancia {tolerance:g}")
    return SuiteReport(
        suite=name,
        seed=seed,
        cases=len(outcome.cases),
        max_residual=max_residual,
        tolerance=tolerance,
        passed=passed,
        failures=failures,
        note=outcome.note,
    )
