# Modelos de reporte estandarizados (salida texto / JSON / CSV)

from typing import TYPE_CHECKING, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field

if TYPE_CHECKING:
    from core.domain.errors import LabError


NormMethod = Literal["exact-svd", "power-iteration", "trace-norm-svd"]


class ErrorDetail(BaseModel):
    """Detalle de error para la salida --json"""

    code: str
    message: str
    details: Optional[dict] = None

    @classmethod
    def from_exception(cls, exc: "LabError") -> "ErrorDetail":
        return cls(code=exc.code, message=exc.message, details=exc.details)


class NormReport(BaseModel):
    """Norma calculada y método usado"""

    value: float = Field(ge=0.0)
    method: NormMethod
    iterations: Optional[int] = None
    residual: Optional[float] = None


class ProjectionNormReport(NormReport):
    """Norma cb de P_d con su asintótica (4/π)d"""

    d: int
    asymptote: float
    ratio: float
    circulant_max_deviation: Optional[float] = None


class CbNormReport(BaseModel):
    """Descomposición φ = c1 + c2(-1)^n + ψ y norma cb resultante"""

    c1: Tuple[float, float]
    c2: Tuple[float, float]
    support: int
    hankel_size: int
    hankel_trace_norm: float
    truncated: bool = False
    norm: NormReport


class MajfReport(BaseModel):
    """Normas de (1/n)Σ α_i ℓ(e_i)ℓ(f_i)* y (1/n)Σ α_i ℓ(e_i)ℓ(f_i)"""

    n: int
    creation_annihilation_norm: float
    creation_creation_norm: float
    creation_annihilation_slack: float
    creation_creation_slack: float


class PdNormRow(BaseModel):
    """Fila de la tabla pdnorm"""

    d: int
    norm: float
    asymptote: float
    ratio: float
    circulant_max_deviation: Optional[float] = None

    @classmethod
    def from_report(cls, report: ProjectionNormReport) -> "PdNormRow":
        return cls(
            d=report.d,
            norm=report.value,
            asymptote=report.asymptote,
            ratio=report.ratio,
            circulant_max_deviation=report.circulant_max_deviation,
        )


class HaagerupNetReport(BaseModel):
    n: int
    t: float
    d: int
    certificate: float
    tail_certificates: List[float]
    telescoping_estimate: Optional[float] = None


class ToeplitzWitnessReport(BaseModel):
    """Mejor cota inferior |γ(x)|/‖x‖ encontrada; nunca se afirma igualdad"""

    witness: float
    radial_norm: float
    trials: int
    source: str


class ResidualReport(BaseModel):
    """Residuo máximo de un chequeo algebraico"""

    name: str
    residual: float
    cases: int = 1


class SummandNorm(BaseModel):
    name: str
    norm: float
    bound: float

    @property
    def slack(self) -> float:
        return self.bound - self.norm


class SnIdentityReport(BaseModel):
    """Identidad exacta de S_n*S_n y cotas de sus tres sumandos"""

    n: int
    identity_residual: float
    summands: List[SummandNorm]
    total_norm: float
    total_bound: float


class MalleabilityReport(BaseModel):
    s: float
    beta_alpha: float
    beta_squared: float
    copy_swap: float
    state_invariance: float

    @property
    def max_residual(self) -> float:
        return max(self.beta_alpha, self.beta_squared, self.copy_swap, self.state_invariance)


class CmapReport(BaseModel):
    """Elemento de la red c.m.a.p. y residuo puntual sobre las sondas"""

    n: int
    t: float
    d: int
    band_rank: int
    rank: int
    certificate: float
    probe_residual: float


class HaagerupSplitReport(BaseModel):
    """Γ̃(e^{-t}T) = parte de grado <= d (rango finito) + cola con cota cb"""

    t: float
    d: int
    finite_rank: int
    tail_cb_bound: float


class MomentRow(BaseModel):
    k: int
    moment: float
    catalan: int
    abs_error: float
    odd_moment: float


class CaseFailure(BaseModel):
    case: str
    residual: float
    tolerance: float


class SuiteReport(BaseModel):
    """Resultado de una suite de verificación"""

    suite: str
    seed: int
    cases: int
    max_residual: float
    tolerance: float
    passed: bool
    failures: List[CaseFailure] = Field(default_factory=list)
    note: Optional[str] = None
