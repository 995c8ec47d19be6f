# Composición m_φ ∘ Γ(T): elementos de la red de aproximación completamente acotada

import logging
from dataclasses import dataclass
from typing import List, Union

import numpy as np

from core.domain.contraction import ContractionSpec
from core.domain.errors import PreconditionError
from core.domain.fock import FockVector
from core.domain.model import RepModel, Symbol
from core.domain.radial import RadialSymbol
from core.domain.reports import CmapReport, HaagerupSplitReport
from core.services.multipliers.net import haagerup_net, net_symbol
from core.services.multipliers.radial import geometric_symbol, radial_norm
from core.services.quantization.bands import band_approximant
from core.services.quantization.functor import (
    check_compatible,
    as_matrix,
    apply_tensor_power,
    contraction_spec,
)
from utils.metrics import timed

logger = logging.getLogger(__name__)


def _symbol_rank(s: RadialSymbol, t_rank: int) -> int:
    """Σ_{n <= soporte, φ(n) ≠ 0} rank(T)^n"""
    return int(sum(t_rank**n for n in range(s.support + 1) if s(n) != 0))


@dataclass(frozen=True, eq=False)
class CmapMap:
    """ξ ↦ Σ_n φ(n) T^{⊗n} ξ_n con su rango y certificado de norma cb"""

    model: RepModel
    symbol: RadialSymbol
    contraction: ContractionSpec
    rank: int
    certificate: float

    def apply(self, vector: Union[FockVector, Symbol]) -> Union[FockVector, Symbol]:
        if isinstance(vector, Symbol):
            return vector.with_vector(self.apply(vector.vector))
        weights = self.symbol.values(vector.space.max_degree + 1)
        t = self.contraction.matrix
        return vector.map_blocks(lambda n, block: weights[n] * apply_tensor_power(t, block, n))

    __call__ = apply


def cmap_map(
    model: RepModel, s: RadialSymbol, t: Union[ContractionSpec, np.ndarray]
) -> CmapMap:
    """
    m_φ ∘ Γ(T) a nivel de símbolo. Γ(T) es unital y completamente positiva,
    así que el certificado es la norma radial de φ.
    """
    if not s.finitely_supported:
        raise PreconditionError(
            "φ debe tener soporte finito (c1 = c2 = 0).", check="finite_support"
        )
    matrix = as_matrix(t)
    check_compatible(model, matrix)
    spec = t if isinstance(t, ContractionSpec) else contraction_spec(matrix, model)
    return CmapMap(
        model=model,
        symbol=s,
        contraction=spec,
        rank=_symbol_rank(s, spec.rank),
        certificate=radial_norm(s).value,
    )


def _probes(model: RepModel) -> List[FockVector]:
    space = model.space
    probes = [FockVector.vacuum(space)]
    if space.max_degree >= 1:
        probes += [FockVector.from_tensor(space, [v]) for v in model.kr_basis]
    if space.max_degree >= 2:
        probes += [FockVector.from_word(space, word) for word in np.ndindex(model.dim, model.dim)]
    return probes


def probe_residual(element: CmapMap, probes: List[FockVector]) -> float:
    """max ‖m(ξ) - ξ‖ / ‖ξ‖ sobre las sondas"""
    return max(
        float((element.apply(p) - p).norm / p.norm) for p in probes if p.norm > 0
    )


@timed("cmap_net_element")
def cmap_net_element(model: RepModel, n: int, epsilon: float = None) -> CmapReport:
    """
    Elemento n de la red: φ_n de haagerup_net(n) compuesto con la banda mínima
    que aproxima los primeros n vectores de K_R con ε = 1/n (o el ε indicado).
    """
    net = haagerup_net(n)
    family = list(model.kr_basis[:n])
    band = band_approximant(model, family, 1.0 / n if epsilon is None else epsilon)
    element = cmap_map(model, net_symbol(net), band)
    residual = probe_residual(element, _probes(model))
    logger.info(
        f"cmap n={n}: d={net.d}, rango banda={band.rank}, rango={element.rank}, "
        f"certificado={element.certificate:.6g}, residuo={residual:.3e}"
    )
    return CmapReport(
        n=n,
        t=net.t,
        d=net.d,
        band_rank=band.rank,
        rank=element.rank,
        certificate=element.certificate,
        probe_residual=residual,
    )


def haagerup_split(
    model: RepModel, t: float, contraction: Union[ContractionSpec, np.ndarray], d: int
) -> HaagerupSplitReport:
    """
    Γ̃(e^{-t}T) = parte de grado <= d (rango Σ_{n<=d} rank(T)^n) + cola con
    ‖·‖_cb <= norma radial de ψ_t·(1 - δ_{<=d}). No se afirma compacidad.
    """
    if d < 0:
        raise PreconditionError(f"d debe ser >= 0 (recibido {d}).", check="degree")
    matrix = as_matrix(contraction)
    check_compatible(model, matrix)
    t_rank = int(np.linalg.matrix_rank(matrix)) if matrix.size else 0
    psi = np.array(geometric_symbol(t).psi)
    psi[: d + 1] = 0.0
    tail = RadialSymbol(psi=psi)
    bound = radial_norm(tail).value if tail.support >= 0 else 0.0
    return HaagerupSplitReport(
        t=t,
        d=d,
        finite_rank=int(sum(t_rank**k for k in range(d + 1))),
        tail_cb_bound=bound,
    )
