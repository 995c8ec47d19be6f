# Funciones radiales φ(n) = c1 + c2(-1)^n + ψ(n) y su matriz de Hankel

from dataclasses import dataclass
from typing import Annotated, List, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


def _trim(psi) -> np.ndarray:
    data = np.array(psi, dtype=complex).reshape(-1)
    nonzero = np.nonzero(data)[0]
    data = data[: nonzero[-1] + 1] if nonzero.size else data[:0]
    data.flags.writeable = False
    return data


def _periodic(s: "RadialSymbol", n: np.ndarray) -> np.ndarray:
    return s.c1 + s.c2 * (-1.0) ** n


@dataclass(frozen=True, eq=False)
class RadialSymbol:
    """
    φ radial con parte finitamente soportada ψ.
    psi se guarda sin ceros finales; support = N con ψ(n) = 0 para n > N (-1 si ψ = 0).
    """

    c1: complex = 0.0
    c2: complex = 0.0
    psi: np.ndarray = ()

    def __post_init__(self):
        object.__setattr__(self, "c1", complex(self.c1))
        object.__setattr__(self, "c2", complex(self.c2))
        object.__setattr__(self, "psi", _trim(self.psi))

    @property
    def support(self) -> int:
        return len(self.psi) - 1

    @property
    def finitely_supported(self) -> bool:
        return self.c1 == 0 and self.c2 == 0

    def psi_at(self, n: int) -> complex:
        return complex(self.psi[n]) if 0 <= n < len(self.psi) else 0j

    def __call__(self, n: int) -> complex:
        return self.c1 + self.c2 * (-1) ** n + self.psi_at(n)

    def values(self, count: int) -> np.ndarray:
        """φ(0), ..., φ(count-1)"""
        n = np.arange(count)
        out = self.c1 + self.c2 * (-1.0) ** n
        head = min(count, len(self.psi))
        out = out.astype(complex)
        out[:head] += self.psi[:head]
        return out

    def scaled(self, c: complex) -> "RadialSymbol":
        return RadialSymbol(c * self.c1, c * self.c2, c * self.psi)

    def __add__(self, other: "RadialSymbol") -> "RadialSymbol":
        size = max(len(self.psi), len(other.psi))
        psi = np.zeros(size, dtype=complex)
        psi[: len(self.psi)] += self.psi
        psi[: len(other.psi)] += other.psi
        return RadialSymbol(self.c1 + other.c1, self.c2 + other.c2, psi)

    def __mul__(self, other: "RadialSymbol") -> "RadialSymbol":
        """Producto puntual: la parte periódica se multiplica aparte"""
        c1 = self.c1 * other.c1 + self.c2 * other.c2
        c2 = self.c1 * other.c2 + self.c2 * other.c1
        size = max(len(self.psi), len(other.psi))
        n = np.arange(size)
        mine = np.zeros(size, dtype=complex)
        mine[: len(self.psi)] = self.psi
        theirs = np.zeros(size, dtype=complex)
        theirs[: len(other.psi)] = other.psi
        psi = (_periodic(self, n) + mine) * (_periodic(other, n) + theirs) - (
            c1 + c2 * (-1.0) ** n
        )
        return RadialSymbol(c1, c2, psi)


@dataclass(frozen=True, eq=False)
class HankelData:
    """B[i][j] = φ(i+j) - φ(i+j+2), construida sólo a partir de ψ"""

    size: int
    matrix: np.ndarray
    trace_norm: float
    truncated: bool = False


# Especificaciones JSON de φ (unión discriminada por "kind")


class _PhiBase(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)


class FinitePhi(_PhiBase):
    kind: Literal["finite"]
    values: List[float]


class GeometricPhi(_PhiBase):
    kind: Literal["geometric"]
    t: float = Field(gt=0.0)


class CutoffProjectionPhi(_PhiBase):
    kind: Literal["cutoff_projection"]
    d: int = Field(ge=0)


class GeneralPhi(_PhiBase):
    kind: Literal["general"]
    c1: float = 0.0
    c2: float = 0.0
    psi: List[float] = Field(default_factory=list)


PhiSpec = Annotated[
    Union[FinitePhi, GeometricPhi, CutoffProjectionPhi, GeneralPhi],
    Field(discriminator="kind"),
]
