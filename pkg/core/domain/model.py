# Entidades del modelo de Araki-Woods libre (representación casi periódica finita)

from dataclasses import dataclass, replace
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.domain.fock import FockSpace, FockVector


class EigenPair(BaseModel):
    """Par de autovalores (λ, 1/λ) de A con su multiplicidad"""

    model_config = ConfigDict(extra="forbid", populate_by_name=True, allow_inf_nan=False)

    lambda_: float = Field(alias="lambda")
    multiplicity: int = Field(default=1, ge=1)


class RepSpec(BaseModel):
    """
    Especificación JSON de la representación:
    {"pairs":[{"lambda":2.0,"multiplicity":1}],"trivial_dim":1,"max_degree":4}
    """

    model_config = ConfigDict(extra="forbid")

    pairs: List[EigenPair] = Field(default_factory=list)
    trivial_dim: int = Field(default=0, ge=0)
    max_degree: int = Field(default=4, ge=0)

    @property
    def dim(self) -> int:
        return self.trivial_dim + 2 * sum(p.multiplicity for p in self.pairs)

    @model_validator(mode="after")
    def _check_dimension(self) -> "RepSpec":
        if self.dim < 1:
            raise ValueError("la dimensión total d debe ser >= 1")
        return self


@dataclass(frozen=True, eq=False)
class RepModel:
    """
    Datos concretos del modelo sobre H = C^d.

    Layout: pares primero como (+, -) por multiplicidad, luego índices triviales.
    A es diagonal (eigenvalues), J = conjugación ∘ swap, I = J A^{-1/2}.
    Como A es diagonal y real, I ξ = M conj(ξ) con M = S A^{-1/2} real.
    """

    spec: RepSpec
    space: FockSpace
    eigenvalues: np.ndarray
    swap: np.ndarray
    involution_matrix: np.ndarray
    kr_basis: Tuple[np.ndarray, ...]
    pair_indices: Tuple[Tuple[int, int], ...]
    trivial_indices: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def max_degree(self) -> int:
        return self.space.max_degree

    @property
    def a_matrix(self) -> np.ndarray:
        return np.diag(self.eigenvalues)

    @property
    def j_matrix(self) -> np.ndarray:
        """Parte lineal de J (J ξ = S conj(ξ))"""
        return np.eye(self.dim)[self.swap]

    def with_max_degree(self, max_degree: int) -> "RepModel":
        return replace(self, space=self.space.with_max_degree(max_degree))

    def involution(self, xi: np.ndarray) -> np.ndarray:
        """I ξ (conjugado-lineal)"""
        return self.involution_matrix @ np.conj(np.asarray(xi, dtype=complex))

    def pair_eigenvalue(self, pair: int) -> float:
        plus, _ = self.pair_indices[pair]
        return float(self.eigenvalues[plus])


@dataclass(frozen=True, eq=False)
class Symbol:
    """Símbolo xΩ de un elemento del álgebra junto con su modelo"""

    model: RepModel
    vector: FockVector

    @property
    def space(self) -> FockSpace:
        return self.vector.space

    def with_vector(self, vector: FockVector) -> "Symbol":
        return Symbol(self.model, vector)
