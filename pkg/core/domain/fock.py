# Entidades del espacio de Fock truncado

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class TensorWord:
    """
    Palabra de la base: letras en {0..d-1} (índices de la base de H).
    La palabra vacía representa el vector de vacío Ω.
    """

    letters: Tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "Ω"
        return "⊗".join(f"e{i + 1}" for i in self.letters)


@dataclass(frozen=True)
class FockSpace:
    """
    Espacio de Fock completo sobre H = C^dim truncado en grado max_degree.

    La base es graduada-lexicográfica: por longitud y, dentro de cada
    longitud, lexicográfica con la primera letra como dígito más significativo.
    El vacío es el índice 0.
    """

    dim: int
    max_degree: int

    @cached_property
    def offsets(self) -> Tuple[int, ...]:
        """offsets[n] = primer índice del bloque de grado n; offsets[L+1] = total_dim"""
        out = [0]
        for n in range(self.max_degree + 1):
            out.append(out[-1] + self.dim**n)
        return tuple(out)

    @property
    def total_dim(self) -> int:
        return self.offsets[-1]

    def block_dim(self, n: int) -> int:
        return self.dim**n

    def degree_slice(self, n: int) -> slice:
        return slice(self.offsets[n], self.offsets[n + 1])

    @cached_property
    def degrees(self) -> np.ndarray:
        """Grado de cada índice de la base"""
        out = np.empty(self.total_dim, dtype=int)
        for n in range(self.max_degree + 1):
            out[self.degree_slice(n)] = n
        out.flags.writeable = False
        return out

    def index(self, word: Sequence[int]) -> int:
        letters = tuple(word.letters) if isinstance(word, TensorWord) else tuple(word)
        n = len(letters)
        if n > self.max_degree:
            raise ValueError(f"palabra de grado {n} fuera del truncamiento")
        position = 0
        for letter in letters:
            position = position * self.dim + letter
        return self.offsets[n] + position

    def word(self, index: int) -> TensorWord:
        n = int(self.degrees[index])
        position = index - self.offsets[n]
        letters: List[int] = []
        for _ in range(n):
            position, letter = divmod(position, self.dim)
            letters.append(letter)
        return TensorWord(tuple(reversed(letters)))

    def basis(self) -> Iterator[TensorWord]:
        for index in range(self.total_dim):
            yield self.word(index)

    def with_max_degree(self, max_degree: int) -> "FockSpace":
        return FockSpace(self.dim, max_degree)

    def compatible(self, other: "FockSpace") -> bool:
        return self.dim == other.dim and self.max_degree == other.max_degree


@dataclass(frozen=True, eq=False)
class FockVector:
    """Vector del espacio truncado: amplitudes complejas por palabra de la base"""

    space: FockSpace
    amplitudes: np.ndarray

    def __post_init__(self):
        data = np.array(self.amplitudes, dtype=complex)
        if data.shape != (self.space.total_dim,):
            raise ValueError(
                f"se esperaban {self.space.total_dim} amplitudes, llegaron {data.shape}"
            )
        data.flags.writeable = False
        object.__setattr__(self, "amplitudes", data)

    @classmethod
    def zero(cls, space: FockSpace) -> "FockVector":
        return cls(space, np.zeros(space.total_dim, dtype=complex))

    @classmethod
    def vacuum(cls, space: FockSpace) -> "FockVector":
        data = np.zeros(space.total_dim, dtype=complex)
        data[0] = 1.0
        return cls(space, data)

    @classmethod
    def from_word(cls, space: FockSpace, word: Sequence[int]) -> "FockVector":
        data = np.zeros(space.total_dim, dtype=complex)
        data[space.index(word)] = 1.0
        return cls(space, data)

    @classmethod
    def from_tensor(cls, space: FockSpace, factors: Sequence[np.ndarray]) -> "FockVector":
        """Tensor elemental ξ₁⊗···⊗ξ_n (n = 0 da Ω)"""
        n = len(factors)
        if n > space.max_degree:
            raise ValueError(f"tensor de grado {n} fuera del truncamiento")
        block = np.ones(1, dtype=complex)
        for factor in factors:
            block = np.kron(block, np.asarray(factor, dtype=complex))
        data = np.zeros(space.total_dim, dtype=complex)
        data[space.degree_slice(n)] = block
        return cls(space, data)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    @property
    def vacuum_amplitude(self) -> complex:
        return complex(self.amplitudes[0])

    def block(self, n: int) -> np.ndarray:
        return self.amplitudes[self.space.degree_slice(n)]

    @property
    def degree(self) -> int:
        """Mayor grado con amplitud no nula (-1 para el vector cero)"""
        support = np.nonzero(self.amplitudes)[0]
        if support.size == 0:
            return -1
        return int(self.space.degrees[support[-1]])

    def inner(self, other: "FockVector") -> complex:
        """⟨self, other⟩, conjugado-lineal en self"""
        self._check(other)
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def map_blocks(self, fn) -> "FockVector":
        """Aplica fn(n, bloque) a cada bloque de grado n"""
        data = np.empty(self.space.total_dim, dtype=complex)
        for n in range(self.space.max_degree + 1):
            data[self.space.degree_slice(n)] = fn(n, self.block(n))
        return FockVector(self.space, data)

    def _check(self, other: "FockVector"):
        if not self.space.compatible(other.space):
            raise ValueError("vectores sobre espacios de Fock distintos")

    def __add__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        return FockVector(self.space, self.amplitudes + other.amplitudes)

    def __sub__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        return FockVector(self.space, self.amplitudes - other.amplitudes)

    def __mul__(self, scalar: complex) -> "FockVector":
        return FockVector(self.space, self.amplitudes * scalar)

    __rmul__ = __mul__
