# Operadores sobre el espacio de Fock truncado con evaluación con holgura (headroom)

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import sparse

from config.settings import settings
from core.domain.errors import CapacityError, IncompatibleSpaceError, ValidationError
from core.domain.fock import FockSpace, FockVector

logger = logging.getLogger(__name__)

# build(X) construye la matriz del operador truncado sobre el espacio X
BuildFn = Callable[[FockSpace], sparse.spmatrix]


def make_fock(d: int, max_degree: int) -> FockSpace:
    """Crea el espacio truncado verificando el presupuesto de memoria"""
    if d < 1:
        raise ValidationError(f"La dimensión d debe ser >= 1 (recibido {d}).", field="d")
    if max_degree < 0:
        raise ValidationError(
            f"El truncamiento L debe ser >= 0 (recibido {max_degree}).", field="max_degree"
        )
    space = FockSpace(d, max_degree)
    check_capacity(space)
    return space


def check_capacity(space: FockSpace):
    budget = settings.fock.max_total_dim
    # Cota previa sin materializar offsets gigantes
    if space.dim > 1 and space.dim ** space.max_degree > budget:
        raise CapacityError(space.dim ** space.max_degree, budget)
    if space.total_dim > budget:
        raise CapacityError(space.total_dim, budget)


@dataclass(frozen=True, eq=False)
class FockOperator:
    """
    Operador lineal sobre un FockSpace truncado.

    raising / lowering acotan cuántos grados puede subir o bajar cualquier término;
    headroom es la holgura h con la que se evalúa: la matriz se construye sobre el
    espacio de grado L + h y se comprime a grado <= L, de modo que el resultado
    es la compresión del operador exacto (no truncado).
    """

    space: FockSpace
    build: BuildFn
    raising: int = 0
    lowering: int = 0
    headroom: int = 0
    adjoint_factory: Optional[Callable[[], "FockOperator"]] = None
    label: str = ""

    @cached_property
    def matrix(self) -> sparse.csr_matrix:
        enlarged = self.space.with_max_degree(self.space.max_degree + self.headroom)
        check_capacity(enlarged)
        full = sparse.csr_matrix(self.build(enlarged))
        n = self.space.total_dim
        if self.headroom:
            logger.debug(f"{self.label or 'operador'}: evaluado con headroom {self.headroom}")
        return full[:n, :n].tocsr()

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def apply(self, vector) -> FockVector:
        if isinstance(vector, FockVector):
            self._check(vector.space)
            data = vector.amplitudes
        else:
            data = np.asarray(vector, dtype=complex)
        return FockVector(self.space, self.matrix @ data)

    def adjoint(self) -> "FockOperator":
        if self.adjoint_factory is None:
            return from_matrix(self.space, self.matrix.conj().T.tocsr())
        return self.adjoint_factory()

    def _check(self, space: FockSpace):
        if not self.space.compatible(space):
            raise IncompatibleSpaceError(
                f"Operador sobre F(C^{self.space.dim}) con L={self.space.max_degree} "
                f"aplicado en F(C^{space.dim}) con L={space.max_degree}."
            )

    def __matmul__(self, other: "FockOperator") -> "FockOperator":
        if not isinstance(other, FockOperator):
            return NotImplemented
        return compose(self, other)

    def __add__(self, other: "FockOperator") -> "FockOperator":
        if not isinstance(other, FockOperator):
            return NotImplemented
        return FockOperator.sum([self, other])

    def __sub__(self, other: "FockOperator") -> "FockOperator":
        return self + (-1.0) * other

    def __neg__(self) -> "FockOperator":
        return (-1.0) * self

    def __mul__(self, scalar) -> "FockOperator":
        return scale(self, complex(scalar))

    __rmul__ = __mul__

    @staticmethod
    def sum(ops: Sequence["FockOperator"]) -> "FockOperator":
        """Suma plana (sin recursión profunda) de una lista de operadores"""
        ops = list(ops)
        if not ops:
            raise ValueError("suma vacía de operadores")
        space = ops[0].space
        for op in ops[1:]:
            ops[0]._check(op.space)
        if len(ops) == 1:
            return ops[0]

        def build(x: FockSpace):
            total = sparse.csr_matrix((x.total_dim, x.total_dim), dtype=complex)
            for op in ops:
                total = total + op.build(x)
            return total

        return FockOperator(
            space=space,
            build=build,
            raising=max(op.raising for op in ops),
            lowering=max(op.lowering for op in ops),
            headroom=max(op.headroom for op in ops),
            adjoint_factory=lambda: FockOperator.sum([op.adjoint() for op in ops]),
            label="sum",
        )


def compose(a: FockOperator, b: FockOperator) -> FockOperator:
    """
    Producto a·b (b se aplica primero).

    Un camino de grado <= L a grado <= L no puede subir más de lo que luego
    baja, de ahí h(ab) = max(h_a, h_b) + min(raising_b, lowering_a).
    """
    a._check(b.space)

    def build(x: FockSpace):
        return sparse.csr_matrix(a.build(x)) @ sparse.csr_matrix(b.build(x))

    return FockOperator(
        space=a.space,
        build=build,
        raising=a.raising + b.raising,
        lowering=a.lowering + b.lowering,
        headroom=max(a.headroom, b.headroom) + min(b.raising, a.lowering),
        adjoint_factory=lambda: compose(b.adjoint(), a.adjoint()),
        label=f"({a.label})({b.label})",
    )


def product(ops: Sequence[FockOperator], space: FockSpace = None) -> FockOperator:
    """ops[0] ops[1] ··· ops[-1]; el producto vacío es la identidad"""
    ops = list(ops)
    if not ops:
        return identity(space)
    result = ops[-1]
    for op in reversed(ops[:-1]):
        result = compose(op, result)
    return result


def scale(op: FockOperator, c: complex) -> FockOperator:
    return FockOperator(
        space=op.space,
        build=lambda x: c * sparse.csr_matrix(op.build(x)),
        raising=op.raising,
        lowering=op.lowering,
        headroom=op.headroom,
        adjoint_factory=lambda: scale(op.adjoint(), np.conj(c)),
        label=f"{c}·{op.label}",
    )


def _check_vector(space: FockSpace, xi) -> np.ndarray:
    data = np.asarray(xi, dtype=complex).reshape(-1)
    if data.shape != (space.dim,):
        raise ValidationError(
            f"El vector tiene dimensión {data.size}, se esperaba d={space.dim}.", field="xi"
        )
    return data


def _creation_matrix(x: FockSpace, xi: np.ndarray) -> sparse.csr_matrix:
    """Bloques kron(ξ, I_{d^n}) de grado n a n+1; lo que excede L se descarta"""
    column = sparse.csr_matrix(xi.reshape(-1, 1))
    rows: List[np.ndarray] = []
    cols: List[np.ndarray] = []
    data: List[np.ndarray] = []
    for n in range(x.max_degree):
        block = sparse.kron(column, sparse.identity(x.block_dim(n), format="csr")).tocoo()
        rows.append(block.row + x.offsets[n + 1])
        cols.append(block.col + x.offsets[n])
        data.append(block.data)
    if not data:
        return sparse.csr_matrix((x.total_dim, x.total_dim), dtype=complex)
    return sparse.coo_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(x.total_dim, x.total_dim),
    ).tocsr()


def creation(space: FockSpace, xi) -> FockOperator:
    """ℓ(ξ): antepone ξ a cada palabra"""
    vec = _check_vector(space, xi)
    return FockOperator(
        space=space,
        build=lambda x: _creation_matrix(x, vec),
        raising=1,
        adjoint_factory=lambda: annihilation(space, vec),
        label="ℓ",
    )


def annihilation(space: FockSpace, xi) -> FockOperator:
    """ℓ(ξ)*: contrae la primera letra contra ξ"""
    vec = _check_vector(space, xi)
    return FockOperator(
        space=space,
        build=lambda x: _creation_matrix(x, vec).conj().T.tocsr(),
        lowering=1,
        adjoint_factory=lambda: creation(space, vec),
        label="ℓ*",
    )


def identity(space: FockSpace) -> FockOperator:
    return FockOperator(
        space=space,
        build=lambda x: sparse.identity(x.total_dim, dtype=complex, format="csr"),
        adjoint_factory=lambda: identity(space),
        label="1",
    )


def zero(space: FockSpace) -> FockOperator:
    return FockOperator(
        space=space,
        build=lambda x: sparse.csr_matrix((x.total_dim, x.total_dim), dtype=complex),
        adjoint_factory=lambda: zero(space),
        label="0",
    )


def block_diagonal(
    space: FockSpace, block: Callable[[int], object], label: str = "diag"
) -> FockOperator:
    """Operador que preserva el grado: block(n) actúa sobre H^{⊗n}"""

    def build(x: FockSpace):
        return sparse.block_diag(
            [sparse.csr_matrix(block(n)) for n in range(x.max_degree + 1)], format="csr"
        ).astype(complex)

    def adjoint():
        return block_diagonal(
            space, lambda n: sparse.csr_matrix(block(n)).conj().T, label=f"{label}*"
        )

    return FockOperator(space=space, build=build, adjoint_factory=adjoint, label=label)


def degree_scaling(space: FockSpace, weights: Callable[[int], complex]) -> FockOperator:
    """Multiplica el bloque de grado n por weights(n)"""
    return block_diagonal(
        space,
        lambda n: weights(n) * sparse.identity(space.block_dim(n), format="csr"),
        label="scaling",
    )


def from_matrix(space: FockSpace, matrix) -> FockOperator:
    """
    Operador dado por su matriz comprimida P_L x P_L.
    Sobre espacios mayores se extiende por ceros.
    """
    base = sparse.csr_matrix(matrix, dtype=complex)
    if base.shape != (space.total_dim, space.total_dim):
        raise IncompatibleSpaceError(
            f"Matriz {base.shape} no coincide con total_dim={space.total_dim}."
        )
    n = space.total_dim

    def build(x: FockSpace):
        if x.total_dim == n:
            return base
        if x.total_dim < n:
            return base[: x.total_dim, : x.total_dim]
        padded = sparse.lil_matrix((x.total_dim, x.total_dim), dtype=complex)
        padded[:n, :n] = base
        return padded.tocsr()

    return FockOperator(
        space=space,
        build=build,
        raising=space.max_degree,
        lowering=space.max_degree,
        adjoint_factory=lambda: from_matrix(space, base.conj().T),
        label="matrix",
    )


def vacuum_expectation(x: FockOperator) -> complex:
    """χ(x) = ⟨xΩ, Ω⟩"""
    return complex(x.matrix[0, 0])


TensorTerm = Tuple[complex, FockOperator, FockOperator]


@dataclass(frozen=True, eq=False)
class TensorOperator:
    """
    Σ c·(A ⊗ B) sobre F₁ ⊗ F₂, aplicado sin materializar:
    el vector se reordena como matriz X (N₁ × N₂) y se calcula Σ c·A X Bᵀ.
    """

    terms: Tuple[TensorTerm, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("operador tensorial sin términos")
        object.__setattr__(self, "terms", tuple(self.terms))
        first, second = self.spaces
        for _, a, b in self.terms:
            a._check(first)
            b._check(second)

    @property
    def spaces(self) -> Tuple[FockSpace, FockSpace]:
        _, a, b = self.terms[0]
        return a.space, b.space

    @property
    def shape(self) -> Tuple[int, int]:
        first, second = self.spaces
        return first.total_dim, second.total_dim

    @classmethod
    def tensor(cls, a: FockOperator, b: FockOperator) -> "TensorOperator":
        return cls(((1.0, a, b),))

    def apply(self, vector: np.ndarray) -> np.ndarray:
        n1, n2 = self.shape
        x = np.asarray(vector, dtype=complex).reshape(n1, n2)
        out = np.zeros((n1, n2), dtype=complex)
        for c, a, b in self.terms:
            out += c * (a.matrix @ (b.matrix @ x.T).T)
        return out.reshape(-1)

    def adjoint(self) -> "TensorOperator":
        return TensorOperator(
            tuple((np.conj(c), a.adjoint(), b.adjoint()) for c, a, b in self.terms)
        )

    def __matmul__(self, other: "TensorOperator") -> "TensorOperator":
        return TensorOperator(
            tuple(
                (c1 * c2, compose(a1, a2), compose(b1, b2))
                for c1, a1, b1 in self.terms
                for c2, a2, b2 in other.terms
            )
        )

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        return TensorOperator(self.terms + other.terms)

    def __mul__(self, scalar) -> "TensorOperator":
        return TensorOperator(tuple((scalar * c, a, b) for c, a, b in self.terms))

    __rmul__ = __mul__

    def to_dense(self) -> np.ndarray:
        """Materialización por kron; sólo para espacios pequeños"""
        n1, n2 = self.shape
        if n1 * n2 > settings.fock.svd_threshold:
            raise CapacityError(n1 * n2, settings.fock.svd_threshold)
        total = sparse.csr_matrix((n1 * n2, n1 * n2), dtype=complex)
        for c, a, b in self.terms:
            total = total + c * sparse.kron(a.matrix, b.matrix, format="csr")
        return total.toarray()


def tensor_vector(u: Iterable, v: Iterable) -> np.ndarray:
    """u ⊗ v con el mismo orden que TensorOperator.apply"""
    left = u.amplitudes if isinstance(u, FockVector) else np.asarray(u, dtype=complex)
    right = v.amplitudes if isinstance(v, FockVector) else np.asarray(v, dtype=complex)
    return np.kron(left, right)
