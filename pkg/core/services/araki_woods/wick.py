# Operadores de campo, palabras de Wick y correspondencia símbolo <-> operador

import logging
from typing import List, Sequence, Union

import numpy as np

from core.domain.errors import DegreeError
from core.domain.fock import FockVector, TensorWord
from core.domain.model import RepModel, Symbol
from core.services.fock.operators import (
    FockOperator,
    annihilation,
    compose,
    creation,
    identity,
    product,
    zero,
)

logger = logging.getLogger(__name__)

WordLike = Union[TensorWord, Sequence[int], Sequence[np.ndarray]]


def basis_vector(model: RepModel, index: int) -> np.ndarray:
    out = np.zeros(model.dim, dtype=complex)
    out[index] = 1.0
    return out


def word_vectors(model: RepModel, word: WordLike) -> List[np.ndarray]:
    """Convierte una palabra (índices de letras o vectores) en la lista de vectores e_k"""
    if isinstance(word, TensorWord):
        word = word.letters
    vectors = []
    for letter in word:
        if np.ndim(letter) == 0:
            vectors.append(basis_vector(model, int(letter)))
        else:
            vectors.append(np.asarray(letter, dtype=complex))
    return vectors


def field_operator(model: RepModel, xi) -> FockOperator:
    """W(ξ) = ℓ(ξ) + ℓ(Iξ)*"""
    return creation(model.space, xi) + annihilation(model.space, model.involution(xi))


def wick_monomial(model: RepModel, vectors: Sequence[np.ndarray], k: int) -> FockOperator:
    """ℓ(e₁)···ℓ(e_k) ℓ(ē_{k+1})*···ℓ(ē_n)*"""
    factors = [creation(model.space, v) for v in vectors[:k]]
    factors += [annihilation(model.space, model.involution(v)) for v in vectors[k:]]
    return product(factors, model.space)


def wick_operator(model: RepModel, word: WordLike) -> FockOperator:
    """W(e₁⊗···⊗e_n) = Σ_k ℓ(e₁)···ℓ(e_k) ℓ(ē_{k+1})*···ℓ(ē_n)*"""
    vectors = word_vectors(model, word)
    n = len(vectors)
    if n > model.max_degree:
        raise DegreeError(n, model.max_degree)
    if n == 0:
        return identity(model.space)
    return FockOperator.sum([wick_monomial(model, vectors, k) for k in range(n + 1)])


def symbol_to_operator(model: RepModel, symbol: Union[Symbol, FockVector]) -> FockOperator:
    """Extensión lineal ξ ↦ W(ξ) sobre las palabras de la base"""
    vector = symbol.vector if isinstance(symbol, Symbol) else symbol
    terms = []
    for index in np.nonzero(vector.amplitudes)[0]:
        word = model.space.word(int(index))
        terms.append(complex(vector.amplitudes[index]) * wick_operator(model, word))
    if not terms:
        return zero(model.space)
    return FockOperator.sum(terms)


def operator_to_symbol(model: RepModel, x: FockOperator) -> Symbol:
    """xΩ: primera columna de la matriz comprimida"""
    column = x.matrix[:, 0].toarray().reshape(-1)
    return Symbol(model, FockVector(model.space, column))


def wick_recursion_residual(model: RepModel, word: WordLike) -> float:
    """
    max |W(e₀⊗e₁⊗···) - W(e₀)W(e₁⊗···) + ⟨ē₀, e₁⟩ W(e₂⊗···)| entrada a entrada.
    """
    vectors = word_vectors(model, word)
    if len(vectors) < 2:
        raise ValueError("la recursión requiere palabras de longitud >= 2")
    coefficient = complex(np.vdot(model.involution(vectors[0]), vectors[1]))
    lhs = wick_operator(model, vectors)
    rhs = compose(field_operator(model, vectors[0]), wick_operator(model, vectors[1:]))
    rhs = rhs - coefficient * wick_operator(model, vectors[2:])
    diff = (lhs.matrix - rhs.matrix).toarray()
    return float(np.max(np.abs(diff))) if diff.size else 0.0


def random_symbol(
    model: RepModel, rng: np.random.Generator, max_degree: int = None, normalize: bool = True
) -> Symbol:
    """Símbolo aleatorio con soporte en grados <= max_degree"""
    top = model.max_degree if max_degree is None else min(max_degree, model.max_degree)
    data = np.zeros(model.space.total_dim, dtype=complex)
    size = model.space.offsets[top + 1]
    data[:size] = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    if normalize:
        data /= np.linalg.norm(data)
    return Symbol(model, FockVector(model.space, data))
