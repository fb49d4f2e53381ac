"""Weyl group elements as integral matrices on the root lattice.

The simple reflection s_i acts by s_i(α_j) = α_j - c_ij·α_i. An element
stores its matrix together with the matrix of its inverse, so that both left
and right descents are read off a single column.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from ..errors import ResourceLimitError
from .cartan import CartanData

logger = logging.getLogger(__name__)

# Largest entry magnitude before integer arithmetic is refused.
ENTRY_LIMIT = 2**53


@lru_cache(maxsize=64)
def simple_reflections(cartan: CartanData) -> Tuple[np.ndarray, ...]:
    """Return the matrices S_1..S_n (0-based tuple) of the simple reflections."""
    n = cartan.n
    c = cartan.as_array()
    reflections = []
    for i in range(n):
        matrix = np.eye(n, dtype=np.int64)
        matrix[i, :] -= c[i, :]
        matrix.setflags(write=False)
        reflections.append(matrix)
    return tuple(reflections)


def is_positive(vector: np.ndarray) -> bool:
    return bool(np.all(vector >= 0) and np.any(vector > 0))


def is_negative(vector: np.ndarray) -> bool:
    return bool(np.all(vector <= 0) and np.any(vector < 0))


@dataclass(frozen=True, eq=False)
class WeylElement:
    """Group element with its root-lattice action and the action of its inverse."""

    cartan: CartanData
    matrix: np.ndarray
    inverse: np.ndarray
    _key: bytes = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if np.abs(self.matrix).max(initial=0) > ENTRY_LIMIT or np.abs(self.inverse).max(initial=0) > ENTRY_LIMIT:
            raise ResourceLimitError("Root lattice entry size", ENTRY_LIMIT)
        self.matrix.setflags(write=False)
        self.inverse.setflags(write=False)
        object.__setattr__(self, "_key", self.matrix.tobytes())

    @classmethod
    def identity(cls, cartan: CartanData) -> "WeylElement":
        n = cartan.n
        return cls(cartan, np.eye(n, dtype=np.int64), np.eye(n, dtype=np.int64))

    @property
    def key(self) -> bytes:
        """Canonical form: equal keys mean equal group elements."""
        return self._key

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(self.cartan.n, dtype=np.int64)))

    def root_image(self, i: int) -> np.ndarray:
        """v(α_i) for 1-based i."""
        return self.matrix[:, i - 1]

    def has_left_descent(self, i: int) -> bool:
        """ℓ(s_i·v) < ℓ(v), i.e. v⁻¹(α_i) is negative."""
        return is_negative(self.inverse[:, i - 1])

    def has_right_descent(self, i: int) -> bool:
        """ℓ(v·s_i) < ℓ(v), i.e. v(α_i) is negative."""
        return is_negative(self.matrix[:, i - 1])

    def left_descents(self) -> List[int]:
        return [i for i in range(1, self.cartan.n + 1) if self.has_left_descent(i)]

    def left_multiply(self, i: int) -> "WeylElement":
        """Return s_i·v."""
        s = simple_reflections(self.cartan)[i - 1]
        return WeylElement(self.cartan, s @ self.matrix, self.inverse @ s)

    def right_multiply(self, i: int) -> "WeylElement":
        """Return v·s_i."""
        s = simple_reflections(self.cartan)[i - 1]
        return WeylElement(self.cartan, self.matrix @ s, s @ self.inverse)

    def length(self) -> int:
        """ℓ(v) by repeated left-descent stripping."""
        return len(reduced_word_of(self))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.cartan == other.cartan and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)


def element_of(word: Sequence[int], cartan: CartanData) -> WeylElement:
    """Return the element s_{i_1}···s_{i_k} of ``word``.

    Args:
        word: 1-based generator indices.
        cartan: The Cartan datum fixing the reflection representation.

    Returns:
        The element; equivalent words give equal elements.
    """
    element = WeylElement.identity(cartan)
    for letter in word:
        element = element.right_multiply(letter)
    return element


def reduced_word_of(element: WeylElement) -> Tuple[int, ...]:
    """Return some reduced word for ``element`` by stripping left descents."""
    letters: List[int] = []
    current = element
    while not current.is_identity:
        descent = current.left_descents()[0]
        letters.append(descent)
        current = current.left_multiply(descent)
    return tuple(letters)


def element_length(element: WeylElement) -> int:
    return element.length()


@dataclass(frozen=True)
class ReducedCheck:
    """Result of ``is_reduced``: the verdict and the roots β_t."""

    reduced: bool
    inversions: Tuple[Tuple[int, ...], ...]

    def __bool__(self) -> bool:
        return self.reduced


def is_reduced(word: Sequence[int], cartan: CartanData) -> ReducedCheck:
    """Decide reducedness through the inversion sequence.

    β_t = s_{i_1}···s_{i_{t-1}}(α_{i_t}); the word is reduced exactly when
    every β_t is a positive root.

    Args:
        word: 1-based generator indices.
        cartan: The Cartan datum.

    Returns:
        A ``ReducedCheck`` holding the verdict and all β_t as integer tuples.
    """
    prefix = WeylElement.identity(cartan)
    roots: List[Tuple[int, ...]] = []
    reduced = True
    for letter in word:
        beta = prefix.root_image(letter)
        roots.append(tuple(int(x) for x in beta))
        if not is_positive(beta):
            reduced = False
        prefix = prefix.right_multiply(letter)
    if reduced:
        assert len(set(roots)) == len(roots), f"Inversion roots of reduced word {tuple(word)} repeat"
    return ReducedCheck(reduced=reduced, inversions=tuple(roots))


def equivalent(word: Sequence[int], other: Sequence[int], cartan: CartanData) -> bool:
    return element_of(word, cartan) == element_of(other, cartan)
