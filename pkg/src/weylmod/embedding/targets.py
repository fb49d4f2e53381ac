"""Targets of the embedding decision.

The engine only asks a target how many copies of a vertex it offers. A
concrete module U offers its multiplicities; a cofinite subcategory offers
unlimited copies of every vertex it contains and none of the excluded ones.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from typing import FrozenSet, Iterable

from ..grid import ModMultiset, Vertex

UNLIMITED = math.inf


class EmbeddingTarget(ABC):
    """Abstract base class for the module side of ``M ↪ U``."""

    @abstractmethod
    def available(self, vertex: Vertex) -> float:
        """Return how many copies of ``vertex`` the target provides.

        Args:
            vertex: An existing vertex.

        Returns:
            A non-negative int, or ``UNLIMITED``.
        """

    @abstractmethod
    def describe(self) -> str:
        """Return a short human-readable description."""

    def vertices(self) -> Iterable[Vertex]:
        return ()


class MultisetTarget(EmbeddingTarget):
    """A fixed preinjective module U."""

    def __init__(self, module: ModMultiset):
        self.module = module

    def available(self, vertex: Vertex) -> float:
        return self.module.multiplicity(vertex)

    def describe(self) -> str:
        return f"U = {self.module}"

    def vertices(self) -> Iterable[Vertex]:
        return self.module.support()


class SubcatTarget(EmbeddingTarget):
    """Some U in add C for the cofinite subcategory C with the given complement."""

    def __init__(self, excluded: Iterable[Vertex]):
        self.excluded: FrozenSet[Vertex] = frozenset(excluded)

    def available(self, vertex: Vertex) -> float:
        return 0 if vertex in self.excluded else UNLIMITED

    def describe(self) -> str:
        return "add C, C excluding {" + ", ".join(str(v) for v in sorted(self.excluded)) + "}"

    def vertices(self) -> Iterable[Vertex]:
        return sorted(self.excluded)
