"""Grid positions and multisets of preinjective modules.

A ``Vertex`` (r, i) stands for the module τ^r I_i. Vertices are ordered
lexicographically on (r, i), which is the order used for ρ-sequences and for
every deterministic listing in the package. A ``ModMultiset`` is the
iso-class of a direct sum of such modules.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Mapping, Tuple

from .errors import EngineError, InputParseError


@dataclass(frozen=True, order=True, slots=True)
class Vertex:
    """Grid position (r, i) with r ≥ 0 and a 1-based index i."""

    r: int
    i: int

    @property
    def is_injective(self) -> bool:
        return self.r == 0

    def tau_inverse(self) -> "Vertex":
        """Return (r-1, i), the end term of the AR-sequence starting here."""
        if self.r == 0:
            raise EngineError(f"τ⁻¹ of the injective vertex {self} is not preinjective")
        return Vertex(self.r - 1, self.i)

    def token(self) -> str:
        """Command line form ``r:i``."""
        return f"{self.r}:{self.i}"

    @classmethod
    def parse(cls, text: str) -> "Vertex":
        """Parse the ``r:i`` syntax.

        Raises:
            InputParseError: On anything else than two non-negative integers.
        """
        parts = text.strip().split(":")
        if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
            raise InputParseError("expected a vertex of the form r:i", token=text)
        r, i = (int(p) for p in parts)
        if i < 1:
            raise InputParseError("vertex indices are 1-based", token=text)
        return cls(r, i)

    def __str__(self) -> str:
        return f"({self.r},{self.i})"


class ModMultiset:
    """Finite multiset of vertices with positive multiplicities.

    Instances are treated as values: every operation returns a new multiset.
    Subtraction never saturates; removing more copies than present raises.
    """

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[Vertex, int] | Iterable[Vertex] | None = None):
        base: Counter[Vertex] = Counter()
        if counts is None:
            pass
        elif isinstance(counts, Mapping):
            for vertex, mult in counts.items():
                if mult < 0:
                    raise EngineError(f"Negative multiplicity {mult} for {vertex}")
                if mult:
                    base[vertex] = mult
        else:
            base.update(counts)
        self._counts = base

    @classmethod
    def of(cls, *vertices: Vertex) -> "ModMultiset":
        return cls(vertices)

    @classmethod
    def power(cls, vertex: Vertex, exponent: int) -> "ModMultiset":
        """Return ``vertex`` with multiplicity ``exponent`` (empty for 0)."""
        return cls({vertex: exponent})

    def multiplicity(self, vertex: Vertex) -> int:
        return self._counts.get(vertex, 0)

    def support(self) -> List[Vertex]:
        """Vertices with positive multiplicity, ascending."""
        return sorted(self._counts)

    def items(self) -> List[Tuple[Vertex, int]]:
        return [(v, self._counts[v]) for v in self.support()]

    def elements(self) -> Iterator[Vertex]:
        """Iterate over all copies, ascending."""
        for vertex, mult in self.items():
            for _ in range(mult):
                yield vertex

    def total(self) -> int:
        return sum(self._counts.values())

    def is_empty(self) -> bool:
        return not self._counts

    def scaled(self, factor: int) -> "ModMultiset":
        if factor < 0:
            raise EngineError(f"Cannot scale a module by {factor}")
        return ModMultiset({v: m * factor for v, m in self._counts.items()})

    def intersection(self, other: "ModMultiset") -> "ModMultiset":
        """Largest common direct summand."""
        return ModMultiset(dict(self._counts & other._counts))

    def without(self, vertex: Vertex, copies: int = 1) -> "ModMultiset":
        return self - ModMultiset.power(vertex, copies)

    def is_submultiset(self, other: "ModMultiset") -> bool:
        return all(other.multiplicity(v) >= m for v, m in self._counts.items())

    def __add__(self, other: "ModMultiset") -> "ModMultiset":
        return ModMultiset(dict(self._counts + other._counts))

    def __sub__(self, other: "ModMultiset") -> "ModMultiset":
        for vertex, mult in other._counts.items():
            if self.multiplicity(vertex) < mult:
                raise EngineError(f"Cannot remove {vertex}^{mult} from {self}")
        result = Counter(self._counts)
        result.subtract(other._counts)
        return ModMultiset(+result)

    def __le__(self, other: "ModMultiset") -> bool:
        return self.is_submultiset(other)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._counts

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.support())

    def __len__(self) -> int:
        return len(self._counts)

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModMultiset):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __str__(self) -> str:
        parts = [str(v) if m == 1 else f"{v}^{m}" for v, m in self.items()]
        return "{" + ", ".join(parts) + "}"

    def __repr__(self) -> str:
        return f"ModMultiset({self})"
