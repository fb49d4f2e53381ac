"""Cartan data and Coxeter matrices.

A ``CartanData`` is either derived from an acyclic quiver whose arrows all go
from a smaller to a larger vertex (``QUIVER`` mode) or given directly as a
generalized Cartan matrix (``VALUED`` mode). The valuation ``a`` records how
often a j-vertex occurs in the middle term of an AR-sequence starting at an
i-vertex; by default ``a_ij = -c_ij``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import sympy

from ..errors import CartanError

logger = logging.getLogger(__name__)

INFINITY = math.inf

Matrix = Tuple[Tuple[int, ...], ...]


class CartanMode(str, Enum):
    QUIVER = "quiver"
    VALUED = "valued"


@dataclass(frozen=True)
class CartanData:
    """Generalized Cartan matrix with its valuation and, in quiver mode, arrows.

    Fields:
    - n: number of simple modules.
    - c: n×n table, 0-based storage; use ``entry(i, j)`` for 1-based access.
    - mode: ``QUIVER`` or ``VALUED``.
    - arrows: (source, target) pairs, 1-based, quiver mode only.
    - values: n×n valuation table a_ij (0 off the edges).
    - name: optional label used in logs and reports.
    """

    n: int
    c: Matrix
    mode: CartanMode
    arrows: Tuple[Tuple[int, int], ...] = ()
    values: Optional[Matrix] = None
    name: str = ""
    _neighbors: Dict[int, Tuple[int, ...]] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise CartanError(f"Negative number of vertices: {self.n}")
        if len(self.c) != self.n or any(len(row) != self.n for row in self.c):
            raise CartanError(f"Cartan table must be {self.n}x{self.n}")
        for i in range(self.n):
            if self.c[i][i] != 2:
                raise CartanError(f"Diagonal entry c_{i + 1}{i + 1} must be 2, got {self.c[i][i]}")
            for j in range(self.n):
                if i == j:
                    continue
                if self.c[i][j] > 0:
                    raise CartanError(f"Off-diagonal entry c_{i + 1}{j + 1} = {self.c[i][j]} is positive")
                if (self.c[i][j] == 0) != (self.c[j][i] == 0):
                    raise CartanError(f"c_{i + 1}{j + 1} and c_{j + 1}{i + 1} must vanish together")
        if self.values is None:
            default = tuple(tuple(-x if i != j else 0 for j, x in enumerate(row)) for i, row in enumerate(self.c))
            object.__setattr__(self, "values", default)
        self._check_values()
        neighbors = {
            i: tuple(j for j in range(1, self.n + 1) if j != i and self.c[i - 1][j - 1] != 0)
            for i in range(1, self.n + 1)
        }
        self._neighbors.update(neighbors)

    def _check_values(self) -> None:
        values = self.values
        assert values is not None
        if len(values) != self.n or any(len(row) != self.n for row in values):
            raise CartanError(f"Valuation table must be {self.n}x{self.n}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                a_ij, a_ji = values[i][j], values[j][i]
                if a_ij < 0 or a_ji < 0:
                    raise CartanError(f"Valuation ({a_ij}, {a_ji}) on edge {i + 1}-{j + 1} is negative")
                if a_ij * a_ji != self.c[i][j] * self.c[j][i]:
                    raise CartanError(
                        f"Valuation ({a_ij}, {a_ji}) on edge {i + 1}-{j + 1} does not multiply to "
                        f"c_ij*c_ji = {self.c[i][j] * self.c[j][i]}"
                    )

    @classmethod
    def from_quiver(cls, n: int, arrows: Iterable[Tuple[int, int]], name: str = "") -> "CartanData":
        """Build the Cartan datum of an admissibly ordered acyclic quiver.

        Args:
            n: Number of vertices.
            arrows: 1-based (source, target) pairs; multiple arrows repeat.
            name: Optional label.

        Returns:
            A ``QUIVER`` mode datum with c_ij = -(number of arrows between i and j).

        Raises:
            CartanError: On an arrow from a larger to a smaller index, a loop,
                or an index out of range.
        """
        arrow_list = tuple((int(s), int(t)) for s, t in arrows)
        table = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for source, target in arrow_list:
            if not (1 <= source <= n and 1 <= target <= n):
                raise CartanError(f"Arrow {source}->{target} leaves the vertex range 1..{n}")
            if source >= target:
                raise CartanError(
                    f"Arrow {source}->{target} is not admissible: arrows must go from a smaller to a larger vertex"
                )
            table[source - 1][target - 1] -= 1
            table[target - 1][source - 1] -= 1
        return cls(n=n, c=_freeze(table), mode=CartanMode.QUIVER, arrows=arrow_list, name=name)

    @classmethod
    def from_matrix(
        cls,
        rows: Sequence[Sequence[int]],
        valuation: Optional[Mapping[Tuple[int, int], Tuple[int, int]]] = None,
        name: str = "",
    ) -> "CartanData":
        """Build a ``VALUED`` datum from a generalized Cartan matrix.

        Args:
            rows: The matrix rows.
            valuation: Optional overrides ``{(i, j): (a_ij, a_ji)}`` with 1-based i < j.
            name: Optional label.
        """
        n = len(rows)
        table = _freeze(rows)
        values = [[-table[i][j] if i != j else 0 for j in range(n)] for i in range(n)]
        for (i, j), (a_ij, a_ji) in (valuation or {}).items():
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise CartanError(f"Valuation names an invalid edge {i}-{j}")
            values[i - 1][j - 1] = a_ij
            values[j - 1][i - 1] = a_ji
        return cls(n=n, c=table, mode=CartanMode.VALUED, values=_freeze(values), name=name)

    @property
    def is_quiver(self) -> bool:
        return self.mode is CartanMode.QUIVER

    def entry(self, i: int, j: int) -> int:
        """Return c_ij for 1-based indices."""
        return self.c[i - 1][j - 1]

    def valuation(self, i: int, j: int) -> int:
        """Return a_ij for 1-based indices."""
        assert self.values is not None
        return self.values[i - 1][j - 1]

    def neighbors(self, i: int) -> Tuple[int, ...]:
        """Indices j ≠ i joined to i by an edge, ascending."""
        return self._neighbors[i]

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1) for j in self.neighbors(i) if i < j]

    def as_array(self) -> np.ndarray:
        return np.array(self.c, dtype=np.int64)

    def restricted(self, indices: Sequence[int], name: str = "") -> "CartanData":
        """Return the datum of the full subquiver (or principal submatrix) on ``indices``.

        The kept vertices are renumbered 1..k in increasing order, which keeps
        admissibly ordered arrows admissible.
        """
        kept = sorted(set(indices))
        position = {old: new for new, old in enumerate(kept, start=1)}
        if self.is_quiver:
            arrows = [(position[s], position[t]) for s, t in self.arrows if s in position and t in position]
            return CartanData.from_quiver(len(kept), arrows, name=name)
        rows = [[self.entry(i, j) for j in kept] for i in kept]
        valuation = {
            (position[i], position[j]): (self.valuation(i, j), self.valuation(j, i))
            for i in kept
            for j in kept
            if i < j and self.entry(i, j) != 0
        }
        return CartanData.from_matrix(rows, valuation, name=name)

    def describe(self) -> str:
        label = self.name or "cartan"
        return f"{label} (n={self.n}, {self.mode.value})"


@dataclass(frozen=True)
class CoxeterMatrix:
    """Coxeter matrix m with entries in {1, 2, 3, 4, 6, ∞} (``math.inf``)."""

    m: Tuple[Tuple[float, ...], ...]

    @property
    def n(self) -> int:
        return len(self.m)

    def entry(self, i: int, j: int) -> float:
        """Return m_ij for 1-based indices."""
        return self.m[i - 1][j - 1]

    def order(self, i: int, j: int) -> int:
        """Return m_ij as an int; raises when it is infinite."""
        value = self.entry(i, j)
        if value == INFINITY:
            raise CartanError(f"m_{i}{j} is infinite")
        return int(value)

    def rows(self) -> List[List[str]]:
        return [[format_coxeter_entry(x) for x in row] for row in self.m]


def coxeter_value(product: int) -> float:
    """Map c_ij·c_ji to m_ij: 0→2, 1→3, 2→4, 3→6, ≥4→∞."""
    if product < 0:
        raise CartanError(f"c_ij*c_ji must be non-negative, got {product}")
    return {0: 2, 1: 3, 2: 4, 3: 6}.get(product, INFINITY)


def format_coxeter_entry(value: float) -> str:
    return "inf" if value == INFINITY else str(int(value))


def build_coxeter_matrix(cartan: CartanData) -> CoxeterMatrix:
    """Return the Coxeter matrix of ``cartan``.

    Args:
        cartan: A validated Cartan datum.

    Returns:
        The Coxeter matrix with m_ii = 1 and m_ij read off c_ij·c_ji.
    """
    n = cartan.n
    table = tuple(
        tuple(1 if i == j else coxeter_value(cartan.c[i][j] * cartan.c[j][i]) for j in range(n)) for i in range(n)
    )
    logger.debug(f"Coxeter matrix of {cartan.describe()}: {table}")
    return CoxeterMatrix(m=table)


def is_finite_type(cox: CoxeterMatrix) -> bool:
    """Decide whether the Coxeter group is finite.

    Uses the cosine form B_ij = -cos(π/m_ij) (with -1 for m_ij = ∞): the group
    is finite exactly when B is positive definite. The entries are exact
    algebraic numbers and Sylvester's criterion is applied to the leading
    principal minors, so affine forms give an exact zero minor.
    """
    n = cox.n
    form = sympy.Matrix(n, n, lambda i, j: _cosine_entry(cox.m[i][j]))
    return all(sympy.expand(form[:k, :k].det()).is_positive is True for k in range(1, n + 1))


def _cosine_entry(value: float) -> sympy.Expr:
    if value == INFINITY:
        return sympy.Integer(-1)
    return -sympy.cos(sympy.pi / int(value))


def _freeze(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)
