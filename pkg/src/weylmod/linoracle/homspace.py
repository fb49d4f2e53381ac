"""Hom-spaces between direct sums of interval modules.

A morphism f: M → N is a family of matrices f_x: M_x → N_x with
N_a·f_x = f_y·M_a for every arrow a: x → y. For direct sums the space splits
into blocks Hom(M_s, N_t), one per pair of summands; each block is the
nullspace of a small integer system, solved exactly with sympy.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from sympy import Matrix, ilcm, zeros

from .intervals import Arrow, IntervalRep

HomMap = Dict[int, Matrix]


@lru_cache(maxsize=4096)
def _pair_basis(
    arrows: Tuple[Arrow, ...], source: IntervalRep, target: IntervalRep
) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """Integral basis of Hom(source, target) as tuples of (vertex, scalar) pairs."""
    variables = sorted(set(source.support) & set(target.support))
    if not variables:
        return ()
    column = {x: k for k, x in enumerate(variables)}
    rows: List[List[int]] = []
    for arrow in arrows:
        x, y = arrow
        row = [0] * len(variables)
        if x in column:
            row[column[x]] += target.arrow_map(arrow)
        if y in column:
            row[column[y]] -= source.arrow_map(arrow)
        if any(row):
            rows.append(row)
    if rows:
        vectors = Matrix(rows).nullspace()
    else:
        vectors = [Matrix([1 if k == j else 0 for k in range(len(variables))]) for j in range(len(variables))]
    basis = []
    for vector in vectors:
        scale = ilcm(1, *(entry.q for entry in vector))
        basis.append(tuple((x, int(vector[column[x]] * scale)) for x in variables))
    return tuple(basis)


def _positions(summands: Sequence[IntervalRep], vertex: int) -> Dict[int, int]:
    """Map the index of every summand living at ``vertex`` to its coordinate there."""
    inside = [k for k, summand in enumerate(summands) if summand.contains(vertex)]
    return {k: position for position, k in enumerate(inside)}


def dims_of(summands: Sequence[IntervalRep], n: int) -> Tuple[int, ...]:
    return tuple(sum(1 for s in summands if s.contains(x)) for x in range(1, n + 1))


def arrow_matrix(summands: Sequence[IntervalRep], arrow: Arrow) -> Matrix:
    """The map of ``⊕ summands`` along ``arrow`` in the summand coordinates."""
    x, y = arrow
    at_x, at_y = _positions(summands, x), _positions(summands, y)
    matrix = zeros(len(at_y), len(at_x))
    for k, column in at_x.items():
        if k in at_y:
            matrix[at_y[k], column] = summands[k].arrow_map(arrow)
    return matrix


@dataclass(frozen=True)
class HomSpace:
    """Exact basis of Hom(⊕ source, ⊕ target) over the rationals.

    Each basis element maps every vertex x to a matrix of shape
    dim target_x × dim source_x.
    """

    n: int
    arrows: Tuple[Arrow, ...]
    source: Tuple[IntervalRep, ...]
    target: Tuple[IntervalRep, ...]
    basis: Tuple[HomMap, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def zero_map(self) -> HomMap:
        source_dims, target_dims = dims_of(self.source, self.n), dims_of(self.target, self.n)
        return {x: zeros(target_dims[x - 1], source_dims[x - 1]) for x in range(1, self.n + 1)}

    def combine(self, coefficients: Sequence[int]) -> HomMap:
        """Return Σ c_k·b_k."""
        result = self.zero_map()
        for coefficient, element in zip(coefficients, self.basis):
            if coefficient:
                for x in result:
                    result[x] = result[x] + coefficient * element[x]
        return result

    def residuals(self, hom: HomMap) -> List[Matrix]:
        """N_a·f_x - f_y·M_a for every arrow a: x → y; all zero for a morphism."""
        return [
            arrow_matrix(self.target, (x, y)) * hom[x] - hom[y] * arrow_matrix(self.source, (x, y))
            for x, y in self.arrows
        ]


def hom_basis(
    n: int, arrows: Sequence[Arrow], source: Sequence[IntervalRep], target: Sequence[IntervalRep]
) -> HomSpace:
    """Return a basis of Hom(⊕ source, ⊕ target), block by block.

    Args:
        n: Number of quiver vertices.
        arrows: The arrows of the quiver.
        source: Summands of M.
        target: Summands of N.
    """
    arrow_tuple = tuple(arrows)
    source_tuple, target_tuple = tuple(source), tuple(target)
    source_dims, target_dims = dims_of(source_tuple, n), dims_of(target_tuple, n)
    source_pos = {x: _positions(source_tuple, x) for x in range(1, n + 1)}
    target_pos = {x: _positions(target_tuple, x) for x in range(1, n + 1)}
    basis: List[HomMap] = []
    for s, summand in enumerate(source_tuple):
        for t, other in enumerate(target_tuple):
            for vector in _pair_basis(arrow_tuple, summand, other):
                element = {x: zeros(target_dims[x - 1], source_dims[x - 1]) for x in range(1, n + 1)}
                for x, value in vector:
                    element[x][target_pos[x][t], source_pos[x][s]] = value
                basis.append(element)
    return HomSpace(n=n, arrows=arrow_tuple, source=source_tuple, target=target_tuple, basis=tuple(basis))
