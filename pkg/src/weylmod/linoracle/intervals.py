"""Interval modules of type-A quivers.

On a quiver whose underlying graph is a union of paths every indecomposable
is an interval module: a one-dimensional space on each vertex of a connected
support and identity maps along the arrows inside the support. Dimension
vectors of different intervals differ, so a vertex of the AR quiver is matched
to its interval through its knitted dimension vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Set, Tuple

from ..arquiver import ARQuiver
from ..coxeter import CartanData
from ..errors import UnsupportedModeError
from ..grid import ModMultiset, Vertex

Arrow = Tuple[int, int]


@dataclass(frozen=True, order=True)
class IntervalRep:
    """Interval module with the given connected support on an n-vertex quiver."""

    n: int
    support: Tuple[int, ...]

    def dims(self) -> Tuple[int, ...]:
        return tuple(1 if k in self.support else 0 for k in range(1, self.n + 1))

    def contains(self, vertex: int) -> bool:
        return vertex in self.support

    def arrow_map(self, arrow: Arrow) -> int:
        """The scalar on ``arrow``: 1 inside the support, 0 otherwise."""
        source, target = arrow
        return 1 if source in self.support and target in self.support else 0

    @property
    def length(self) -> int:
        return len(self.support)

    def __str__(self) -> str:
        return "[" + ",".join(str(k) for k in self.support) + "]"


def _adjacency(cartan: CartanData) -> Dict[int, Set[int]]:
    adjacency: Dict[int, Set[int]] = {k: set() for k in range(1, cartan.n + 1)}
    for source, target in cartan.arrows:
        adjacency[source].add(target)
        adjacency[target].add(source)
    return adjacency


def is_type_a(cartan: CartanData) -> bool:
    """Whether ``cartan`` is a quiver whose underlying graph is a disjoint union of paths."""
    if not cartan.is_quiver:
        return False
    if len(set(cartan.arrows)) != len(cartan.arrows):
        return False
    adjacency = _adjacency(cartan)
    if any(len(neighbors) > 2 for neighbors in adjacency.values()):
        return False
    # A forest has n - (number of components) edges.
    return len(cartan.arrows) == cartan.n - len(_components(adjacency, set(adjacency)))


def _components(adjacency: Dict[int, Set[int]], vertices: Set[int]) -> List[Set[int]]:
    remaining = set(vertices)
    components = []
    while remaining:
        stack = [remaining.pop()]
        component = set(stack)
        while stack:
            current = stack.pop()
            for neighbor in adjacency[current] & remaining:
                remaining.discard(neighbor)
                component.add(neighbor)
                stack.append(neighbor)
        components.append(component)
    return components


def require_type_a(cartan: CartanData) -> None:
    """Raise ``UnsupportedModeError`` unless ``cartan`` is of type A."""
    if not is_type_a(cartan):
        raise UnsupportedModeError(f"The linear algebra oracle needs a type-A quiver, got {cartan.describe()}")


def interval_of_vertex(quiver: ARQuiver, vertex: Vertex) -> IntervalRep:
    """Return the interval module of the preinjective vertex ``vertex``.

    Raises:
        UnsupportedModeError: If the quiver is not of type A.
        ZeroModuleError: If the vertex does not exist.
    """
    require_type_a(quiver.cartan)
    dims = quiver.dim_vector(vertex)
    support = {k for k, d in enumerate(dims, start=1) if d}
    if any(d > 1 for d in dims) or len(_components(_adjacency(quiver.cartan), support)) != 1:
        raise UnsupportedModeError(f"{vertex} has dimension vector {dims}, which is not an interval")
    return IntervalRep(n=quiver.n, support=tuple(sorted(support)))


def intervals_of(quiver: ARQuiver, module: ModMultiset) -> Tuple[IntervalRep, ...]:
    """Expand a multiset of vertices into its list of interval summands, ascending."""
    return tuple(interval_of_vertex(quiver, vertex) for vertex in module.elements())
