"""The preinjective component of the Auslander–Reiten quiver.

Vertices (r, i) stand for τ^r I_i. The AR-sequence starting at (r, i) is

    0 → (r, i) → ⊕_{j<i} (r, j)^{a_ij} ⊕ ⊕_{j>i} (r-1, j)^{a_ij} → (r-1, i) → 0

restricted to vertices whose module is nonzero. In quiver mode the
dimension vectors are knitted slice by slice from the injectives; in valued
mode existence is decided on the Coxeter side by following the sorting word
of the element s_1···s_n.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

import numpy as np

from ..base import Loggable
from ..config import Settings
from ..coxeter import CartanData, WeylElement, build_coxeter_matrix, is_finite_type
from ..coxeter.cartan import coxeter_value
from ..coxeter.element import is_positive
from ..errors import CartanError, InjectiveVertexError, ResourceLimitError, UnsupportedModeError, ZeroModuleError
from ..grid import ModMultiset, Vertex

DimVector = Tuple[int, ...]


class SliceCache(Loggable):
    """Completed slices of the preinjective component.

    Slices are appended in increasing r and never modified afterwards. Each
    slice maps an index i to the dimension vector of (r, i) (``None`` in
    valued mode) for every existing vertex of that slice.
    """

    def __init__(self) -> None:
        super().__init__()
        self._slices: List[Dict[int, Optional[np.ndarray]]] = []

    def __len__(self) -> int:
        return len(self._slices)

    def slice(self, r: int) -> Dict[int, Optional[np.ndarray]]:
        return self._slices[r]

    def append(self, entries: Dict[int, Optional[np.ndarray]]) -> None:
        self._slices.append(entries)
        self.logger.debug(f"Completed slice {len(self._slices) - 1} with indices {sorted(entries)}")

    def clear(self) -> None:
        self._slices.clear()
        self.logger.info("Cleared slice cache")

    def get_cache_stats(self) -> Dict[str, int]:
        return {
            "slices": len(self._slices),
            "vertices": sum(len(entries) for entries in self._slices),
        }


class ARQuiver(Loggable):
    """Combinatorial model of the preinjective component of a Cartan datum."""

    def __init__(self, cartan: CartanData, settings: Optional[Settings] = None):
        super().__init__()
        self.cartan = cartan
        self.settings = settings or Settings()
        self.coxeter = build_coxeter_matrix(cartan)
        self.finite_type = is_finite_type(self.coxeter)
        self._cache = SliceCache()
        # Prefix element of the sorting word, valued existence only.
        self._sorting_prefix = WeylElement.identity(cartan)
        self._exhausted = False
        self._path_counts = self._count_paths() if cartan.is_quiver else None

    @property
    def n(self) -> int:
        return self.cartan.n

    def alpha_beta(self, i: int, j: int) -> Tuple[int, int]:
        """Return (α, β) = (a_ij, a_ji) for the edge {i, j}, (0, 0) without an edge.

        Raises:
            CartanError: If i = j.
        """
        if i == j:
            raise CartanError(f"alpha_beta needs two different vertices, got {i} twice")
        alpha, beta = self.cartan.valuation(i, j), self.cartan.valuation(j, i)
        assert coxeter_value(alpha * beta) == self.coxeter.entry(i, j), f"valuation of {i}-{j} contradicts m_ij"
        return alpha, beta

    def vertex_exists(self, vertex: Vertex) -> bool:
        """Return whether τ^r I_i is nonzero."""
        if vertex.r < 0 or not 1 <= vertex.i <= self.n:
            return False
        self._ensure_slices(vertex.r)
        if vertex.r >= len(self._cache):
            return False
        return vertex.i in self._cache.slice(vertex.r)

    def require(self, vertex: Vertex) -> None:
        """Raise ``ZeroModuleError`` unless ``vertex`` exists."""
        if not self.vertex_exists(vertex):
            raise ZeroModuleError(vertex)

    def dim_vector(self, vertex: Vertex) -> DimVector:
        """Return the dimension vector of ``vertex`` (quiver mode).

        Raises:
            UnsupportedModeError: In valued mode.
            ZeroModuleError: If the vertex does not exist.
        """
        if not self.cartan.is_quiver:
            raise UnsupportedModeError("Dimension vectors need a quiver; this datum is valued")
        self.require(vertex)
        dims = self._cache.slice(vertex.r)[vertex.i]
        assert dims is not None
        return tuple(int(x) for x in dims)

    def dim_of(self, module: ModMultiset) -> np.ndarray:
        total = np.zeros(self.n, dtype=np.int64)
        for vertex, mult in module.items():
            total += mult * np.asarray(self.dim_vector(vertex), dtype=np.int64)
        return total

    def ar_middle(self, vertex: Vertex) -> ModMultiset:
        """Middle term of the AR-sequence starting at ``vertex``."""
        return self.ar_sequence_start(vertex)[0]

    def ar_sequence_start(self, vertex: Vertex) -> Tuple[ModMultiset, Vertex]:
        """Return (middle, end) of the AR-sequence starting at ``vertex``.

        Raises:
            InjectiveVertexError: If r = 0.
            ZeroModuleError: If the vertex does not exist.
        """
        if vertex.r == 0:
            raise InjectiveVertexError(vertex)
        self.require(vertex)
        return ModMultiset(self.irreducible_arrows(vertex)), vertex.tau_inverse()

    def tau_inverse(self, vertex: Vertex) -> Vertex:
        if vertex.r == 0:
            raise InjectiveVertexError(vertex)
        self.require(vertex)
        return vertex.tau_inverse()

    def irreducible_arrows(self, vertex: Vertex) -> Dict[Vertex, int]:
        """Targets of the irreducible maps leaving ``vertex`` with their multiplicities."""
        r, i = vertex.r, vertex.i
        targets: Dict[Vertex, int] = {}
        for j in self.cartan.neighbors(i):
            target = Vertex(r, j) if j < i else Vertex(r - 1, j)
            if target.r >= 0 and self.vertex_exists(target):
                targets[target] = self.cartan.valuation(i, j)
        return targets

    def existing_vertices(self, max_r: int) -> List[Vertex]:
        """Existing vertices with r ≤ ``max_r``, ascending."""
        self._ensure_slices(max_r)
        return [
            Vertex(r, i) for r in range(min(max_r + 1, len(self._cache))) for i in sorted(self._cache.slice(r))
        ]

    def all_existing_vertices(self) -> List[Vertex]:
        """All of ind of the preinjective component (finite type only)."""
        if not self.finite_type:
            raise UnsupportedModeError(f"{self.cartan.describe()} has infinitely many preinjectives")
        while not self._exhausted:
            self._ensure_slices(len(self._cache))
        return [Vertex(r, i) for r in range(len(self._cache)) for i in sorted(self._cache.slice(r))]

    def exists_by_sorting_word(self, vertex: Vertex) -> bool:
        """Coxeter-side existence: (r, i) exists iff appending s_i keeps the sorting word reduced."""
        return vertex in set(self._sorting_vertices(vertex.r))

    def cache_stats(self) -> Dict[str, int]:
        return self._cache.get_cache_stats()

    def _ensure_slices(self, r: int) -> None:
        while len(self._cache) <= r and not self._exhausted:
            if len(self._cache) >= self.settings.max_slices:
                raise ResourceLimitError("AR quiver slice count", self.settings.max_slices)
            entries = self._next_slice()
            if not entries:
                self._exhausted = True
                self.logger.info(
                    f"Preinjective component of {self.cartan.describe()} ends after {len(self._cache)} slices"
                )
                return
            self._cache.append(entries)

    def _next_slice(self) -> Dict[int, Optional[np.ndarray]]:
        r = len(self._cache)
        if self.cartan.is_quiver:
            return self._knit_slice(r)
        return {v.i: None for v in self._sorting_slice(r)}

    def _count_paths(self) -> np.ndarray:
        n = self.n
        adjacency = np.zeros((n, n), dtype=np.int64)
        for source, target in self.cartan.arrows:
            adjacency[source - 1, target - 1] += 1
        paths = np.eye(n, dtype=np.int64)
        power = np.eye(n, dtype=np.int64)
        for _ in range(n):
            power = power @ adjacency
            paths += power
        return paths

    def _knit_slice(self, r: int) -> Dict[int, Optional[np.ndarray]]:
        assert self._path_counts is not None
        if r == 0:
            # dim(0, i)_j counts the paths from j to i.
            return {i: self._path_counts[:, i - 1].copy() for i in range(1, self.n + 1)}
        previous = self._cache.slice(r - 1)
        current: Dict[int, Optional[np.ndarray]] = {}
        for i in range(1, self.n + 1):
            if i not in previous:
                continue
            total = -previous[i]
            for j in self.cartan.neighbors(i):
                mult = self.cartan.valuation(i, j)
                source = current if j < i else previous
                if j in source:
                    total = total + mult * source[j]
            if is_positive(total):
                current[i] = total
        return current

    def _sorting_slice(self, r: int) -> List[Vertex]:
        previous = self._cache.slice(r - 1) if r > 0 else None
        found = []
        for i in range(1, self.n + 1):
            if previous is not None and i not in previous:
                continue
            if is_positive(self._sorting_prefix.root_image(i)):
                self._sorting_prefix = self._sorting_prefix.right_multiply(i)
                found.append(Vertex(r, i))
        return found

    def _sorting_vertices(self, max_r: int) -> List[Vertex]:
        """Sorting-word scan independent of the slice cache."""
        prefix = WeylElement.identity(self.cartan)
        alive = set(range(1, self.n + 1))
        found: List[Vertex] = []
        for r in range(max_r + 1):
            still_alive = set()
            for i in range(1, self.n + 1):
                if i in alive and is_positive(prefix.root_image(i)):
                    prefix = prefix.right_multiply(i)
                    found.append(Vertex(r, i))
                    still_alive.add(i)
            alive = still_alive
            if not alive:
                break
        return found
