"""Brute-force monomorphism search on type-A quivers.

``MonoOracle`` answers "is there a monomorphism M ↪ N?" by linear algebra
alone: it computes Hom(M, N) exactly and looks for a coefficient vector over
a small prime field whose morphism is injective at every vertex. Every
configured field must give the same answer.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, Optional, Sequence, Tuple

from sympy import Matrix
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from ..arquiver import ARQuiver
from ..base import Loggable
from ..config import Settings
from ..errors import OracleDisagreementError, ResourceLimitError
from ..grid import ModMultiset, Vertex
from .homspace import HomMap, HomSpace, dims_of, hom_basis
from .intervals import IntervalRep, interval_of_vertex, require_type_a


def rank_mod(matrix: Matrix, prime: int) -> int:
    """Rank of an integer matrix over the field with ``prime`` elements."""
    if 0 in matrix.shape:
        return 0
    return DomainMatrix.from_Matrix(matrix).convert_to(GF(prime)).rank()


def is_injective_mod(hom: HomMap, source_dims: Sequence[int], prime: int) -> bool:
    return all(rank_mod(hom[x], prime) == d for x, d in enumerate(source_dims, start=1) if d)


class MonoOracle(Loggable):
    """Independent monomorphism and closedness checks for a type-A quiver."""

    def __init__(self, quiver: ARQuiver, settings: Optional[Settings] = None):
        super().__init__()
        require_type_a(quiver.cartan)
        self.quiver = quiver
        self.settings = settings or quiver.settings
        self.arrows: Tuple[Tuple[int, int], ...] = tuple(quiver.cartan.arrows)

    def interval(self, vertex: Vertex) -> IntervalRep:
        return interval_of_vertex(self.quiver, vertex)

    def summands(self, module: ModMultiset) -> Tuple[IntervalRep, ...]:
        return tuple(self.interval(vertex) for vertex in module.elements())

    def hom_space(self, source: ModMultiset, target: ModMultiset) -> HomSpace:
        return hom_basis(self.quiver.n, self.arrows, self.summands(source), self.summands(target))

    def hom_dim(self, source: ModMultiset, target: ModMultiset) -> int:
        return self.hom_space(source, target).dim

    def _trimmed_target(self, source: ModMultiset, target: ModMultiset) -> ModMultiset:
        """Drop copies of a summand X of N beyond dim Hom(M, X).

        Hom(M, X^k) = Hom(M, X) ⊗ F^k, and an automorphism of X^k moves any
        morphism into the first dim Hom(M, X) copies.
        """
        kept: Dict[Vertex, int] = {}
        for vertex, mult in target.items():
            kept[vertex] = min(mult, self.hom_dim(source, ModMultiset.of(vertex)))
        return ModMultiset(kept)

    def has_mono(self, source: ModMultiset, target: ModMultiset) -> bool:
        """Decide whether M embeds into N.

        Args:
            source: M as a multiset of preinjective vertices.
            target: N as a multiset of preinjective vertices.

        Returns:
            Whether some morphism M → N is injective at every vertex.

        Raises:
            ResourceLimitError: If the enumeration would exceed
                ``Settings.oracle_hom_cap`` coefficients.
            OracleDisagreementError: If the prime fields disagree.
        """
        n = self.quiver.n
        source_summands = self.summands(source)
        source_dims = dims_of(source_summands, n)
        if not any(source_dims):
            return True
        target = self._trimmed_target(source, target)
        target_dims = dims_of(self.summands(target), n)
        if any(d > e for d, e in zip(source_dims, target_dims)):
            return False
        space = hom_basis(n, self.arrows, source_summands, self.summands(target))
        for x, d in enumerate(source_dims, start=1):
            if d and all(element[x].is_zero_matrix for element in space.basis):
                self.logger.debug(f"No morphism from {source} to {target} is nonzero at vertex {x}")
                return False
        answers = {prime: self._search(space, source_dims, prime) for prime in self.settings.oracle_primes}
        if len(set(answers.values())) > 1:
            self.logger.error(f"Prime fields disagree on {source} -> {target}: {answers}")
            raise OracleDisagreementError(f"Monomorphism search for {source} -> {target} depends on the field: {answers}")
        return next(iter(answers.values()))

    def _search(self, space: HomSpace, source_dims: Sequence[int], prime: int) -> bool:
        if is_injective_mod(space.combine([1] * space.dim), source_dims, prime):
            return True
        if space.dim > self.settings.oracle_hom_cap:
            raise ResourceLimitError("Hom dimension for the monomorphism search", self.settings.oracle_hom_cap)
        for coefficients in itertools.product(range(prime), repeat=space.dim):
            if any(coefficients) and is_injective_mod(space.combine(coefficients), source_dims, prime):
                return True
        return False

    def brute_closed(self, excluded: Iterable[Vertex]) -> bool:
        """Decide submodule closedness of the subcategory missing ``excluded``.

        Every excluded M is tested against U, the sum of all other
        indecomposables, each taken ℓ(M) + ``oracle_multiplicity_slack`` times.
        """
        return self.closure_witness(excluded) is None

    def closure_witness(self, excluded: Iterable[Vertex]) -> Optional[Vertex]:
        """Return the smallest excluded vertex that embeds into add C, if any."""
        missing = frozenset(excluded)
        others = [v for v in self.quiver.all_existing_vertices() if v not in missing]
        for vertex in sorted(missing):
            bound = self.interval(vertex).length + self.settings.oracle_multiplicity_slack
            universe = ModMultiset({v: bound for v in others})
            if self.has_mono(ModMultiset.of(vertex), universe):
                self.logger.info(f"{vertex} embeds into add C for C excluding {sorted(missing)}")
                return vertex
        return None

