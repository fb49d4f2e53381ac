"""Cofinite subcategories and the word dictionary.

A cofinite subcategory C is stored through its complement: the finitely many
indecomposables it misses. All of them are preinjective, so the complement is
a set of vertices of the AR quiver. A word w gives the subcategory missing
the vertices of ρ(w); C is submodule closed iff no missing vertex embeds into
an object of add C.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from ..arquiver import ARQuiver
from ..coxeter import CartanData, Word, is_leftmost, rho
from ..embedding import Chooser, EmbeddingEngine
from ..errors import NotRealizableError, ResourceLimitError, SubcatError
from ..grid import ModMultiset, Vertex

logger = logging.getLogger(__name__)

# Largest ground set for which closed_subsets walks the power set.
MAX_SUBSET_GROUND = 20


@dataclass(frozen=True)
class CofiniteSubcat:
    """The subcategory of mod A missing exactly ``excluded``.

    ``dropped`` lists the ρ-pairs of the defining word that are zero modules;
    it is empty for subcategories not built from a word.
    """

    excluded: FrozenSet[Vertex] = frozenset()
    dropped: Tuple[Vertex, ...] = ()

    @classmethod
    def of(cls, vertices: Iterable[Vertex]) -> "CofiniteSubcat":
        return cls(excluded=frozenset(vertices))

    def contains(self, vertex: Vertex) -> bool:
        return vertex not in self.excluded

    def sorted_excluded(self) -> List[Vertex]:
        return sorted(self.excluded)

    @property
    def is_whole_category(self) -> bool:
        return not self.excluded

    def describe(self) -> str:
        return "{" + ", ".join(str(v) for v in self.sorted_excluded()) + "}"


@dataclass(frozen=True)
class ClosureReport:
    """Result of ``is_submodule_closed``: every excluded vertex that embeds into add C with a certificate."""

    subcat: CofiniteSubcat
    witnesses: Dict[Vertex, ModMultiset] = field(default_factory=dict)

    @property
    def closed(self) -> bool:
        return not self.witnesses

    def summary(self) -> str:
        if self.closed:
            return f"closed: C excludes {self.subcat.describe()}"
        first = min(self.witnesses)
        return f"not closed: {first} embeds into {self.witnesses[first]}"


class Restriction(NamedTuple):
    cartan: CartanData
    subcat: CofiniteSubcat


def subcat_of_word(word: Sequence[int], quiver: ARQuiver, warn: bool = True) -> CofiniteSubcat:
    """Return C_w, the subcategory missing the existing vertices of ρ(w).

    Pairs of ρ(w) that are zero modules are dropped, recorded in
    ``CofiniteSubcat.dropped`` and logged as a warning unless ``warn`` is off.
    """
    excluded = []
    dropped = []
    for pair in rho(word):
        (excluded if quiver.vertex_exists(pair) else dropped).append(pair)
    if dropped and warn:
        logger.warning(f"Word {tuple(word)} places letters on zero modules {', '.join(map(str, dropped))}")
    return CofiniteSubcat(excluded=frozenset(excluded), dropped=tuple(dropped))


def word_of_excluded_set(excluded: Iterable[Vertex], quiver: Optional[ARQuiver] = None) -> Word:
    """Return the word w with ρ(w) = sorted(excluded).

    Args:
        excluded: A finite set of vertices.
        quiver: When given, every vertex must exist in it.

    Returns:
        The unique word whose ρ-sequence lists ``excluded`` in ascending order.

    Raises:
        NotRealizableError: If the smallest vertex is not injective or two
            consecutive vertices do not follow the ρ row rule; ``pair`` is the
            offending vertex.
        ZeroModuleError: If a vertex does not exist in ``quiver``.
    """
    pairs = sorted(set(excluded))
    if quiver is not None:
        for pair in pairs:
            quiver.require(pair)
    if not pairs:
        return ()
    if pairs[0].r != 0:
        raise NotRealizableError("The smallest excluded vertex is not injective", pairs[0])
    for previous, current in zip(pairs, pairs[1:]):
        expected_row = previous.r if current.i > previous.i else previous.r + 1
        if current.r != expected_row:
            raise NotRealizableError(f"No word places a letter after {previous} at", current)
    return tuple(p.i for p in pairs)


def is_submodule_closed(
    subcat: CofiniteSubcat, engine: EmbeddingEngine, chooser: Optional[Chooser] = None
) -> ClosureReport:
    """Decide whether C is closed under submodules.

    Only the excluded vertices need checking: C is closed iff none of them
    embeds into an object of add C.
    """
    witnesses: Dict[Vertex, ModMultiset] = {}
    for vertex in subcat.sorted_excluded():
        outcome = engine.embeds_into_subcat(vertex, subcat.excluded, chooser)
        if outcome.embeds:
            witnesses[vertex] = outcome.middle
    report = ClosureReport(subcat=subcat, witnesses=witnesses)
    logger.debug(f"C excluding {subcat.describe()}: {report.summary()}")
    return report


def restrict_to_subalgebra(subcat: CofiniteSubcat, indices: Iterable[int], quiver: ARQuiver) -> Restriction:
    """Carry C over to the Cartan datum on the vertex subset J.

    The kept vertices are renumbered 1..|J| in increasing order, and (r, i)
    becomes (r, position of i in J).

    Raises:
        SubcatError: If J leaves 1..n or C misses a vertex (r, i) with i ∉ J.
    """
    kept = sorted(set(indices))
    outside = [i for i in kept if not 1 <= i <= quiver.n]
    if outside:
        raise SubcatError(f"Indices {outside} are outside 1..{quiver.n}")
    stray = [v for v in subcat.sorted_excluded() if v.i not in kept]
    if stray:
        raise SubcatError(f"C misses {', '.join(map(str, stray))} outside J = {kept}")
    position = {old: new for new, old in enumerate(kept, start=1)}
    label = f"{quiver.cartan.name or 'cartan'}|{','.join(map(str, kept))}"
    restricted = quiver.cartan.restricted(kept, name=label)
    mapped = frozenset(Vertex(v.r, position[v.i]) for v in subcat.excluded)
    target = ARQuiver(restricted, quiver.settings)
    missing = [v for v in sorted(mapped) if not target.vertex_exists(v)]
    if missing:
        raise SubcatError(f"{', '.join(map(str, missing))} are zero modules of {restricted.describe()}")
    return Restriction(restricted, CofiniteSubcat(excluded=mapped))


def prefix_leftmost_check(word: Sequence[int], cartan: CartanData) -> bool:
    """Return whether every initial subword of ``word`` is leftmost."""
    letters = tuple(word)
    return all(is_leftmost(letters[:k], cartan) for k in range(len(letters) + 1))


def closed_subsets(engine: EmbeddingEngine) -> List[CofiniteSubcat]:
    """Return every submodule-closed cofinite subcategory (finite type only).

    All subsets of ind A are tested; the result is sorted by size and then by
    the sorted excluded vertices.

    Raises:
        UnsupportedModeError: For infinite type.
        ResourceLimitError: If ind A has more than ``MAX_SUBSET_GROUND`` vertices.
    """
    ground = engine.quiver.all_existing_vertices()
    if len(ground) > MAX_SUBSET_GROUND:
        raise ResourceLimitError("Number of indecomposables for the subset walk", MAX_SUBSET_GROUND)
    found = []
    for size in range(len(ground) + 1):
        for subset in itertools.combinations(ground, size):
            subcat = CofiniteSubcat.of(subset)
            if is_submodule_closed(subcat, engine).closed:
                found.append(subcat)
    logger.info(f"{len(found)} of {2 ** len(ground)} subsets of ind A are submodule closed")
    return found
