"""Exhaustive check of the correspondence between leftmost words and closed subcategories.

Words are generated in <_l order. The first word met for a group element is
its leftmost word, so leftmost detection needs no search; the search result
``leftmost_bfs`` is still compared against it for every element found.
"""

from __future__ import annotations

import itertools
import logging
from typing import Dict, FrozenSet, Iterator, List, Optional

from pydantic import BaseModel, Field

from ..arquiver import ARQuiver
from ..coxeter import CartanData, Word, element_of, format_word, leftmost_bfs
from ..coxeter.words import order_key
from ..embedding import EmbeddingEngine
from ..errors import NotRealizableError, ResourceLimitError
from ..grid import Vertex
from .subcat import closed_subsets, is_submodule_closed, subcat_of_word, word_of_excluded_set

logger = logging.getLogger(__name__)

DEFAULT_WORD_CAP = 500_000


class TableEntry(BaseModel):
    """One row of the leftmost word ↔ excluded set table."""

    word: str = Field(description="Leftmost word, space separated")
    excluded: List[str] = Field(description="Excluded vertices as r:i tokens, ascending")
    closed: bool = Field(description="Whether the subcategory is submodule closed")


class BijectionReport(BaseModel):
    """Counters, violations and the word table of one ``verify_bijection`` run."""

    cartan: str
    max_len: int
    finite_type: bool
    words_checked: int = 0
    words_skipped: int = Field(default=0, description="Words with a ρ-pair on a zero module")
    elements: int = Field(default=0, description="Distinct group elements met")
    leftmost_words: int = 0
    closed_subcats: int = Field(default=0, description="Closed subcategories among the checked words")
    closed_subsets: Optional[int] = Field(default=None, description="Closed subsets of ind A (finite type)")
    violations: List[str] = Field(default_factory=list)
    table: List[TableEntry] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        if self.violations:
            return False
        if self.closed_subsets is not None:
            return self.closed_subsets == self.leftmost_words
        return True

    def summary(self) -> str:
        lines = [
            f"cartan: {self.cartan}",
            f"max length: {self.max_len}",
            f"words checked: {self.words_checked} (skipped {self.words_skipped})",
            f"group elements: {self.elements}",
            f"leftmost words: {self.leftmost_words}",
            f"closed subcategories: {self.closed_subcats}",
        ]
        if self.closed_subsets is not None:
            lines.append(f"closed subsets of ind A: {self.closed_subsets}")
        lines.append(f"violations: {len(self.violations)}")
        if self.violations:
            lines.append(f"first violation: {self.violations[0]}")
        lines.append("bijective" if self.ok else "NOT bijective")
        return "\n".join(lines)


def words_in_order(n: int, max_len: int) -> Iterator[Word]:
    """All words over 1..n of length ≤ ``max_len`` in <_l order."""
    for length in range(max_len + 1):
        yield from sorted(itertools.product(range(1, n + 1), repeat=length), key=order_key)


def leftmost_words(cartan: CartanData, max_len: int) -> List[Word]:
    """Leftmost words of length ≤ ``max_len`` in <_l order."""
    seen = set()
    found: List[Word] = []
    for word in words_in_order(cartan.n, max_len):
        key = element_of(word, cartan).key
        if key not in seen:
            seen.add(key)
            found.append(word)
    return found


def _tokens(excluded: FrozenSet[Vertex]) -> List[str]:
    return [v.token() for v in sorted(excluded)]


def verify_bijection(
    engine: EmbeddingEngine, max_len: Optional[int] = None, word_cap: int = DEFAULT_WORD_CAP
) -> BijectionReport:
    """Check that w ↦ C_w matches leftmost words with submodule-closed subcategories.

    For every word up to ``max_len`` whose ρ-pairs all exist, C_w must be
    closed exactly when w is leftmost. Distinct leftmost words must give
    distinct subcategories, every closed subcategory met must come back from
    ``word_of_excluded_set`` as a leftmost word, and no leftmost word may
    place a letter on a zero module. In finite type ``max_len`` defaults to
    the number of indecomposables (the length of the longest element) and the
    closed subsets of ind A are counted as well.

    Args:
        engine: Embedding engine of the algebra.
        max_len: Largest word length; required in infinite type.
        word_cap: Largest number of words enumerated.

    Returns:
        The report; violations are listed, never raised.

    Raises:
        ResourceLimitError: If more than ``word_cap`` words would be enumerated.
        ValueError: If ``max_len`` is missing in infinite type.
    """
    quiver: ARQuiver = engine.quiver
    cartan = quiver.cartan
    finite = quiver.finite_type
    if max_len is None:
        if not finite:
            raise ValueError(f"{cartan.describe()} is of infinite type; give a maximal word length")
        max_len = len(quiver.all_existing_vertices())
    total_words = sum(cartan.n**length for length in range(max_len + 1))
    if total_words > word_cap:
        raise ResourceLimitError("Number of enumerated words", word_cap)

    report = BijectionReport(cartan=cartan.describe(), max_len=max_len, finite_type=finite)
    leftmost_of: Dict[bytes, Word] = {}
    subcat_owner: Dict[FrozenSet[Vertex], Word] = {}
    closed_found: Dict[FrozenSet[Vertex], Word] = {}

    for word in words_in_order(cartan.n, max_len):
        key = element_of(word, cartan).key
        leftmost = key not in leftmost_of
        if leftmost:
            leftmost_of[key] = word
            report.leftmost_words += 1
            searched = leftmost_bfs(word, cartan, engine.settings.bfs_node_cap)
            if searched != word:
                report.violations.append(
                    f"first word '{format_word(word)}' of its element differs from leftmost_bfs '{format_word(searched)}'"
                )
        subcat = subcat_of_word(word, quiver, warn=False)
        if subcat.dropped:
            report.words_skipped += 1
            if leftmost:
                report.violations.append(
                    f"leftmost word '{format_word(word)}' places letters on zero modules "
                    f"{', '.join(map(str, subcat.dropped))}"
                )
            continue
        report.words_checked += 1
        closed = is_submodule_closed(subcat, engine).closed
        if closed:
            report.closed_subcats += 1
            closed_found.setdefault(subcat.excluded, word)
        if closed != leftmost:
            kind = "leftmost but not closed" if leftmost else "closed but not leftmost"
            report.violations.append(f"'{format_word(word)}' is {kind}: C excludes {subcat.describe()}")
        if leftmost:
            other = subcat_owner.setdefault(subcat.excluded, word)
            if other != word:
                report.violations.append(
                    f"leftmost words '{format_word(other)}' and '{format_word(word)}' exclude the same set"
                )
            report.table.append(TableEntry(word=format_word(word), excluded=_tokens(subcat.excluded), closed=closed))

    report.elements = len(leftmost_of)
    candidates = dict(closed_found)
    if finite:
        subsets = closed_subsets(engine)
        report.closed_subsets = len(subsets)
        for subcat in subsets:
            candidates.setdefault(subcat.excluded, ())
    leftmost_words = set(leftmost_of.values())
    for excluded in sorted(candidates, key=lambda s: (len(s), sorted(s))):
        try:
            word = word_of_excluded_set(excluded, quiver)
        except NotRealizableError as error:
            report.violations.append(f"closed set {{{', '.join(map(str, sorted(excluded)))}}} is not realizable: {error}")
            continue
        if word not in leftmost_words:
            report.violations.append(f"closed set realized by '{format_word(word)}', which is not a leftmost word")

    log = logger.info if report.ok else logger.error
    log(f"verify_bijection on {report.cartan} up to length {max_len}: {len(report.violations)} violations")
    return report
