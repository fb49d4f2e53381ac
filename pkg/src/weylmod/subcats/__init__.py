"""Cofinite subcategories, the word dictionary and the bijection check.

Exposes:
- `CofiniteSubcat`, `ClosureReport`, `Restriction`
- `subcat_of_word`, `word_of_excluded_set`, `is_submodule_closed`
- `restrict_to_subalgebra`, `prefix_leftmost_check`, `closed_subsets`
- `verify_bijection`, `BijectionReport`, `TableEntry`, `words_in_order`, `leftmost_words`
"""

from .bijection import BijectionReport, TableEntry, leftmost_words, verify_bijection, words_in_order
from .subcat import (
    ClosureReport,
    CofiniteSubcat,
    Restriction,
    closed_subsets,
    is_submodule_closed,
    prefix_leftmost_check,
    restrict_to_subalgebra,
    subcat_of_word,
    word_of_excluded_set,
)

__all__ = [
    "BijectionReport",
    "TableEntry",
    "leftmost_words",
    "verify_bijection",
    "words_in_order",
    "ClosureReport",
    "CofiniteSubcat",
    "Restriction",
    "closed_subsets",
    "is_submodule_closed",
    "prefix_leftmost_check",
    "restrict_to_subalgebra",
    "subcat_of_word",
    "word_of_excluded_set",
]
