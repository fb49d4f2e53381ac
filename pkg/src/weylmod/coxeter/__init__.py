"""Weyl groups as Coxeter groups.

Exposes:
- `CartanData`, `CartanMode`, `CoxeterMatrix`, `build_coxeter_matrix`, `is_finite_type`
- `rho`, `word_compare`, `braid_neighbors`, `Ordering`, word formatting helpers
- `WeylElement`, `element_of`, `is_reduced`, `element_length`
- `leftmost_bfs`, `leftmost_greedy`, `exchange_test`
"""

from .cartan import INFINITY, CartanData, CartanMode, CoxeterMatrix, build_coxeter_matrix, is_finite_type
from .element import ReducedCheck, WeylElement, element_length, element_of, equivalent, is_reduced, reduced_word_of
from .leftmost import exchange_test, is_leftmost, leftmost_bfs, leftmost_greedy, leftmost_of_element
from .words import (
    Ordering,
    PairSeq,
    Word,
    braid_neighbors,
    format_pairs,
    format_word,
    make_word,
    rho,
    word_compare,
    word_of_pairs,
)

__all__ = [
    "INFINITY",
    "CartanData",
    "CartanMode",
    "CoxeterMatrix",
    "build_coxeter_matrix",
    "is_finite_type",
    "ReducedCheck",
    "WeylElement",
    "element_length",
    "element_of",
    "equivalent",
    "is_reduced",
    "reduced_word_of",
    "exchange_test",
    "is_leftmost",
    "leftmost_bfs",
    "leftmost_greedy",
    "leftmost_of_element",
    "Ordering",
    "PairSeq",
    "Word",
    "braid_neighbors",
    "format_pairs",
    "format_word",
    "make_word",
    "rho",
    "word_compare",
    "word_of_pairs",
]
