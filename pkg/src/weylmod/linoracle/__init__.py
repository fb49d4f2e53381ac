"""Linear algebra ground truth for type-A quivers.

Exposes:
- `IntervalRep`, `interval_of_vertex`, `intervals_of`, `is_type_a`
- `HomSpace`, `hom_basis`, `arrow_matrix`
- `MonoOracle`: `has_mono`, `brute_closed`, `closure_witness`
- `rank_mod`
- `cross_check`, `CrossCheckReport`: engine against oracle on every small instance, decomposable M included
"""

from .crosscheck import CrossCheckReport, cross_check
from .homspace import HomMap, HomSpace, arrow_matrix, hom_basis
from .intervals import IntervalRep, interval_of_vertex, intervals_of, is_type_a, require_type_a
from .oracle import MonoOracle, rank_mod

__all__ = [
    "CrossCheckReport",
    "cross_check",
    "HomMap",
    "HomSpace",
    "arrow_matrix",
    "hom_basis",
    "IntervalRep",
    "interval_of_vertex",
    "intervals_of",
    "is_type_a",
    "require_type_a",
    "MonoOracle",
    "rank_mod",
]
