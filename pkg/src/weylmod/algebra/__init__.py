"""Preset Cartan data and the per-datum facade.

Exposes:
- `CartanRegistry`: built-in quivers and valued Cartan matrices
- `HereditaryAlgebra`: Coxeter matrix, AR quiver, engine and caches of one datum
- `LeftmostCache`, `resolve_cartan`, `preset_names`, `get_registry`
"""

from .factory import LEFTMOST_METHODS, HereditaryAlgebra, LeftmostCache, get_registry, preset_names, resolve_cartan
from .presets import CartanRegistry

__all__ = [
    "LEFTMOST_METHODS",
    "HereditaryAlgebra",
    "LeftmostCache",
    "get_registry",
    "preset_names",
    "resolve_cartan",
    "CartanRegistry",
]
