"""Built-in Cartan data.

Provides:
- Named quivers and valued Cartan matrices via ``CartanRegistry``.
- Aliases (``example`` for ``exweyl``, ``a3-linear`` for ``a3``).
"""

from __future__ import annotations

from typing import Callable, Dict, List, Optional

from ..base import Loggable
from ..coxeter import CartanData


def _exweyl() -> CartanData:
    return CartanData.from_quiver(4, [(1, 3), (1, 4), (2, 3), (2, 4)], name="exweyl")


def _a2() -> CartanData:
    return CartanData.from_quiver(2, [(1, 2)], name="a2")


def _a3() -> CartanData:
    return CartanData.from_quiver(3, [(1, 2), (2, 3)], name="a3")


def _a3_source() -> CartanData:
    return CartanData.from_quiver(3, [(1, 2), (1, 3)], name="a3-source")


def _kronecker() -> CartanData:
    return CartanData.from_quiver(2, [(1, 2), (1, 2)], name="kronecker")


def _b2() -> CartanData:
    return CartanData.from_matrix([[2, -1], [-2, 2]], name="b2")


def _g2() -> CartanData:
    return CartanData.from_matrix([[2, -1], [-3, 2]], name="g2")


class CartanRegistry(Loggable):
    """Registry of named Cartan data.

    Pre-registers the four-vertex example quiver (``exweyl``, aliased as
    ``example``), ``a2``, ``a3`` (linear, aliased as ``a3-linear``),
    ``a3-source``, ``kronecker`` and the valued ``b2`` and ``g2``.
    """

    def __init__(self) -> None:
        super().__init__()
        self._builders: Dict[str, Callable[[], CartanData]] = {
            "exweyl": _exweyl,
            "example": _exweyl,
            "a2": _a2,
            "a3": _a3,
            "a3-linear": _a3,
            "a3-source": _a3_source,
            "kronecker": _kronecker,
            "b2": _b2,
            "g2": _g2,
        }

    def get(self, name: str) -> Optional[CartanData]:
        """Return the datum registered under ``name`` (case-insensitive), or ``None``."""
        builder = self._builders.get(name.lower())
        return builder() if builder else None

    def register(self, name: str, cartan: CartanData) -> None:
        """Register ``cartan`` under ``name``, replacing an existing entry."""
        self._builders[name.lower()] = lambda: cartan
        self.logger.info(f"Registered Cartan datum: {name}")

    def names(self) -> List[str]:
        return list(self._builders.keys())

    def is_available(self, name: str) -> bool:
        return name.lower() in self._builders
