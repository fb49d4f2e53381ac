"""Facade bundling everything computed from one Cartan datum.

Provides:
- Caching of leftmost words per group element via ``LeftmostCache``.
- ``HereditaryAlgebra``: Coxeter matrix, AR quiver, embedding engine and
  the operations of the command line tool on top of them.
- ``resolve_cartan`` for preset names.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence

from ..arquiver import ARQuiver
from ..base import Loggable
from ..config import Settings
from ..coxeter import (
    CartanData,
    Word,
    build_coxeter_matrix,
    element_of,
    format_word,
    leftmost_bfs,
    leftmost_of_element,
    make_word,
)
from ..embedding import EmbeddingEngine
from ..errors import EngineError
from ..linoracle import MonoOracle
from .presets import CartanRegistry

LEFTMOST_METHODS = ("bfs", "greedy", "both")


class LeftmostCache(Loggable):
    """Cached leftmost words keyed by the canonical form of the group element."""

    def __init__(self) -> None:
        super().__init__()
        self._cache: Dict[str, Word] = {}
        self._hits = 0

    @staticmethod
    def get_cache_key(method: str, key: bytes) -> str:
        """Return ``"{method}:{element key in hex}"``."""
        return f"{method}:{key.hex()}"

    def get_cached_word(self, cache_key: str) -> Optional[Word]:
        word = self._cache.get(cache_key)
        if word is not None:
            self._hits += 1
        return word

    def cache_word(self, cache_key: str, word: Word) -> None:
        self._cache[cache_key] = word
        self.logger.debug(f"Cached leftmost word '{format_word(word)}'")

    def clear_cache(self) -> None:
        self._cache.clear()
        self._hits = 0
        self.logger.info("Cleared leftmost cache")

    def get_cache_stats(self) -> Dict[str, int]:
        return {"cached_words": len(self._cache), "hits": self._hits}


class HereditaryAlgebra(Loggable):
    """Everything the tool computes for one Cartan datum.

    Responsibilities:
    - Build the Coxeter matrix, the AR quiver and the embedding engine once.
    - Cache leftmost words so that repeated queries for one element are free.
    - Provide the linear algebra oracle for type-A quivers.
    """

    def __init__(self, cartan: CartanData, settings: Optional[Settings] = None):
        super().__init__()
        self.settings = settings or Settings()
        self.cartan = cartan
        self.coxeter = build_coxeter_matrix(cartan)
        self.quiver = ARQuiver(cartan, self.settings)
        self.engine = EmbeddingEngine(self.quiver, self.settings)
        self.cache_manager = LeftmostCache()
        self._oracle: Optional[MonoOracle] = None
        self.logger.info(f"Created algebra for {cartan.describe()}")

    @classmethod
    def from_preset(cls, name: str, settings: Optional[Settings] = None) -> "HereditaryAlgebra":
        """Create the algebra of a registered preset.

        Raises:
            ValueError: If no preset of that name exists.
        """
        return cls(resolve_cartan(name), settings)

    def word(self, letters: Sequence[int]) -> Word:
        """Check the letters against 1..n."""
        return make_word(letters, self.cartan.n)

    def leftmost(self, letters: Sequence[int], method: str = "bfs") -> Word:
        """Return the leftmost word of the element of ``letters``.

        Args:
            letters: The word.
            method: ``"bfs"`` (braid search), ``"greedy"`` (grid scan) or
                ``"both"``, which runs both and requires them to agree.

        Raises:
            ValueError: For an unknown method.
            EngineError: If ``"both"`` finds two different words.
        """
        if method not in LEFTMOST_METHODS:
            raise ValueError(f"Unknown leftmost method: {method}. Supported methods: {', '.join(LEFTMOST_METHODS)}")
        word = self.word(letters)
        if method == "both":
            searched, scanned = self.leftmost(word, "bfs"), self.leftmost(word, "greedy")
            if searched != scanned:
                raise EngineError(
                    f"leftmost_bfs gives '{format_word(searched)}' but leftmost_greedy gives '{format_word(scanned)}'"
                )
            return searched
        element = element_of(word, self.cartan)
        cache_key = self.cache_manager.get_cache_key(method, element.key)
        cached = self.cache_manager.get_cached_word(cache_key)
        if cached is not None:
            return cached
        if method == "bfs":
            result = leftmost_bfs(word, self.cartan, self.settings.bfs_node_cap)
        else:
            result = leftmost_of_element(element)
        self.cache_manager.cache_word(cache_key, result)
        return result

    @property
    def oracle(self) -> MonoOracle:
        """The linear algebra oracle (type-A quivers only)."""
        if self._oracle is None:
            self._oracle = MonoOracle(self.quiver, self.settings)
        return self._oracle

    def clear_caches(self) -> None:
        self.cache_manager.clear_cache()

    def cache_stats(self) -> Dict[str, Dict[str, int]]:
        return {"leftmost": self.cache_manager.get_cache_stats(), "ar_quiver": self.quiver.cache_stats()}


_registry = CartanRegistry()


def get_registry() -> CartanRegistry:
    return _registry


def resolve_cartan(name: str) -> CartanData:
    """Return the preset named ``name``.

    Raises:
        ValueError: If no preset of that name exists.
    """
    cartan = _registry.get(name)
    if cartan is None:
        raise ValueError(f"Unknown preset: {name}. Available presets: {', '.join(preset_names())}")
    return cartan


def preset_names() -> List[str]:
    return _registry.names()
