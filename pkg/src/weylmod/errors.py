"""Exception hierarchy for WeylMod.

Every error raised on purpose by the library derives from ``WeylModError`` so
that callers (and the command line tool) can tell invalid input apart from
exhausted resource limits and from genuine bugs.
"""

from __future__ import annotations

from typing import Any, Optional


class WeylModError(Exception):
    """Base class of all library errors."""


class CartanError(WeylModError, ValueError):
    """Invalid generalized Cartan matrix, quiver or valuation."""


class WordError(WeylModError, ValueError):
    """Letters out of range or a word operation whose precondition fails."""


class InjectiveVertexError(WeylModError, ValueError):
    """An AR-sequence was requested at an injective vertex (r = 0)."""

    def __init__(self, vertex: Any):
        super().__init__(f"No AR-sequence starts at the injective vertex {vertex}")
        self.vertex = vertex


class ZeroModuleError(WeylModError, ValueError):
    """A grid position whose module is zero was used as a module."""

    def __init__(self, vertex: Any):
        super().__init__(f"Vertex {vertex} is the zero module")
        self.vertex = vertex


class UnsupportedModeError(WeylModError):
    """The operation is not available for this Cartan datum."""


class ResourceLimitError(WeylModError):
    """A configured resource cap was exceeded; no answer is given."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"{what} exceeded the configured limit of {limit}")
        self.what = what
        self.limit = limit


class EngineError(WeylModError):
    """Illegal rewriting step or violated sequence precondition."""


class NotRealizableError(WeylModError):
    """An excluded set is not the ρ-image of any word."""

    def __init__(self, message: str, pair: Any):
        super().__init__(f"{message}: {pair}")
        self.pair = pair


class SubcatError(WeylModError, ValueError):
    """Subcategory operation called outside its precondition."""


class OracleDisagreementError(WeylModError):
    """The small-field monomorphism searches returned different answers."""


class InputParseError(WeylModError, ValueError):
    """Malformed command line input; carries its location."""

    def __init__(self, message: str, source: str = "<input>", line: Optional[int] = None, token: Optional[str] = None):
        location = source if line is None else f"{source}:{line}"
        detail = f" near '{token}'" if token is not None else ""
        super().__init__(f"{location}: {message}{detail}")
        self.source = source
        self.line = line
        self.token = token
