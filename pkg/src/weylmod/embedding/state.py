"""Rewriting state of the embedding decision.

A ``SeqState`` stands for an exact sequence 0 → M → middle → coker → 0 of
preinjective modules. It is the direct sum of one ``Strand`` per summand of M
that was taken apart; the engine rewrites one strand at a time and never
cancels summands between two strands. The trace keeps one ``TraceRecord`` per
state, the first one for the start state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from ..grid import ModMultiset, Vertex

StrandKey = Tuple[Tuple[Tuple[Vertex, int], ...], Tuple[Tuple[Vertex, int], ...]]


@dataclass(frozen=True)
class TraceRecord:
    """One engine step: the replaced vertex (``None`` for the start state) and the result.

    ``alpha`` is the exponent of the replaced vertex in the (S2) bookkeeping,
    one more than its availability in the target. ``strand`` is the index of
    the rewritten strand when the state has more than one.
    """

    step: int
    chosen: Optional[Vertex]
    alpha: int
    middle: ModMultiset
    coker: ModMultiset
    strand: Optional[int] = None

    def format(self) -> str:
        action = "init" if self.chosen is None else f"replace {self.chosen.token()}"
        if self.strand is not None:
            action += f" in strand {self.strand}"
        return f"step {self.step}: {action} -> middle {self.middle} coker {self.coker}"


@dataclass(frozen=True)
class Strand:
    """Exact sequence 0 → M_k → middle → coker → 0 of one summand M_k of M.

    Middle term and cokernel of a strand never share a summand.
    """

    middle: ModMultiset
    coker: ModMultiset = field(default_factory=ModMultiset)

    def key(self) -> StrandKey:
        return tuple(self.middle.items()), tuple(self.coker.items())


@dataclass(frozen=True)
class SeqState:
    """Strands of the current sequence and the trace that produced them."""

    strands: Tuple[Strand, ...]
    trace: Tuple[TraceRecord, ...] = field(default=())

    @classmethod
    def single(cls, middle: ModMultiset, coker: Optional[ModMultiset] = None) -> "SeqState":
        """State made of one strand, e.g. a hand-written sequence."""
        return cls((Strand(middle, coker or ModMultiset()),))

    @cached_property
    def middle(self) -> ModMultiset:
        """X ⊕ X', the sum of the strand middle terms."""
        total = ModMultiset()
        for strand in self.strands:
            total = total + strand.middle
        return total

    @cached_property
    def coker(self) -> ModMultiset:
        """Y, the sum of the strand cokernels."""
        total = ModMultiset()
        for strand in self.strands:
            total = total + strand.coker
        return total

    @property
    def steps(self) -> int:
        return max(len(self.trace) - 1, 0)

    def key(self) -> Tuple[StrandKey, ...]:
        """Iso-class of the strand family, independent of the strand order."""
        return tuple(sorted(strand.key() for strand in self.strands))

    def holding(self, vertex: Vertex) -> List[int]:
        """Indices of the strands whose middle term contains ``vertex``, one per distinct strand."""
        indices: List[int] = []
        seen = set()
        for index, strand in enumerate(self.strands):
            if vertex in strand.middle and strand.key() not in seen:
                seen.add(strand.key())
                indices.append(index)
        return indices


class Verdict(str, Enum):
    EMBEDS = "embeds"
    NO_EMBED = "no_embed"


@dataclass(frozen=True)
class Outcome:
    """Terminal result of a decision.

    Fields:
    - verdict: ``EMBEDS`` or ``NO_EMBED``.
    - middle: final middle term; for ``EMBEDS`` a certificate U' ⊆ U containing M.
    - witness: the over-demanded injective vertex for ``NO_EMBED``.
    - required: multiplicity of the witness in the middle term.
    - available: multiplicity the target provides (``math.inf`` when unlimited).
    - trace: the states leading to the result.
    """

    verdict: Verdict
    middle: ModMultiset
    witness: Optional[Vertex] = None
    required: int = 0
    available: float = 0
    trace: Tuple[TraceRecord, ...] = ()

    @property
    def embeds(self) -> bool:
        return self.verdict is Verdict.EMBEDS

    def summary(self) -> str:
        if self.embeds:
            return f"YES: certificate {self.middle}"
        provided = "unlimited" if self.available == math.inf else str(int(self.available))
        return f"NO: requires {self.witness}^{self.required}, U provides {provided}"


def format_trace(trace: Sequence[TraceRecord]) -> List[str]:
    return [record.format() for record in trace]
