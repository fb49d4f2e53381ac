"""Embedding decisions by AR-sequence rewriting.

Exposes:
- `EmbeddingEngine`: init/step/decide state machine
- `SeqState`, `Strand`, `TraceRecord`, `Outcome`, `Verdict`, `format_trace`
- `EmbeddingTarget`, `MultisetTarget`, `SubcatTarget`, `UNLIMITED`
- `e_rec`, `e_values`, `e_rec_dual`, `m_chain`, `recseq`, `RecSeqResult`
"""

from .engine import Chooser, EmbeddingEngine
from .recursion import RecSeqResult, e_rec, e_rec_dual, e_values, m_chain, recseq
from .state import Outcome, SeqState, Strand, TraceRecord, Verdict, format_trace
from .targets import UNLIMITED, EmbeddingTarget, MultisetTarget, SubcatTarget

__all__ = [
    "Chooser",
    "EmbeddingEngine",
    "RecSeqResult",
    "e_rec",
    "e_rec_dual",
    "e_values",
    "m_chain",
    "recseq",
    "Outcome",
    "SeqState",
    "Strand",
    "TraceRecord",
    "Verdict",
    "format_trace",
    "UNLIMITED",
    "EmbeddingTarget",
    "MultisetTarget",
    "SubcatTarget",
]
