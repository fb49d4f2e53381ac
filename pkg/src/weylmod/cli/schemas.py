"""Pydantic models of the ``--json`` output.

Every subcommand prints exactly one of these models; the text output carries
the same information. Vertices appear as ``{"r": .., "i": ..}`` objects and
words as lists of 1-based indices.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from ..embedding import Outcome, TraceRecord
from ..grid import ModMultiset, Vertex


class VertexModel(BaseModel):
    r: int
    i: int

    @classmethod
    def of(cls, vertex: Vertex) -> "VertexModel":
        return cls(r=vertex.r, i=vertex.i)


class SummandModel(BaseModel):
    vertex: VertexModel
    multiplicity: int

    @classmethod
    def listing(cls, module: ModMultiset) -> List["SummandModel"]:
        return [cls(vertex=VertexModel.of(v), multiplicity=m) for v, m in module.items()]


class CoxeterResponse(BaseModel):
    cartan: str
    n: int
    matrix: List[List[str]] = Field(description="m_ij with 'inf' for infinite orders")
    finite_type: bool


class RhoResponse(BaseModel):
    word: List[int]
    pairs: List[VertexModel]


class CompareResponse(BaseModel):
    w1: List[int]
    w2: List[int]
    result: str = Field(description="'less', 'equal' or 'greater'")


class LeftmostResponse(BaseModel):
    word: List[int]
    leftmost: List[int]
    method: str
    is_leftmost: bool


class ReducedResponse(BaseModel):
    word: List[int]
    reduced: bool
    length: int = Field(description="Length of the group element")


class TraceStepModel(BaseModel):
    step: int
    chosen: Optional[VertexModel]
    strand: Optional[int] = Field(default=None, description="Rewritten strand when M has several")
    middle: List[SummandModel]
    coker: List[SummandModel]

    @classmethod
    def of(cls, record: TraceRecord) -> "TraceStepModel":
        return cls(
            step=record.step,
            chosen=VertexModel.of(record.chosen) if record.chosen is not None else None,
            strand=record.strand,
            middle=SummandModel.listing(record.middle),
            coker=SummandModel.listing(record.coker),
        )


class EmbedResponse(BaseModel):
    verdict: str = Field(description="'embeds' or 'no_embed'")
    certificate: Optional[List[SummandModel]] = Field(default=None, description="Final middle term when M embeds")
    witness: Optional[VertexModel] = None
    required: Optional[int] = None
    available: Optional[int] = Field(default=None, description="Copies of the witness in U; null when unlimited")
    summary: str
    trace: Optional[List[TraceStepModel]] = None

    @classmethod
    def of(cls, outcome: Outcome, with_trace: bool) -> "EmbedResponse":
        response = cls(verdict=outcome.verdict.value, summary=outcome.summary())
        if outcome.embeds:
            response.certificate = SummandModel.listing(outcome.middle)
        else:
            assert outcome.witness is not None
            response.witness = VertexModel.of(outcome.witness)
            response.required = outcome.required
            response.available = None if outcome.available == float("inf") else int(outcome.available)
        if with_trace:
            response.trace = [TraceStepModel.of(record) for record in outcome.trace]
        return response


class ClosedResponse(BaseModel):
    excluded: List[VertexModel]
    word: Optional[List[int]] = Field(default=None, description="The defining word, when given")
    dropped: List[VertexModel] = Field(default_factory=list, description="ρ-pairs of the word on zero modules")
    closed: bool
    witnesses: Dict[str, List[SummandModel]] = Field(
        default_factory=dict, description="Excluded r:i mapped to a module of add C it embeds into"
    )


class EnumerateEntry(BaseModel):
    word: List[int]
    excluded: List[VertexModel]


class EnumerateResponse(BaseModel):
    cartan: str
    max_len: int
    leftmost: List[EnumerateEntry]


class DimsEntry(BaseModel):
    vertex: VertexModel
    dims: List[int]


class DimsResponse(BaseModel):
    cartan: str
    vertices: List[DimsEntry]


class DotResponse(BaseModel):
    slices: int
    dot: str


class PrefixResponse(BaseModel):
    word: List[int]
    prefixes_leftmost: bool


class RestrictResponse(BaseModel):
    subset: List[int]
    cartan: str
    excluded: List[VertexModel]
    closed_before: bool
    closed_after: bool


class ErrorResponse(BaseModel):
    error: str
    kind: str
