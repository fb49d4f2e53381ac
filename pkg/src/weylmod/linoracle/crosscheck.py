"""Exhaustive comparison of the embedding engine with the linear algebra oracle."""

from __future__ import annotations

import itertools
import logging
from typing import List

from pydantic import BaseModel, Field

from ..embedding import EmbeddingEngine
from ..grid import ModMultiset
from ..subcats import CofiniteSubcat, is_submodule_closed
from .oracle import MonoOracle

logger = logging.getLogger(__name__)


class CrossCheckReport(BaseModel):
    cartan: str
    embedding_instances: int = Field(default=0, description="Pairs (M, U) with M indecomposable, U multiplicity free")
    decomposable_instances: int = Field(
        default=0, description="Pairs (M, U) with M the sum of two distinct indecomposables, U multiplicity free"
    )
    closure_instances: int = Field(default=0, description="Subsets of ind A tested for closedness")
    disagreements: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def summary(self) -> str:
        lines = [
            f"cartan: {self.cartan}",
            f"embedding instances: {self.embedding_instances}",
            f"decomposable instances: {self.decomposable_instances}",
            f"closure instances: {self.closure_instances}",
            f"disagreements: {len(self.disagreements)}",
        ]
        if self.disagreements:
            lines.append(f"first disagreement: {self.disagreements[0]}")
        return "\n".join(lines)


def cross_check(engine: EmbeddingEngine, oracle: MonoOracle, max_target: int = 3) -> CrossCheckReport:
    """Compare ``decide_embedding`` with ``has_mono`` and ``is_submodule_closed`` with ``brute_closed``.

    Every indecomposable M is tested against every multiplicity-free U, every
    sum of two distinct indecomposables against every multiplicity-free U with
    at most ``max_target`` summands, and every subset of ind A against the
    brute-force closedness test.
    """
    vertices = engine.quiver.all_existing_vertices()
    report = CrossCheckReport(cartan=engine.quiver.cartan.describe())
    subsets = [subset for size in range(len(vertices) + 1) for subset in itertools.combinations(vertices, size)]

    def compare(module: ModMultiset, target: ModMultiset) -> None:
        by_engine = engine.decide_embedding(module, target).embeds
        by_oracle = oracle.has_mono(module, target)
        if by_engine != by_oracle:
            report.disagreements.append(f"{module} -> {target}: engine {by_engine}, oracle {by_oracle}")

    for vertex in vertices:
        for subset in subsets:
            report.embedding_instances += 1
            compare(ModMultiset.of(vertex), ModMultiset(subset))
    for pair in itertools.combinations(vertices, 2):
        for subset in subsets:
            if len(subset) <= max_target:
                report.decomposable_instances += 1
                compare(ModMultiset(pair), ModMultiset(subset))
    for subset in subsets:
        report.closure_instances += 1
        by_engine = is_submodule_closed(CofiniteSubcat.of(subset), engine).closed
        by_oracle = oracle.brute_closed(subset)
        if by_engine != by_oracle:
            report.disagreements.append(f"C excluding {set(map(str, subset))}: engine {by_engine}, oracle {by_oracle}")
    log = logger.info if report.ok else logger.error
    log(f"Cross check on {report.cartan}: {len(report.disagreements)} disagreements")
    return report
