"""Decision procedure for monomorphisms between preinjective modules.

Starting from the sequence 0 → M → M → 0 → 0, every summand of M that the
target cannot provide is replaced by the middle term of its AR-sequence. Each
summand keeps its own exact sequence, a strand, and the state is their direct
sum. Afterwards the engine keeps replacing one over-demanded non-injective
vertex x of the middle term inside one strand: one copy of x is removed, its
AR middle term Z is merged in after cancelling Z against that strand's
cokernel, and τ⁻¹x either cancels a copy in that strand's middle term or joins
its cokernel.

When x occurs in several distinct strands the engine tries them in turn,
depth first. A branch stops with ``NO_EMBED`` as soon as an injective vertex
is over-demanded and with ``EMBEDS`` once the middle term fits into the
target; M embeds iff some branch ends with ``EMBEDS``.
"""

from __future__ import annotations

import math
from typing import Callable, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..arquiver import ARQuiver
from ..base import Loggable
from ..config import Settings
from ..errors import EngineError, InjectiveVertexError, ResourceLimitError
from ..grid import ModMultiset, Vertex
from .state import Outcome, SeqState, Strand, TraceRecord, Verdict
from .targets import EmbeddingTarget, MultisetTarget, SubcatTarget

Chooser = Callable[[List[Vertex]], Vertex]


class EmbeddingEngine(Loggable):
    """Drive ``init_state``/``step_state`` until the sequence conditions settle the question."""

    def __init__(self, quiver: ARQuiver, settings: Optional[Settings] = None):
        super().__init__()
        self.quiver = quiver
        self.settings = settings or quiver.settings

    def default_chooser(self) -> Chooser:
        """Return the canonical choice rule configured in ``Settings.choice_rule``."""
        if self.settings.choice_rule == "largest":
            return max
        return min

    def init_state(self, module: ModMultiset, target: EmbeddingTarget) -> SeqState | Outcome:
        """Build the start state from a decomposable M.

        Summands of M that the target provides are kept (matched greedily) as
        strands 0 → M_k → M_k → 0 → 0; every other summand becomes the strand
        of its AR-sequence. Nothing is cancelled between strands.

        Args:
            module: The module M.
            target: What M should embed into.

        Returns:
            A ``SeqState``, or an ``Outcome`` when M already fits (``EMBEDS``)
            or an injective summand of M is missing from the target (``NO_EMBED``).

        Raises:
            ZeroModuleError: If a summand of M does not exist.
        """
        for vertex in module.support():
            self.quiver.require(vertex)
        for vertex in target.vertices():
            self.quiver.require(vertex)
        start = TraceRecord(step=0, chosen=None, alpha=0, middle=module, coker=ModMultiset())
        strands: List[Strand] = []
        replaced = False
        for vertex, mult in module.items():
            available = target.available(vertex)
            keep = mult if available >= mult else int(available)
            rest = mult - keep
            strands.extend(Strand(ModMultiset.of(vertex)) for _ in range(keep))
            if rest == 0:
                continue
            if vertex.is_injective:
                self.logger.info(f"Injective summand {vertex}^{mult} of M is not available in {target.describe()}")
                return Outcome(
                    verdict=Verdict.NO_EMBED,
                    middle=module,
                    witness=vertex,
                    required=mult,
                    available=available,
                    trace=(start,),
                )
            middle, end = self.quiver.ar_sequence_start(vertex)
            strands.extend(Strand(middle, ModMultiset.of(end)) for _ in range(rest))
            replaced = True
        if not replaced:
            return Outcome(verdict=Verdict.EMBEDS, middle=module, trace=(start,))
        state = SeqState(tuple(strands))
        return SeqState(state.strands, (TraceRecord(0, None, 0, state.middle, state.coker),))

    def step_state(self, state: SeqState, vertex: Vertex, alpha: int = 1, strand: Optional[int] = None) -> SeqState:
        """Replace one copy of ``vertex`` in one strand by its AR-sequence.

        Args:
            state: Current state.
            vertex: A non-injective vertex of the middle term.
            alpha: Exponent recorded for the replaced vertex; the middle term
                must hold at least that many copies.
            strand: Index of the strand to rewrite; defaults to the first
                strand holding ``vertex``.

        Returns:
            The next state with one more trace record.

        Raises:
            InjectiveVertexError: If ``vertex`` is injective.
            EngineError: If ``vertex`` is not in the middle term often enough,
                or not in the given strand.
        """
        if vertex.is_injective:
            raise InjectiveVertexError(vertex)
        if state.middle.multiplicity(vertex) < max(alpha, 1):
            raise EngineError(f"{vertex}^{max(alpha, 1)} is not a summand of the middle term {state.middle}")
        if strand is None:
            strand = state.holding(vertex)[0]
        if not 0 <= strand < len(state.strands) or vertex not in state.strands[strand].middle:
            raise EngineError(f"Strand {strand} does not hold {vertex}")
        old = state.strands[strand]
        rest = old.middle.without(vertex)
        z = self.quiver.ar_middle(vertex)
        shared = old.coker.intersection(z)
        z_rest = z - shared
        coker_rest = old.coker - shared
        end = vertex.tau_inverse()
        if end in rest:
            rest = rest.without(end)
            added = ModMultiset()
        else:
            added = ModMultiset.of(end)
        new = Strand(rest + z_rest, coker_rest + added)
        if self.settings.check_invariants:
            self._check_step(old, vertex, z, new)
        strands = state.strands[:strand] + (new,) + state.strands[strand + 1 :]
        stepped = SeqState(strands)
        record = TraceRecord(
            step=len(state.trace),
            chosen=vertex,
            alpha=alpha,
            middle=stepped.middle,
            coker=stepped.coker,
            strand=strand if len(strands) > 1 else None,
        )
        self.logger.debug(record.format())
        return SeqState(strands, state.trace + (record,))

    def _check_step(self, old: Strand, vertex: Vertex, z: ModMultiset, new: Strand) -> None:
        assert all(v < vertex for v in z.support()), f"AR middle term of {vertex} is not below it"
        assert new.middle.intersection(new.coker).is_empty(), f"strand {new.middle} -> {new.coker} shares a summand"
        if self.quiver.cartan.is_quiver:
            before = self.quiver.dim_of(old.middle) - self.quiver.dim_of(old.coker)
            after = self.quiver.dim_of(new.middle) - self.quiver.dim_of(new.coker)
            assert np.array_equal(before, after), f"dimension not conserved replacing {vertex}: {before} != {after}"

    def run_choices(self, state: SeqState, choices: Sequence[Vertex]) -> SeqState:
        """Fold ``step_state`` over an explicit list of vertices."""
        for vertex in choices:
            state = self.step_state(state, vertex)
        return state

    def decide(self, module: ModMultiset, target: EmbeddingTarget, chooser: Optional[Chooser] = None) -> Outcome:
        """Decide whether M embeds into the target.

        The chooser fixes which eligible vertex is replaced next; every
        distinct strand holding it is tried, depth first, and repeated states
        are skipped. For indecomposable M there is a single strand and the
        search is one straight run.

        Args:
            module: The module M.
            target: A ``MultisetTarget`` or ``SubcatTarget``.
            chooser: Picks the next vertex among the eligible ones; defaults to
                the configured choice rule.

        Returns:
            The ``Outcome`` with the trace of the branch that produced it:
            the first ``EMBEDS`` branch, otherwise the first branch explored.

        Raises:
            ResourceLimitError: If a branch needs more than ``Settings.trace_limit``
                steps or the search visits more than ``Settings.search_limit`` states.
        """
        choose = chooser or self.default_chooser()
        started = self.init_state(module, target)
        if isinstance(started, Outcome):
            return started
        pending: List[SeqState] = [started]
        visited: Set[Tuple] = set()
        rejected: Optional[Outcome] = None
        while pending:
            state = pending.pop()
            key = state.key()
            if key in visited:
                continue
            visited.add(key)
            if len(visited) > self.settings.search_limit:
                raise ResourceLimitError("Embedding search states", self.settings.search_limit)
            eligible, over = self._demands(state.middle, target)
            if over:
                rejected = rejected or self._rejection(state, target, over[0])
                continue
            if not eligible:
                self.logger.info(f"M = {module} embeds into {target.describe()} after {state.steps} steps")
                return Outcome(verdict=Verdict.EMBEDS, middle=state.middle, trace=state.trace)
            vertex = choose(eligible)
            available = target.available(vertex)
            alpha = 1 if available == math.inf else int(available) + 1
            branches = [self.step_state(state, vertex, alpha, index) for index in state.holding(vertex)]
            if branches[0].steps > self.settings.trace_limit:
                raise ResourceLimitError("Embedding trace length", self.settings.trace_limit)
            pending.extend(reversed(branches))
        assert rejected is not None
        self.logger.info(f"M = {module} does not embed into {target.describe()}: {rejected.summary()}")
        return rejected

    @staticmethod
    def _demands(middle: ModMultiset, target: EmbeddingTarget) -> Tuple[List[Vertex], List[Tuple[Vertex, int]]]:
        """Split the over-demanded vertices of ``middle`` into non-injective and injective ones."""
        over: List[Tuple[Vertex, int]] = []
        eligible: List[Vertex] = []
        for vertex, mult in middle.items():
            if mult <= target.available(vertex):
                continue
            if vertex.is_injective:
                over.append((vertex, mult))
            else:
                eligible.append(vertex)
        return eligible, over

    @staticmethod
    def _rejection(state: SeqState, target: EmbeddingTarget, over: Tuple[Vertex, int]) -> Outcome:
        witness, required = over
        return Outcome(
            verdict=Verdict.NO_EMBED,
            middle=state.middle,
            witness=witness,
            required=required,
            available=target.available(witness),
            trace=state.trace,
        )

    def decide_embedding(self, module: ModMultiset, target: ModMultiset, chooser: Optional[Chooser] = None) -> Outcome:
        """Decide whether there is a monomorphism M ↪ U for preinjective M and U."""
        return self.decide(module, MultisetTarget(target), chooser)

    def embeds_into_subcat(
        self, vertex: Vertex, excluded: Sequence[Vertex] | frozenset[Vertex], chooser: Optional[Chooser] = None
    ) -> Outcome:
        """Decide whether the indecomposable ``vertex`` embeds into some U in add C.

        C is the cofinite subcategory missing exactly ``excluded``. For an
        ``EMBEDS`` outcome the final middle term is such a U.
        """
        target = SubcatTarget(excluded)
        if vertex not in target.excluded:
            self.quiver.require(vertex)
            module = ModMultiset.of(vertex)
            start = TraceRecord(0, None, 0, module, ModMultiset())
            return Outcome(verdict=Verdict.EMBEDS, middle=module, trace=(start,))
        return self.decide(ModMultiset.of(vertex), target, chooser)

    @staticmethod
    def suffix_sequence(trace: Sequence[TraceRecord], index: int) -> Tuple[ModMultiset, ModMultiset, ModMultiset]:
        """Return the composed sequence 0 → X_i ⊕ X'_i → Y_i ⊕ X_m ⊕ X'_m → Y_m → 0.

        ``index`` selects the state i of ``trace``; m is its last state.
        """
        if not 0 <= index < len(trace):
            raise EngineError(f"Trace has no state {index}")
        start, last = trace[index], trace[-1]
        return start.middle, start.coker + last.middle, last.coker
