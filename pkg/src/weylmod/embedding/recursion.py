"""Sequences along a two-vertex chain of the preinjective component.

For M_0 = (s, i) and an index j ≠ i, the chain M_0, M_1, M_2, … alternates
between the τ-orbits of i and j, moving one step towards the injectives every
two entries. Repeatedly replacing the chain vertex of the middle term yields
exact sequences

    0 → M_0 → M_m^{E(m)} ⊕ U_m → M_{m+1}^{E(m-1)} → 0

whose multiplicities follow the recursion ``e_rec``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..arquiver import ARQuiver
from ..errors import EngineError, WordError
from ..grid import ModMultiset, Vertex

logger = logging.getLogger(__name__)


def e_rec(alpha: int, beta: int, m: int) -> int:
    """Return E(m) for the valuation (α, β).

    E(0) = 1, E(1) = α, E(2k) = β·E(2k-1) - E(2k-2) and
    E(2k+1) = α·E(2k) - E(2k-1). Once a term is no longer positive the
    sequence stays at 0, so that E(m) = 0 exactly when m ≥ m_ij - 1.
    """
    return e_values(alpha, beta, m)[m]


def e_values(alpha: int, beta: int, m: int) -> List[int]:
    """Return [E(0), …, E(m)]."""
    if m < 0:
        raise ValueError(f"E is defined for m >= 0, got {m}")
    values = [1, alpha]
    while len(values) <= m:
        k = len(values)
        if values[-1] <= 0:
            values.append(0)
            continue
        factor = beta if k % 2 == 0 else alpha
        values.append(max(factor * values[-1] - values[-2], 0))
    return values[: m + 1]


def e_rec_dual(alpha: int, beta: int, m: int) -> int:
    """E(m) for the mirrored recursion, with α and β exchanged."""
    return e_rec(beta, alpha, m)


def m_chain(quiver: ARQuiver, start: Vertex, j: int, count: int) -> List[Optional[Vertex]]:
    """Return M_0, …, M_{count-1}; entries whose module is zero are ``None``.

    M_1 = (t, j) with t = s when j < i and t = s - 1 otherwise, and
    M_{k+2} = τ⁻¹M_k.

    Raises:
        WordError: If j = i, or s = 0 and j > i.
    """
    s, i = start.r, start.i
    if j == i:
        raise WordError(f"The chain needs a second index different from {i}")
    if s == 0 and j > i:
        raise WordError(f"No chain starts at the injective {start} towards the larger index {j}")
    t = s if j < i else s - 1
    chain: List[Optional[Vertex]] = []
    for k in range(count):
        r, index = (s - k // 2, i) if k % 2 == 0 else (t - k // 2, j)
        vertex = Vertex(r, index) if r >= 0 else None
        chain.append(vertex if vertex is not None and quiver.vertex_exists(vertex) else None)
    return chain


@dataclass(frozen=True)
class RecSeqResult:
    """Closed form of the sequence after the chain vertices M_1 … M_{m-1} were replaced.

    Fields:
    - chain: M_0 … M_{m+1}.
    - e: E(0) … E(m).
    - side: U_m, the summands of the middle term off the chain.
    - middle: M_m^{E(m)} ⊕ U_m.
    - coker: M_{m+1}^{E(m-1)}.
    """

    chain: Tuple[Vertex, ...]
    e: Tuple[int, ...]
    side: ModMultiset
    middle: ModMultiset
    coker: ModMultiset

    def choices(self) -> List[Vertex]:
        """The replacements that lead from M_0 to this state: M_k repeated E(k) times, 1 ≤ k < m."""
        m = len(self.e) - 1
        return [self.chain[k] for k in range(1, m) for _ in range(self.e[k])]


def recseq(quiver: ARQuiver, start: Vertex, j: int, m: int) -> RecSeqResult:
    """Return the specialized sequence 0 → M_0 → M_m^{E(m)} ⊕ U_m → M_{m+1}^{E(m-1)} → 0.

    U_1 is the AR middle term of M_0 without M_1, and U_{k+1} adds E(k)
    copies of the AR middle term of M_k without M_{k+1}.

    Args:
        quiver: The AR quiver.
        start: M_0.
        j: Second index of the chain.
        m: Number of the sequence, at least 1.

    Raises:
        EngineError: If E(m-1) = 0 or some M_k with k ≤ m+1 is zero.
    """
    if m < 1:
        raise EngineError(f"Sequences are numbered from 1, got {m}")
    quiver.require(start)
    alpha, beta = quiver.alpha_beta(start.i, j)
    e = e_values(alpha, beta, m)
    if e[m - 1] <= 0:
        raise EngineError(f"E({m - 1}) vanishes for (α, β) = ({alpha}, {beta})")
    chain = m_chain(quiver, start, j, m + 2)
    missing = [k for k, vertex in enumerate(chain) if vertex is None]
    if missing:
        raise EngineError(f"Chain entry M_{missing[0]} from {start} towards {j} is zero")
    vertices = tuple(v for v in chain if v is not None)
    side = ModMultiset()
    for k in range(m):
        exponent = alpha if k % 2 == 0 else beta
        ar_middle = quiver.ar_middle(vertices[k])
        off_chain = ar_middle - ModMultiset.power(vertices[k + 1], exponent)
        side = side + off_chain.scaled(e[k])
    middle = ModMultiset.power(vertices[m], e[m]) + side
    coker = ModMultiset.power(vertices[m + 1], e[m - 1])
    logger.debug(f"recseq({start}, {j}, {m}): middle {middle} coker {coker}")
    return RecSeqResult(chain=vertices, e=tuple(e), side=side, middle=middle, coker=coker)
