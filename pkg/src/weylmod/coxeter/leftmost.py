"""Leftmost words: the <_l-smallest word of a group element.

``leftmost_bfs`` is the exhaustive reference: it reduces the word by nil
moves and then searches the braid class. ``leftmost_greedy`` scans the grid
positions in order and emits every letter that is a left descent of what
remains. ``exchange_test`` decides whether one braid substitution makes a
word smaller.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Deque, Sequence, Set

from ..errors import ResourceLimitError, WordError
from ..grid import Vertex
from .cartan import INFINITY, CartanData, build_coxeter_matrix
from .element import WeylElement, element_of
from .words import Ordering, Word, adjacent_repeat, alternating, braid_neighbors, order_key, rho, word_compare

logger = logging.getLogger(__name__)

DEFAULT_NODE_CAP = 1_000_000


def leftmost_bfs(word: Sequence[int], cartan: CartanData, node_cap: int = DEFAULT_NODE_CAP) -> Word:
    """Return the leftmost word equivalent to ``word`` by exhaustive search.

    Adjacent equal letters are deleted first. The braid class of the result
    is then explored breadth first; whenever a word with an adjacent repeat
    shows up the repeat is deleted and the search restarts. A class without
    repeats consists of reduced words, and its <_l-minimum is returned.

    Args:
        word: 1-based generator indices.
        cartan: The Cartan datum.
        node_cap: Maximum number of words explored over all restarts.

    Returns:
        The leftmost word of the element.

    Raises:
        ResourceLimitError: If more than ``node_cap`` words were explored.
    """
    cox = build_coxeter_matrix(cartan)
    current: Word = _delete_repeats(tuple(word))
    explored = 0
    while True:
        seen: Set[Word] = {current}
        queue: Deque[Word] = deque([current])
        best = current
        restart = None
        while queue:
            candidate = queue.popleft()
            explored += 1
            if explored > node_cap:
                raise ResourceLimitError("leftmost_bfs node count", node_cap)
            if adjacent_repeat(candidate) is not None:
                restart = _delete_repeats(candidate)
                break
            if order_key(candidate) < order_key(best):
                best = candidate
            for neighbor in braid_neighbors(candidate, cox):
                if neighbor not in seen:
                    seen.add(neighbor)
                    queue.append(neighbor)
        if restart is None:
            logger.debug(f"leftmost_bfs explored {explored} words for {tuple(word)}")
            return best
        current = restart


def _delete_repeats(word: Word) -> Word:
    position = adjacent_repeat(word)
    while position is not None:
        word = word[:position] + word[position + 2 :]
        position = adjacent_repeat(word)
    return word


def leftmost_greedy(word: Sequence[int], cartan: CartanData) -> Word:
    """Return the leftmost word by a single scan of the grid.

    Positions (0,1), …, (0,n), (1,1), … are visited in order; at (r, i) the
    letter s_i is emitted when it is a left descent of the remaining element v,
    which is then replaced by s_i·v.
    """
    return leftmost_of_element(element_of(word, cartan))


def leftmost_of_element(element: WeylElement) -> Word:
    letters = []
    remainder = element
    n = element.cartan.n
    while not remainder.is_identity:
        for i in range(1, n + 1):
            if remainder.has_left_descent(i):
                letters.append(i)
                remainder = remainder.left_multiply(i)
    return tuple(letters)


def is_leftmost(word: Sequence[int], cartan: CartanData) -> bool:
    return tuple(word) == leftmost_greedy(word, cartan)


def exchange_test(u: Sequence[int], i: int, j: int, v: Sequence[int], cartan: CartanData) -> bool:
    """Decide whether replacing {s_i s_j}^{m_ij} by {s_j s_i}^{m_ij} after ``u`` decreases the word.

    With w1 = u·{s_i s_j}^{m_ij}·v and ρ(w1) = ρ(u)(p,i)(q,j)…, the answer is
    true iff q ≥ 1 and every pair of ρ(u) is smaller than (q-1, j).

    Raises:
        WordError: If i = j or m_ij is infinite.
    """
    if i == j:
        raise WordError(f"exchange_test needs two different generators, got {i} twice")
    m = build_coxeter_matrix(cartan).entry(i, j)
    if m == INFINITY:
        raise WordError(f"m_{i}{j} is infinite; there is no braid relation to exchange")
    prefix = tuple(u)
    w1 = prefix + alternating(i, j, int(m)) + tuple(v)
    pairs = rho(w1)
    q = pairs[len(prefix) + 1].r
    if q < 1:
        return False
    bound = Vertex(q - 1, j)
    return all(pair < bound for pair in rho(prefix))


def exchange_by_comparison(u: Sequence[int], i: int, j: int, v: Sequence[int], cartan: CartanData) -> bool:
    """Reference answer for ``exchange_test`` by comparing both words directly."""
    m = int(build_coxeter_matrix(cartan).entry(i, j))
    w1 = tuple(u) + alternating(i, j, m) + tuple(v)
    w2 = tuple(u) + alternating(j, i, m) + tuple(v)
    return word_compare(w2, w1) is Ordering.LESS
