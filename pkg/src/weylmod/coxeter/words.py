"""Words over the simple reflections, the ρ-map and the order <_l.

A word is a tuple of 1-based generator indices. ρ places the letters of a
word on the grid ℕ₀×{1..n}: the row stays the same while the indices
increase and moves to the next row otherwise. Words are compared first by
length and then lexicographically on their ρ-sequences.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, List, Sequence, Set, Tuple

from ..errors import WordError
from ..grid import Vertex
from .cartan import INFINITY, CoxeterMatrix

Word = Tuple[int, ...]
PairSeq = Tuple[Vertex, ...]


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def make_word(letters: Iterable[int], n: int | None = None) -> Word:
    """Return ``letters`` as a word, checking the range when ``n`` is given.

    Raises:
        WordError: If a letter lies outside 1..n.
    """
    word = tuple(int(x) for x in letters)
    if n is not None:
        bad = [x for x in word if not 1 <= x <= n]
        if bad:
            raise WordError(f"Letters {bad} are outside the generator range 1..{n}")
    return word


def rho(word: Sequence[int]) -> PairSeq:
    """Return the ρ-sequence of ``word``.

    r_1 = 0 and r_{k+1} = r_k if i_{k+1} > i_k, else r_k + 1.
    """
    pairs: List[Vertex] = []
    row = 0
    previous = None
    for letter in word:
        if previous is not None and letter <= previous:
            row += 1
        pairs.append(Vertex(row, letter))
        previous = letter
    return tuple(pairs)


def word_of_pairs(pairs: Sequence[Vertex]) -> Word:
    return tuple(p.i for p in pairs)


def order_key(word: Sequence[int]) -> Tuple[int, PairSeq]:
    """Sort key realizing <_l."""
    return len(word), rho(word)


def word_compare(word: Sequence[int], other: Sequence[int]) -> Ordering:
    """Compare two words in <_l.

    Returns:
        ``LESS`` when ``word`` is shorter or, at equal length, has the
        lexicographically smaller ρ-sequence; ``EQUAL`` only for identical words.
    """
    left, right = order_key(word), order_key(other)
    if left < right:
        return Ordering.LESS
    if left > right:
        return Ordering.GREATER
    return Ordering.EQUAL


def alternating(i: int, j: int, length: int) -> Word:
    """Return the word s_i s_j s_i ... of the given length."""
    return tuple(i if k % 2 == 0 else j for k in range(length))


def braid_neighbors(word: Sequence[int], cox: CoxeterMatrix) -> Set[Word]:
    """Return all words obtained from ``word`` by one braid substitution.

    A substitution replaces a factor {s_i s_j}^{m_ij} by {s_j s_i}^{m_ij}
    for finite m_ij; nil moves are not applied.
    """
    letters = tuple(word)
    neighbors: Set[Word] = set()
    for start in range(len(letters) - 1):
        i, j = letters[start], letters[start + 1]
        if i == j:
            continue
        m = cox.entry(i, j)
        if m == INFINITY:
            continue
        span = int(m)
        end = start + span
        if end > len(letters) or letters[start:end] != alternating(i, j, span):
            continue
        neighbors.add(letters[:start] + alternating(j, i, span) + letters[end:])
    return neighbors


def adjacent_repeat(word: Sequence[int]) -> int | None:
    """Return the first position p with word[p] == word[p+1], if any."""
    for position in range(len(word) - 1):
        if word[position] == word[position + 1]:
            return position
    return None


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(x) for x in word)


def format_pairs(pairs: Sequence[Vertex]) -> str:
    return " ".join(str(p) for p in pairs)
