import pytest

from weylmod.embedding import MultisetTarget, SeqState, e_rec, e_rec_dual, e_values, m_chain, recseq
from weylmod.errors import EngineError, WordError
from weylmod.grid import ModMultiset, Vertex


def module(*tokens):
    return ModMultiset([Vertex.parse(token) for token in tokens])


@pytest.mark.parametrize(
    ("alpha", "beta", "expected"),
    [
        (3, 1, [1, 3, 2, 3, 1, 0, 0]),
        (2, 2, [1, 2, 3, 4, 5]),
        (1, 1, [1, 1, 0]),
        (2, 1, [1, 2, 1, 0]),
        (1, 2, [1, 1, 1, 0]),
        (0, 0, [1, 0, 0]),
    ],
)
def test_e_values(alpha, beta, expected):
    assert e_values(alpha, beta, len(expected) - 1) == expected
    assert e_rec(alpha, beta, len(expected) - 1) == expected[-1]


@pytest.mark.parametrize(("alpha", "beta", "m_ij"), [(0, 0, 2), (1, 1, 3), (1, 2, 4), (2, 1, 4), (1, 3, 6), (3, 1, 6)])
def test_e_vanishes_from_m_ij_minus_one(alpha, beta, m_ij):
    values = e_values(alpha, beta, 10)
    assert all(v > 0 for v in values[: m_ij - 1])
    assert all(v == 0 for v in values[m_ij - 1 :])


def test_e_grows_without_a_braid_relation():
    assert e_values(2, 2, 8) == list(range(1, 10))
    assert e_values(1, 4, 4) == [1, 1, 3, 2, 5]


def test_e_rec_dual():
    assert [e_rec_dual(3, 1, m) for m in range(6)] == [1, 1, 2, 1, 1, 0]


def test_e_rejects_negative_index():
    with pytest.raises(ValueError):
        e_rec(1, 1, -1)


def test_m_chain(exweyl, kronecker):
    assert m_chain(exweyl.quiver, Vertex(1, 3), 1, 5) == [Vertex(1, 3), Vertex(1, 1), Vertex(0, 3), Vertex(0, 1), None]
    assert m_chain(kronecker.quiver, Vertex(3, 1), 2, 4) == [Vertex(3, 1), Vertex(2, 2), Vertex(2, 1), Vertex(1, 2)]


def test_m_chain_errors(exweyl):
    with pytest.raises(WordError):
        m_chain(exweyl.quiver, Vertex(1, 3), 3, 3)
    with pytest.raises(WordError):
        m_chain(exweyl.quiver, Vertex(0, 1), 3, 3)


def test_recseq_examples(exweyl, kronecker):
    first = recseq(exweyl.quiver, Vertex(1, 3), 1, 1)
    assert (first.middle, first.coker) == (module("1:1", "1:2"), module("0:3"))
    second = recseq(exweyl.quiver, Vertex(1, 3), 1, 2)
    assert (second.middle, second.coker) == (module("1:2", "0:4"), module("0:1"))
    assert second.side == module("1:2", "0:4")
    assert second.choices() == [Vertex(1, 1)]
    kron = recseq(kronecker.quiver, Vertex(3, 1), 2, 1)
    assert (kron.middle, kron.coker) == (ModMultiset.power(Vertex(2, 2), 2), module("2:1"))


def test_recseq_errors(exweyl, a2):
    with pytest.raises(EngineError):
        recseq(exweyl.quiver, Vertex(1, 3), 1, 3)
    with pytest.raises(EngineError):
        recseq(exweyl.quiver, Vertex(1, 3), 1, 0)
    with pytest.raises(EngineError):
        recseq(a2.quiver, Vertex(1, 1), 2, 2)


@pytest.mark.parametrize(
    ("fixture", "start", "j", "m"),
    [
        ("exweyl", Vertex(1, 3), 1, 1),
        ("exweyl", Vertex(1, 3), 1, 2),
        ("exweyl", Vertex(2, 3), 1, 2),
        ("exweyl", Vertex(2, 4), 2, 2),
        ("kronecker", Vertex(3, 1), 2, 2),
        ("kronecker", Vertex(3, 1), 2, 3),
        ("kronecker", Vertex(4, 1), 2, 3),
        ("b2", Vertex(1, 2), 1, 2),
    ],
)
def test_recseq_matches_the_engine(fixture, start, j, m, request):
    algebra = request.getfixturevalue(fixture)
    expected = recseq(algebra.quiver, start, j, m)
    state = algebra.engine.init_state(ModMultiset.of(start), MultisetTarget(ModMultiset()))
    assert isinstance(state, SeqState)
    state = algebra.engine.run_choices(state, expected.choices())
    assert state.middle == expected.middle
    assert state.coker == expected.coker


def _valid_cases(quiver, max_r):
    """Every (M_0, j, m) with r(M_0) ≤ max_r whose sequence exists, with its closed form."""
    cases = []
    for start in quiver.existing_vertices(max_r):
        for j in range(1, quiver.n + 1):
            if j == start.i:
                continue
            for m in range(1, 2 * start.r + 3):
                try:
                    cases.append((start, j, m, recseq(quiver, start, j, m)))
                except (EngineError, WordError):
                    continue
    return cases


@pytest.mark.parametrize("fixture", ["exweyl", "kronecker"])
def test_recseq_matches_the_engine_for_every_chain(fixture, request):
    algebra = request.getfixturevalue(fixture)
    cases = _valid_cases(algebra.quiver, 4)
    assert cases
    mismatches = []
    for start, j, m, expected in cases:
        state = algebra.engine.init_state(ModMultiset.of(start), MultisetTarget(ModMultiset()))
        state = algebra.engine.run_choices(state, expected.choices())
        if (state.middle, state.coker) != (expected.middle, expected.coker):
            mismatches.append((start, j, m))
    assert mismatches == []


@pytest.mark.parametrize("fixture", ["exweyl", "kronecker"])
def test_side_summands_lie_between_the_chain_ends(fixture, request):
    algebra = request.getfixturevalue(fixture)
    for start, j, m, result in _valid_cases(algebra.quiver, 4):
        first, last = result.chain[0], result.chain[m + 1]
        assert all(first > vertex > last for vertex in result.side), (start, j, m)


@pytest.mark.parametrize("fixture", ["exweyl", "kronecker"])
def test_side_summands_below_m_follow_the_neighbours_of_the_chain(fixture, request):
    algebra = request.getfixturevalue(fixture)
    coxeter = algebra.quiver.coxeter
    for start, j, m, result in _valid_cases(algebra.quiver, 4):
        upper, lower = result.chain[m], result.chain[m + 1]
        index = start.i if m % 2 else j
        for vertex in algebra.quiver.existing_vertices(start.r):
            if lower < vertex < upper:
                assert (vertex in result.side) == (coxeter.entry(index, vertex.i) >= 3), (start, j, m, vertex)
