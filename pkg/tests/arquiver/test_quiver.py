import pytest

from weylmod.arquiver import ARQuiver, ModMultiset, Vertex
from weylmod.config import Settings
from weylmod.coxeter import CartanData
from weylmod.errors import (
    CartanError,
    InjectiveVertexError,
    ResourceLimitError,
    UnsupportedModeError,
    ZeroModuleError,
)


def _vertices(*tokens):
    return [Vertex.parse(token) for token in tokens]


@pytest.mark.parametrize(
    ("fixture", "expected"),
    [
        ("a2", ["0:1", "0:2", "1:1"]),
        ("a3", ["0:1", "0:2", "0:3", "1:1", "1:2", "2:1"]),
        ("b2", ["0:1", "0:2", "1:1", "1:2"]),
        ("g2", ["0:1", "0:2", "1:1", "1:2", "2:1", "2:2"]),
    ],
)
def test_finite_type_components(fixture, expected, request):
    quiver = request.getfixturevalue(fixture).quiver
    assert quiver.all_existing_vertices() == _vertices(*expected)


def test_zero_modules_of_a3(a3):
    assert not a3.quiver.vertex_exists(Vertex(1, 3))
    assert not a3.quiver.vertex_exists(Vertex(2, 2))
    assert not a3.quiver.vertex_exists(Vertex(7, 1))
    with pytest.raises(ZeroModuleError):
        a3.quiver.require(Vertex(1, 3))


def test_vertex_exists_outside_the_grid(exweyl):
    assert not exweyl.quiver.vertex_exists(Vertex(0, 5))
    assert not exweyl.quiver.vertex_exists(Vertex(-1, 1))


def test_injective_dimension_vectors(exweyl):
    quiver = exweyl.quiver
    assert quiver.dim_vector(Vertex(0, 1)) == (1, 0, 0, 0)
    assert quiver.dim_vector(Vertex(0, 3)) == (1, 1, 1, 0)
    assert quiver.dim_vector(Vertex(0, 4)) == (1, 1, 0, 1)


def test_knitted_dimension_vectors(exweyl, a3):
    quiver = exweyl.quiver
    assert quiver.dim_vector(Vertex(1, 1)) == (1, 2, 1, 1)
    assert quiver.dim_vector(Vertex(1, 2)) == (2, 1, 1, 1)
    assert quiver.dim_vector(Vertex(1, 3)) == (2, 2, 1, 2)
    assert quiver.dim_vector(Vertex(1, 4)) == (2, 2, 2, 1)
    assert quiver.dim_vector(Vertex(2, 1)) == (3, 2, 2, 2)
    assert a3.quiver.dim_vector(Vertex(2, 1)) == (0, 0, 1)


def test_dimension_vectors_need_a_quiver(b2):
    with pytest.raises(UnsupportedModeError):
        b2.quiver.dim_vector(Vertex(0, 1))


def test_ar_sequences_of_the_example(exweyl):
    quiver = exweyl.quiver
    assert quiver.ar_middle(Vertex(1, 3)) == ModMultiset(_vertices("1:1", "1:2"))
    middle, end = quiver.ar_sequence_start(Vertex(1, 1))
    assert middle == ModMultiset(_vertices("0:3", "0:4"))
    assert end == Vertex(0, 1)


def test_ar_sequence_mixes_both_slices(a3):
    assert a3.quiver.ar_middle(Vertex(1, 2)) == ModMultiset(_vertices("1:1", "0:3"))


def test_valued_middle_terms_carry_multiplicities(b2, kronecker):
    assert b2.quiver.ar_middle(Vertex(1, 2)) == ModMultiset.power(Vertex(1, 1), 2)
    assert b2.quiver.ar_middle(Vertex(1, 1)) == ModMultiset.of(Vertex(0, 2))
    assert kronecker.quiver.ar_middle(Vertex(3, 1)) == ModMultiset.power(Vertex(2, 2), 2)


def test_ar_sequence_errors(exweyl, a3):
    with pytest.raises(InjectiveVertexError):
        exweyl.quiver.ar_middle(Vertex(0, 2))
    with pytest.raises(InjectiveVertexError):
        exweyl.quiver.tau_inverse(Vertex(0, 2))
    with pytest.raises(ZeroModuleError):
        a3.quiver.ar_middle(Vertex(1, 3))
    assert exweyl.quiver.tau_inverse(Vertex(2, 4)) == Vertex(1, 4)


def test_alpha_beta(b2, exweyl):
    assert b2.quiver.alpha_beta(1, 2) == (1, 2)
    assert exweyl.quiver.alpha_beta(1, 2) == (0, 0)
    with pytest.raises(CartanError):
        exweyl.quiver.alpha_beta(3, 3)


def test_knitting_is_additive(exweyl):
    quiver = exweyl.quiver
    for vertex in quiver.existing_vertices(6):
        if vertex.r == 0:
            continue
        middle, end = quiver.ar_sequence_start(vertex)
        assert (quiver.dim_of(middle) == quiver.dim_of(ModMultiset.of(vertex, end))).all()


@pytest.mark.parametrize("fixture", ["exweyl", "kronecker", "a3", "a3_source", "a2"])
def test_knitting_agrees_with_the_sorting_word(fixture, request):
    quiver = request.getfixturevalue(fixture).quiver
    for r in range(21):
        for i in range(1, quiver.n + 1):
            vertex = Vertex(r, i)
            assert quiver.vertex_exists(vertex) == quiver.exists_by_sorting_word(vertex), vertex


def test_infinite_type_has_no_complete_listing(kronecker):
    with pytest.raises(UnsupportedModeError):
        kronecker.quiver.all_existing_vertices()
    assert len(kronecker.quiver.existing_vertices(4)) == 10


def test_slice_cap(exweyl):
    quiver = ARQuiver(exweyl.cartan, Settings(_env_file=None, max_slices=3))
    assert quiver.vertex_exists(Vertex(2, 1))
    with pytest.raises(ResourceLimitError):
        quiver.vertex_exists(Vertex(3, 1))


def test_cache_stats(a2):
    a2.quiver.all_existing_vertices()
    assert a2.quiver.cache_stats() == {"slices": 2, "vertices": 3}


@pytest.mark.parametrize(
    "rows",
    [
        [[2, -1], [-2, 2]],
        [[2, -1], [-3, 2]],
        [[2, -1], [-4, 2]],
        [[2, -1, 0], [-2, 2, -1], [0, -1, 2]],
    ],
)
def test_swapping_the_valuation_transposes_the_middle_terms(rows, settings):
    original = ARQuiver(CartanData.from_matrix(rows), settings)
    n = original.n
    swapped_values = {
        (i, j): (original.cartan.valuation(j, i), original.cartan.valuation(i, j))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if original.cartan.entry(i, j)
    }
    swapped = ARQuiver(CartanData.from_matrix(rows, swapped_values), settings)
    for vertex in (Vertex(r, i) for r in range(5) for i in range(1, n + 1)):
        assert swapped.vertex_exists(vertex) is original.vertex_exists(vertex), vertex
        if vertex.r == 0 or not original.vertex_exists(vertex):
            continue
        middle = original.ar_middle(vertex)
        assert swapped.ar_middle(vertex).support() == middle.support(), vertex
        for target in middle.support():
            assert swapped.ar_middle(vertex).multiplicity(target) == original.cartan.valuation(target.i, vertex.i)
