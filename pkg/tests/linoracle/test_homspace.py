import pytest
from sympy import Matrix

from weylmod.errors import UnsupportedModeError
from weylmod.grid import ModMultiset, Vertex
from weylmod.linoracle import IntervalRep, hom_basis, interval_of_vertex, intervals_of, is_type_a, rank_mod


def _module(*tokens):
    return ModMultiset([Vertex.parse(token) for token in tokens])


@pytest.mark.parametrize(
    ("fixture", "token", "support"),
    [("a2", "0:1", (1,)), ("a2", "0:2", (1, 2)), ("a2", "1:1", (2,)), ("a3", "2:1", (3,)), ("a3_source", "1:1", (1, 2, 3))],
)
def test_interval_of_vertex(fixture, token, support, request):
    quiver = request.getfixturevalue(fixture).quiver
    interval = interval_of_vertex(quiver, Vertex.parse(token))
    assert interval.support == support
    assert interval.length == len(support)


def test_interval_rep():
    interval = IntervalRep(3, (2, 3))
    assert interval.dims() == (0, 1, 1)
    assert interval.arrow_map((2, 3)) == 1
    assert interval.arrow_map((1, 2)) == 0
    assert str(interval) == "[2,3]"


@pytest.mark.parametrize(
    ("fixture", "expected"),
    [("a2", True), ("a3", True), ("a3_source", True), ("exweyl", False), ("kronecker", False), ("b2", False)],
)
def test_is_type_a(fixture, expected, request):
    assert is_type_a(request.getfixturevalue(fixture).cartan) is expected


def test_intervals_need_type_a(exweyl):
    with pytest.raises(UnsupportedModeError):
        interval_of_vertex(exweyl.quiver, Vertex(0, 1))


def test_hom_dimensions_between_intervals():
    arrows = [(1, 2)]
    simple_1, injective_2, simple_2 = IntervalRep(2, (1,)), IntervalRep(2, (1, 2)), IntervalRep(2, (2,))
    assert hom_basis(2, arrows, [simple_1], [injective_2]).dim == 0
    assert hom_basis(2, arrows, [injective_2], [simple_1]).dim == 1
    assert hom_basis(2, arrows, [simple_2], [injective_2]).dim == 1
    assert hom_basis(2, arrows, [simple_2, simple_2], [injective_2, simple_2]).dim == 4


@pytest.mark.parametrize("fixture", ["a3", "a3_source"])
def test_no_maps_from_smaller_to_larger_injectives(fixture, request):
    algebra = request.getfixturevalue(fixture)
    cartan = algebra.cartan
    for i in range(1, cartan.n + 1):
        for j in range(i + 1, cartan.n + 1):
            source = [interval_of_vertex(algebra.quiver, Vertex(0, i))]
            target = [interval_of_vertex(algebra.quiver, Vertex(0, j))]
            assert hom_basis(cartan.n, cartan.arrows, source, target).dim == 0


def test_basis_elements_are_morphisms(a3):
    quiver = a3.quiver
    source = intervals_of(quiver, _module("1:1", "1:2"))
    target = intervals_of(quiver, _module("0:2", "0:3", "1:2"))
    space = hom_basis(3, a3.cartan.arrows, source, target)
    assert space.dim > 0
    for element in space.basis:
        assert all(residual.is_zero_matrix for residual in space.residuals(element))
    combined = space.combine([1] * space.dim)
    assert all(residual.is_zero_matrix for residual in space.residuals(combined))


def test_rank_mod():
    assert rank_mod(Matrix([[1, 1], [1, 1]]), 2) == 1
    assert rank_mod(Matrix([[2, 0], [0, 1]]), 2) == 1
    assert rank_mod(Matrix([[2, 0], [0, 1]]), 3) == 2
    assert rank_mod(Matrix(0, 2, []), 2) == 0
