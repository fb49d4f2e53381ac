import math

import pytest

from weylmod.algebra import resolve_cartan
from weylmod.coxeter import CartanData, CartanMode, build_coxeter_matrix, is_finite_type
from weylmod.coxeter.cartan import coxeter_value, format_coxeter_entry
from weylmod.errors import CartanError


def test_exweyl_coxeter_matrix():
    cox = build_coxeter_matrix(resolve_cartan("exweyl"))
    assert cox.rows() == [
        ["1", "2", "3", "3"],
        ["2", "1", "3", "3"],
        ["3", "3", "1", "2"],
        ["3", "3", "2", "1"],
    ]


def test_no_edge_gives_commuting_generators():
    cox = build_coxeter_matrix(CartanData.from_matrix([[2, 0], [0, 2]]))
    assert cox.entry(1, 2) == 2


def test_kronecker_has_infinite_order():
    cox = build_coxeter_matrix(resolve_cartan("kronecker"))
    assert cox.entry(1, 2) == math.inf
    assert cox.rows()[0] == ["1", "inf"]
    with pytest.raises(CartanError):
        cox.order(1, 2)


@pytest.mark.parametrize(("product", "expected"), [(0, 2), (1, 3), (2, 4), (3, 6), (4, math.inf), (9, math.inf)])
def test_coxeter_value_table(product, expected):
    assert coxeter_value(product) == expected


def test_format_coxeter_entry():
    assert format_coxeter_entry(math.inf) == "inf"
    assert format_coxeter_entry(6) == "6"


def test_valued_entries_from_products():
    assert build_coxeter_matrix(resolve_cartan("b2")).entry(1, 2) == 4
    assert build_coxeter_matrix(resolve_cartan("g2")).entry(2, 1) == 6


@pytest.mark.parametrize(
    ("name", "finite"),
    [("a2", True), ("a3", True), ("a3-source", True), ("b2", True), ("g2", True), ("exweyl", False), ("kronecker", False)],
)
def test_is_finite_type(name, finite):
    assert is_finite_type(build_coxeter_matrix(resolve_cartan(name))) is finite


@pytest.mark.parametrize(
    ("rows", "finite"),
    [
        ([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], False),
        ([[2, -1, 0], [-1, 2, -1], [0, -3, 2]], False),
        ([[2, -1, 0], [-2, 2, -1], [0, -2, 2]], False),
        ([[2, -1, 0], [-1, 2, -1], [0, -2, 2]], True),
        ([[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]], True),
    ],
)
def test_affine_forms_sit_exactly_on_the_boundary(rows, finite):
    assert is_finite_type(build_coxeter_matrix(CartanData.from_matrix(rows))) is finite


def test_quiver_cartan_entries():
    cartan = resolve_cartan("kronecker")
    assert cartan.mode is CartanMode.QUIVER
    assert cartan.entry(1, 2) == -2
    assert cartan.valuation(1, 2) == 2
    assert cartan.neighbors(1) == (2,)


def test_non_admissible_arrow_is_named():
    with pytest.raises(CartanError, match="3->1"):
        CartanData.from_quiver(3, [(1, 2), (3, 1)])


@pytest.mark.parametrize(
    "rows",
    [
        [[2, 1], [-1, 2]],
        [[2, 0], [-1, 2]],
        [[1, -1], [-1, 2]],
        [[2, -1, 0], [-1, 2]],
    ],
)
def test_invalid_cartan_tables_are_rejected(rows):
    with pytest.raises(CartanError):
        CartanData.from_matrix(rows)


def test_valuation_must_match_the_cartan_product():
    with pytest.raises(CartanError):
        CartanData.from_matrix([[2, -1], [-2, 2]], valuation={(1, 2): (1, 1)})


def test_restricted_datum_renumbers_vertices():
    restricted = resolve_cartan("exweyl").restricted([1, 3])
    assert restricted.n == 2
    assert restricted.arrows == ((1, 2),)
    empty = resolve_cartan("exweyl").restricted([])
    assert empty.n == 0
    assert is_finite_type(build_coxeter_matrix(empty))
