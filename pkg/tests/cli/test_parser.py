import pytest

from weylmod.cli import load_cartan, parse_indices, parse_module, parse_quiver_text, parse_word
from weylmod.coxeter import CartanMode
from weylmod.errors import InputParseError
from weylmod.grid import ModMultiset, Vertex


def test_quiver_file(data_dir):
    cartan = load_cartan(str(data_dir / "exweyl.q"))
    assert cartan.name == "exweyl"
    assert cartan.n == 4
    assert cartan.arrows == ((1, 3), (1, 4), (2, 3), (2, 4))


def test_cartan_file_with_valuation(data_dir):
    cartan = load_cartan(str(data_dir / "b2.cartan"))
    assert cartan.mode is CartanMode.VALUED
    assert cartan.entry(2, 1) == -2
    assert (cartan.valuation(1, 2), cartan.valuation(2, 1)) == (1, 2)


def test_inline_cartan_rows():
    cartan = parse_quiver_text("cartan: 2 -1; -3 2  # G2\n", source="g2.cartan")
    assert cartan.name == "g2"
    assert cartan.c == ((2, -1), (-3, 2))


def test_presets_resolve_by_name():
    assert load_cartan("kronecker").arrows == ((1, 2), (1, 2))


@pytest.mark.parametrize(
    ("text", "line", "token"),
    [
        ("n 3\narrows: 2 1", 2, "2 1"),
        ("n 3\narrows: 1 2 3", 2, "1 2 3"),
        ("n 2\nloops: 1 1", 2, "loops"),
        ("# header\nhello world", 2, "hello"),
        ("n x", 1, "x"),
        ("n 2\narrows: 1 b", 2, "b"),
        ("cartan: 2 -1\nvaluation: 1 2 1", 2, "1 2 1"),
    ],
)
def test_parse_errors_name_line_and_token(text, line, token):
    with pytest.raises(InputParseError) as info:
        parse_quiver_text(text, source="bad.q")
    assert info.value.line == line
    assert info.value.token == token
    assert str(info.value).startswith(f"bad.q:{line}: ")


@pytest.mark.parametrize(
    "text",
    [
        "cartan:\n2 -1\n-1 2 0",
        "n 2\ncartan: 2 0; 0 2",
        "arrows: 1 2",
        "n 2\narrows: 1 2\nvaluation: 1 2 1 1",
        "cartan: 2 1; 1 2",
        "",
    ],
)
def test_invalid_files(text):
    with pytest.raises(InputParseError):
        parse_quiver_text(text)


def test_unknown_input():
    with pytest.raises(InputParseError, match="no such file or preset"):
        load_cartan("no-such-quiver")


def test_command_line_tokens():
    assert parse_word("2 3,1") == (2, 3, 1)
    assert parse_word("") == ()
    assert parse_module("0:4^2, 1:1") == ModMultiset({Vertex(0, 4): 2, Vertex(1, 1): 1})
    assert parse_module("0:4,0:4") == ModMultiset.power(Vertex(0, 4), 2)
    assert parse_indices("1, 3") == [1, 3]


@pytest.mark.parametrize(
    ("parse", "text", "token"),
    [(parse_word, "1 0", "0"), (parse_word, "1 x", "x"), (parse_module, "0:4^x", "0:4^x"), (parse_module, "1-3", "1-3"), (parse_indices, "1,-2", "-2")],
)
def test_bad_tokens(parse, text, token):
    with pytest.raises(InputParseError) as info:
        parse(text)
    assert info.value.token == token
