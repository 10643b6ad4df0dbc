import pytest

from orbitkit import library
from orbitkit.dsl import parse_functional, parse_spec, parse_symbol, render_functional, render_spec
from orbitkit.errors import DuplicateBracket, ParseError, UndeclaredSymbol
from orbitkit.exact import param


@pytest.mark.parametrize("build", [library.pedersen6, library.heisenberg5, library.filiform4, lambda: library.lauret6()])
def test_algebra_roundtrip(build):
    g = build()
    spec = parse_spec(g.to_dsl())
    assert spec.algebra == g
    assert parse_spec(render_spec(spec)).algebra == g


def test_functional_and_symbol():
    text = """
    # pedersen algebra with a functional
    dim 6
    [X6,X5] = X4
    [X6,X4] = X3
    [X6,X3] = X2
    [X5,X4] = X2
    [X5,X2] = -X1
    [X4,X3] = X1
    xi: X1 -> a, X6 -> b
    symbol: y2*y4 - 1/2*y3^2
    """
    spec = parse_spec(text, symbol_names=["y2", "y3", "y4", "y5"])
    assert spec.algebra == library.pedersen6()
    assert spec.xi[0] == param("a") and spec.xi[5] == param("b")
    assert str(spec.symbol) == "y2*y4 - 1/2*y3^2"
    assert render_functional(spec.xi, spec.algebra.names) == "xi: X1 -> a, X6 -> b"


def test_parse_functional_formats():
    basis = ["X1", "X2", "X3"]
    xi = parse_functional("X1->2*l, X3 -> -1/3", basis)
    assert str(xi[0]) == "2*l" and str(xi[2]) == "-1/3" and not xi[1]


def test_symbol_parser_precedence():
    p = parse_symbol("-y1^2 + 2*(y1 - y2)*y2", ["y1", "y2"])
    assert str(p) == "-y1^2 + 2*y1*y2 - 2*y2^2"


def test_duplicate_bracket_either_order():
    with pytest.raises(DuplicateBracket) as exc:
        parse_spec("dim 3\n[X3,X2] = X1\n[X2,X3] = -X1\n")
    assert exc.value.line == 3


def test_undeclared_symbol_position():
    with pytest.raises(UndeclaredSymbol) as exc:
        parse_spec("basis A B C\n[C,B] = A + Q\n")
    assert (exc.value.line, exc.value.column) == (2, 13)


def test_antisymmetry_in_text():
    with pytest.raises(ParseError, match="antisymmetry"):
        parse_spec("dim 2\n[X1,X1] = X2\n")


def test_non_nilpotent_text():
    with pytest.raises(ParseError):
        parse_spec("dim 2\n[X2,X1] = X1\n")


def test_dim_mismatch_reports_basis_line():
    with pytest.raises(ParseError) as exc:
        parse_spec("dim 3\n\nbasis A B\n")
    assert exc.value.line == 3


def test_param_clash_position():
    with pytest.raises(ParseError) as exc:
        parse_spec("basis a b\nparam a\n")
    assert exc.value.line == 2
