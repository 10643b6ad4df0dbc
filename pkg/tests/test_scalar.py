from fractions import Fraction

import pytest
from hypothesis import given, settings

from orbitkit.exact import I, ONE, ZERO, ScalarExpr, as_scalar, param, params
from strategies import scalars


@settings(max_examples=1000)
@given(scalars(), scalars(), scalars())
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO
    assert x * ONE == x


@given(scalars())
def test_inverse(x):
    if x:
        assert x * x.inverse() == ONE
        assert (x / x) == ONE
    else:
        with pytest.raises(ZeroDivisionError):
            x.inverse()


@given(scalars(), scalars())
def test_conjugation(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert x.conjugate().conjugate() == x


def test_imaginary_unit():
    assert I * I == -ONE
    assert str(I) == "i"


def test_unused_parameters_are_dropped():
    a, b = params("a b")
    x = (a * b + a) - a * b
    assert x == a
    assert x.params == ("a",)


def test_rendering():
    a, b = params("a b")
    assert str(1 / (2 * a)) == "1/(2*a)"
    assert str(-I * b / a) == "-i*b/a"
    assert str((b - a * b) / a) == "(b - a*b)/a"
    assert str(as_scalar(Fraction(-3, 4))) == "-3/4"


def test_subs_and_complex():
    a = param("a")
    x = (a**2 + I) / 2
    assert x.subs({"a": 3}) == ScalarExpr(Fraction(9, 2), Fraction(1, 2))
    assert x.to_complex({"a": 1}) == pytest.approx(0.5 + 0.5j)
