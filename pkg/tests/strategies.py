"""Hypothesis strategies shared by the suites."""

from fractions import Fraction

from hypothesis import strategies as st

from orbitkit.exact import ScalarExpr, param
from orbitkit.exact.poly import MultiPoly
from orbitkit.exact.diffop import DiffOperator

PARAMS = [param("a"), param("b")]

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def scalars(draw, with_params=True):
    re, im = draw(rationals), draw(rationals)
    x = ScalarExpr(re, im)
    if with_params and draw(st.booleans()):
        p = draw(st.sampled_from(PARAMS))
        k = draw(st.integers(1, 2))
        x = x * p**k + draw(rationals)
    if with_params and draw(st.booleans()):
        x = x / (draw(st.sampled_from(PARAMS)) + draw(st.integers(1, 3)))
    return x


@st.composite
def polys(draw, nvars=2, max_terms=3, max_deg=2):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(0, max_deg)) for _ in range(nvars))
        terms[e] = draw(scalars(with_params=False))
    return MultiPoly(nvars, terms)


@st.composite
def diffops(draw, nvars=2, max_terms=3, max_deg=2):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        a = tuple(draw(st.integers(0, max_deg)) for _ in range(nvars))
        b = tuple(draw(st.integers(0, max_deg)) for _ in range(nvars))
        terms[(a, b)] = draw(scalars(with_params=False))
    return DiffOperator(nvars, terms)
