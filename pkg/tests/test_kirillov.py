import pytest

from orbitkit import library
from orbitkit.exact import I, ZERO, param
from orbitkit.exact.diffop import DiffOperator
from orbitkit.orbits import isotropy_algebra
from orbitkit.kirillov import (
    central_character,
    compare_with_reference,
    induced_drep,
    vergne_polarization,
    verify_drep_brackets,
)

A, B, L = param("a"), param("b"), param("l")


def _rep(g, xi):
    return induced_drep(g, vergne_polarization(g, xi), xi)


def test_heisenberg3_schroedinger_model():
    g = library.heisenberg3()
    rep = _rep(g, [L, ZERO, ZERO])
    assert rep.d == 1
    assert rep["X1"] == DiffOperator.scalar(I * L, 1, ("t1",))
    assert verify_drep_brackets(rep.operators, g).ok


@pytest.mark.parametrize(
    "build, xi",
    [
        (library.heisenberg5, {"X1": L}),
        (library.filiform4, {"X1": A, "X2": B}),
        (library.pedersen5, {"X1": A}),
        (library.pedersen6, {"X1": A, "X6": B}),
    ],
)
def test_bracket_oracle(build, xi):
    g = build()
    vec = [xi.get(n, ZERO) for n in g.names]
    rep = _rep(g, vec)
    report = verify_drep_brackets(rep.operators, g)
    assert report.ok
    assert report.pairs_checked == g.dim * (g.dim - 1) // 2
    assert 2 * rep.d == g.dim - isotropy_algebra(g, vec).dim


def test_polarization_dimension_pedersen6():
    g = library.pedersen6()
    pol = vergne_polarization(g, [A, ZERO, ZERO, ZERO, ZERO, B])
    assert pol.d == 2
    assert pol.dim == 4


def test_pedersen6_central_character():
    g = library.pedersen6()
    rep = _rep(g, [A, ZERO, ZERO, ZERO, ZERO, B])
    (z, value), = central_character(rep)
    assert value == I * A * z[0]


def test_printed_list_passes_bracket_oracle():
    assert verify_drep_brackets(library.pedersen_printed_drep(), library.pedersen6()).ok


def test_printed_list_comparison_isolates_X6_constant():
    g = library.pedersen6()
    rep = _rep(g, [A, ZERO, ZERO, ZERO, ZERO, B])
    cmp = compare_with_reference(rep, library.pedersen_printed_drep(), library.pedersen_scales())
    assert sorted(cmp.residuals) == [6]
    diff = cmp.residuals[6]
    assert diff.is_scalar()
    assert diff.scalar_value() == I * B - I * B / A
    at_one = compare_with_reference(
        rep.subs_params({"a": 1}), library.pedersen_printed_drep(a=1), library.pedersen_scales(1)
    )
    assert at_one.matches
