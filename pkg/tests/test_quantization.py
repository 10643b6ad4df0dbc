import itertools

import pytest
from hypothesis import given

from orbitkit import library
from orbitkit.errors import ArityMismatch, RestrictionNotBijective
from orbitkit.exact import I, ONE, ZERO, param
from orbitkit.exact.diffop import DiffOperator, commutator
from orbitkit.exact.poly import MultiPoly
from orbitkit.kirillov import induced_drep, vergne_polarization, verify_drep_brackets
from orbitkit.lie import LieAlgebra
from orbitkit.orbits import orbit_cross_section
from orbitkit.quantization import (
    coadjoint_vector_fields,
    find_invariant_ops,
    is_invariant_op,
    pullback_symbol,
    quantize_poly,
    restricted_rep,
    restriction_data,
    verify_pullback,
)
from strategies import rationals

A, B, L = param("a"), param("b"), param("l")


def _setup(g, xi):
    orbit = orbit_cross_section(g, xi)
    rep = induced_drep(g, vergne_polarization(g, xi), xi)
    return orbit, rep


H3 = _setup(library.heisenberg3(), [L, ZERO, ZERO])
P6_XI = [A, ZERO, ZERO, ZERO, ZERO, B]
P6 = _setup(library.pedersen6(), P6_XI)


def test_op_of_one_is_identity():
    for orbit, rep in (H3, P6):
        one = MultiPoly.constant(ONE, orbit.dim, orbit.y_names)
        assert quantize_poly(one, rep, orbit) == DiffOperator.identity(rep.d, rep.operators[0].names)


def test_coordinates_quantize_to_minus_i_dpi():
    for orbit, rep in (H3, P6):
        for i, j in enumerate(orbit.jumps):
            y = MultiPoly.var(i, orbit.dim, orbit.y_names)
            assert quantize_poly(y, rep, orbit) == rep.operators[j - 1] * (-I)


def test_heisenberg_examples():
    orbit, rep = H3
    y2, y3 = MultiPoly.gens(orbit.y_names)
    assert str(quantize_poly(y2, rep, orbit)) == "l*t1"
    t = DiffOperator.coordinate(0, 1, ("t1",))
    d = DiffOperator.partial(0, 1, ("t1",))
    expected = (t * d + ONE / 2) * (-I * L)
    assert quantize_poly(y2 * y3, rep, orbit) == expected


@given(rationals, rationals, rationals)
def test_real_symbols_give_formally_selfadjoint_ops(c0, c1, c2):
    orbit, rep = H3
    y2, y3 = MultiPoly.gens(orbit.y_names)
    a = y2 * y3 * c0 + y3 * y3 * c1 + y2 * c2
    op = quantize_poly(a, rep, orbit)
    assert op.adjoint() == op


def test_arity_mismatch():
    orbit, rep = H3
    with pytest.raises(ArityMismatch):
        quantize_poly(MultiPoly.var(0, 3), rep, orbit)


def test_h3_fields_are_translations():
    orbit, _ = H3
    L1, L2, L3 = coadjoint_vector_fields(orbit)
    assert L1.is_zero()
    for F in (L2, L3):
        assert F.order() == 1 and F.coefficient_degree() == 0
    assert not L2.is_zero() and not L3.is_zero()


def test_abelian_fields_vanish():
    g = LieAlgebra.abelian(3)
    orbit = orbit_cross_section(g, [ONE, ONE, ONE])
    assert all(F.is_zero() for F in coadjoint_vector_fields(orbit))
    ops = find_invariant_ops(orbit, 2, 2)
    assert len(ops) == 1 and ops[0].is_scalar()


def test_fields_are_anti_homomorphic():
    orbit, _ = P6
    g = orbit.algebra
    fields = coadjoint_vector_fields(orbit)

    def field_of(v):
        total = DiffOperator(orbit.dim, {}, orbit.y_names)
        for c, F in zip(v, fields):
            if c:
                total = total + F * c
        return total

    for j, k in itertools.combinations(range(g.dim), 2):
        br = g.bracket(g.basis(j), g.basis(k))
        assert commutator(fields[j], fields[k]) == field_of([-c for c in br])


def test_invariance_examples():
    orbit, _ = H3
    y = orbit.y_names
    d2 = DiffOperator.partial(0, 2, y)
    assert is_invariant_op(d2, orbit)
    assert not is_invariant_op(DiffOperator.coordinate(0, 2, y) * d2, orbit)
    assert is_invariant_op(DiffOperator.scalar(3 * I, 2, y), orbit)


@pytest.mark.parametrize("order, degree, dim", [(1, 0, 3), (2, 0, 6), (2, 2, 6)])
def test_invariant_dimensions_h3(order, degree, dim):
    orbit, _ = H3
    ops = find_invariant_ops(orbit, order, degree)
    assert len(ops) == dim
    fields = coadjoint_vector_fields(orbit)
    assert all(is_invariant_op(D, orbit, fields) for D in ops)


def test_pedersen6_invariant_ops_are_invariant():
    orbit, _ = P6
    fields = coadjoint_vector_fields(orbit)
    ops = find_invariant_ops(orbit, 1, 1)
    assert ops
    assert all(is_invariant_op(D, orbit, fields) for D in ops)


def test_restricted_rep_is_a_rep_of_the_ideal():
    orbit, rep = P6
    data = restriction_data(orbit.algebra, 5, P6_XI, big=orbit)
    small = restricted_rep(rep, data)
    assert verify_drep_brackets(small.operators, data.small.algebra).ok


def test_pullback_of_constants_and_coordinates():
    orbit, rep = P6
    data = restriction_data(orbit.algebra, 5, P6_XI, big=orbit)
    one = MultiPoly.constant(ONE, orbit.dim, orbit.y_names)
    assert pullback_symbol(one, data, inverse=True).is_constant()
    for i in range(orbit.dim):
        y = MultiPoly.var(i, orbit.dim, orbit.y_names)
        assert pullback_symbol(y, data, inverse=True) == MultiPoly.var(i, orbit.dim, data.small.y_names)
        assert verify_pullback(y, rep, data).ok


def test_pullback_needs_bijective_restriction():
    with pytest.raises(RestrictionNotBijective):
        restriction_data(library.pedersen6(), 3, P6_XI)
