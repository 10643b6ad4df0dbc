import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitkit import library
from orbitkit.exact import ZERO, as_scalar, param
from orbitkit.exact.linalg import mat_mul, mat_vec
from orbitkit.generators import random_instances
from orbitkit.orbits import (
    Ad,
    bch_product,
    coadjoint,
    is_flat_orbit,
    jump_indices,
    orbit_cross_section,
    pairing,
    prop31_check,
    prop32_check,
)
from strategies import rationals


def vectors(m):
    return st.lists(rationals.map(as_scalar), min_size=m, max_size=m)


G6 = library.pedersen6()
A, B = param("a"), param("b")
XI6 = [A, ZERO, ZERO, ZERO, ZERO, B]


@settings(max_examples=20)
@given(vectors(6), vectors(6), vectors(6))
def test_bch_associative(x, y, z):
    assert bch_product(bch_product(x, y, G6), z, G6) == bch_product(x, bch_product(y, z, G6), G6)


@given(vectors(6), vectors(6))
def test_bch_inverse_and_abelian_case(x, y):
    assert all(v == ZERO for v in bch_product(x, [-v for v in x], G6))
    h = library.heisenberg3()
    # in h3 the group law is x + y + 1/2 [x, y]
    lhs = bch_product(x[:3], y[:3], h)
    br = h.bracket(x[:3], y[:3])
    assert lhs == [a + b + c / 2 for a, b, c in zip(x[:3], y[:3], br)]


@given(vectors(6), vectors(6), vectors(6))
def test_Ad_is_automorphism(x, u, v):
    M = Ad(G6, x)
    assert mat_vec(M, G6.bracket(u, v)) == G6.bracket(mat_vec(M, u), mat_vec(M, v))


@settings(max_examples=15)
@given(vectors(6), vectors(6))
def test_Ad_is_homomorphism(x, y):
    assert Ad(G6, bch_product(x, y, G6)) == mat_mul(Ad(G6, x), Ad(G6, y))


@given(vectors(6), vectors(6))
def test_coadjoint_duality(x, u):
    lhs = pairing(coadjoint(G6, x, XI6), mat_vec(Ad(G6, x), u))
    assert lhs == pairing(XI6, u)


def test_pedersen6_jumps_and_cross_section():
    orbit = orbit_cross_section(G6, XI6)
    assert orbit.jumps == [2, 3, 4, 5]
    assert sorted(orbit.cross_section) == [1, 6]
    assert str(orbit.cross_section[1]) == "a"
    assert "a != 0" in orbit.assumptions.render()


@settings(max_examples=25)
@given(vectors(6))
def test_orbit_points_satisfy_relations(x):
    # independent oracle: push xi along the group and test the relations
    orbit = orbit_cross_section(G6, XI6)
    pt = coadjoint(G6, x, XI6)
    vals = [pt[j - 1] for j in orbit.jumps]
    for l, rel in orbit.cross_section.items():
        assert rel.evaluate(vals) == pt[l - 1]


@pytest.mark.parametrize(
    "build, xi, flat",
    [
        (library.heisenberg3, {"X1": "l"}, True),
        (library.heisenberg5, {"X1": "l"}, True),
        (library.pedersen5, {"X1": "a"}, True),
        (library.pedersen6, {"X1": "a", "X6": "b"}, False),
        (library.filiform4, {"X1": "a", "X2": "b"}, False),
    ],
)
def test_flatness(build, xi, flat):
    g = build()
    vec = [param(xi[n]) if n in xi else ZERO for n in g.names]
    assert is_flat_orbit(orbit_cross_section(g, vec)) is flat


def test_point_orbit_for_zero_functional():
    g = library.heisenberg3()
    orbit = orbit_cross_section(g, [ZERO] * 3)
    assert orbit.jumps == []
    assert jump_indices(g, [ZERO] * 3) == []


def test_prop32_on_pedersen_ideal():
    rep = prop32_check(G6, [G6.basis(k) for k in range(5)], XI6)
    assert rep.agree and rep.verdict
    assert rep.restricted_orbit is not None
    bad = prop32_check(G6, [G6.basis(k) for k in range(3)], XI6)
    assert bad.agree and not bad.verdict


def test_random_proposition_suite():
    disagreements = []
    for inst in random_instances(60, seed=11):
        rep = prop32_check(inst.algebra, inst.ideal, inst.xi, restrict=False)
        if not rep.agree:
            disagreements.append(inst.kind)
        if len(inst.ideal) == inst.algebra.dim - 1:
            p31 = prop31_check(inst.algebra, inst.ideal, inst.xi)
            assert p31.verdict == rep.sum_condition
    assert disagreements == []


def test_random_codim_one_ideals():
    rng = random.Random(3)
    for inst in random_instances(30, seed=5):
        g = inst.algebra
        if g.dim < 2:
            continue
        ideal = [g.basis(k) for k in range(g.dim - 1)]
        if not g.is_ideal(ideal):
            continue
        xi = [as_scalar(rng.randint(-3, 3)) for _ in range(g.dim)]
        p31 = prop31_check(g, ideal, xi)
        p32 = prop32_check(g, ideal, xi, restrict=False)
        assert p32.agree
        assert p31.verdict == p32.verdict
