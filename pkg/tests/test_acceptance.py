"""Acceptance criteria, one test per criterion.

Each test records a ``criterion N: PASS|FAIL`` line; the lines are printed
as they happen and again in the terminal summary.
"""

import io
import itertools
import random
import time
from contextlib import redirect_stdout
from fractions import Fraction

from orbitkit import library
from orbitkit.cli import main as cli_main
from orbitkit.exact import I, ONE, ZERO, param
from orbitkit.exact.linalg import is_zero_matrix, mat_mul
from orbitkit.exact.poly import MultiPoly
from orbitkit.generators import random_instances
from orbitkit.kirillov import central_character, compare_with_reference, induced_drep, vergne_polarization, verify_drep_brackets
from orbitkit.lie import SymplecticForm, is_derivation, symplectic_residual
from orbitkit.numeric import boundedness_norms, gaussian_comparison
from orbitkit.orbits import is_flat_orbit, orbit_cross_section, prop31_check, prop32_check
from orbitkit.quantization import coadjoint_vector_fields, find_invariant_ops, is_invariant_op, restriction_data, verify_pullback
from orbitkit.theorems import check_theorem_main3

RESULTS = {}

A, B, L = param("a"), param("b"), param("l")
P6_XI = [A, ZERO, ZERO, ZERO, ZERO, B]


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS[n] = line
    print(line)
    assert ok, line


def test_criterion_1_orbit_equation():
    start = time.perf_counter()
    with redirect_stdout(io.StringIO()):
        code = cli_main(["orbit", "pedersen6"])
    orbit = orbit_cross_section(library.pedersen6(), P6_XI)
    elapsed = time.perf_counter() - start
    y2, y3, y4, _ = MultiPoly.gens(orbit.y_names)
    printed = library.pedersen_printed_orbit_y6(y2, y3, y4)
    y1_ok = orbit.cross_section.get(1) == MultiPoly.constant(A, 4, orbit.y_names)
    y6_ok = orbit.cross_section.get(6) == printed
    ok = code == 0 and y1_ok and y6_ok and elapsed < 5
    detail = f"y1 = a: {y1_ok}; y6 matches printed: {y6_ok}; computed {orbit.relation_text(6)}; {elapsed:.2f} s"
    record(1, ok, detail)


def test_criterion_2_drep_operators():
    start = time.perf_counter()
    g = library.pedersen6()
    rep = induced_drep(g, vergne_polarization(g, P6_XI), P6_XI)
    brackets = verify_drep_brackets(rep.operators, g)
    (z, value), = central_character(rep)
    central_ok = value == I * A * z[0]
    printed = library.pedersen_printed_drep()
    cmp = compare_with_reference(rep, printed, library.pedersen_scales())
    printed_oracle = verify_drep_brackets(printed, g)
    elapsed = time.perf_counter() - start
    ok = (
        brackets.ok
        and brackets.pairs_checked == 15
        and central_ok
        and cmp.matches
        and printed_oracle.ok
        and elapsed < 5
    )
    diffs = ", ".join(f"X{j}: {d}" for j, d in sorted(cmp.residuals.items())) or "none"
    detail = (
        f"bracket oracle {brackets.pairs_checked} pairs {'ok' if brackets.ok else 'failed'}; "
        f"central character ia: {central_ok}; matches printed: {cmp.matches} (differences {diffs}); "
        f"printed list oracle: {printed_oracle.ok}; {elapsed:.2f} s"
    )
    record(2, ok, detail)


def _sample_st(rng):
    while True:
        s = Fraction(rng.randint(-7, 7), rng.randint(1, 4))
        t = Fraction(rng.randint(-7, 7), rng.randint(1, 4))
        if s and t and s + t:
            return s, t


def _sample_symmetric(rng):
    A_ = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i, 3):
            A_[i][j] = A_[j][i] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return A_


def test_criterion_3_lauret_identities():
    rng = random.Random(2024)
    As = [_sample_symmetric(rng) for _ in range(5)]
    sts = [_sample_st(rng) for _ in range(5)]
    omega = SymplecticForm(library.LAURET_J)
    fails = {"J D + D^T J = 0": 0, "D^2 = 0": 0, "D derivation": 0, "cocycle": 0, "theorem": 0}
    for A_, (s, t) in itertools.product(As, sts):
        g0 = library.lauret_g0(s, t)
        D = library.lauret_D(A_)
        fails["J D + D^T J = 0"] += not is_zero_matrix(symplectic_residual(D, omega))
        fails["D^2 = 0"] += not is_zero_matrix(mat_mul(D, D))
        fails["D derivation"] += not is_derivation(D, g0)
        fails["cocycle"] += omega.cocycle_witness(g0) is not None
        fails["theorem"] += not check_theorem_main3(library.lauret_theorem_input(s, t, A_)).verdict
    total = len(As) * len(sts)
    ok = not any(fails.values())
    detail = "; ".join(f"{k} fails {v}/{total}" for k, v in fails.items())
    record(3, ok, detail)


def test_criterion_4_heisenberg_cross_check():
    start = time.perf_counter()
    r = gaussian_comparison(128)
    elapsed = time.perf_counter() - start
    ok = r.error <= 1e-6 and elapsed < 30
    record(4, ok, f"relative Frobenius error {r.error:.2e} at grid 128 (tolerance 1e-6); {elapsed:.2f} s")


def test_criterion_5_invariant_operators():
    g = library.heisenberg3()
    orbit = orbit_cross_section(g, [L, ZERO, ZERO])
    fields = coadjoint_vector_fields(orbit)
    dims = {}
    all_invariant = True
    for order in (1, 2):
        ops = find_invariant_ops(orbit, order, 0)
        dims[order] = len(ops)
        all_invariant &= all(is_invariant_op(D, orbit, fields) for D in ops)
    ok = dims == {1: 3, 2: 6} and all_invariant
    record(5, ok, f"dimensions order<=1: {dims[1]}, order<=2: {dims[2]}; zero commutators: {all_invariant}")


def test_criterion_6_flatness():
    cases = [
        ("h3 generic", library.heisenberg3(), {"X1": L}, True),
        ("h5 generic", library.heisenberg5(), {"X1": L}, True),
        ("5-dim ideal at aX1*", library.pedersen5(), {"X1": A}, True),
        ("pedersen6 full orbit", library.pedersen6(), {"X1": A, "X6": B}, False),
        ("filiform4 generic", library.filiform4(), {"X1": A, "X2": B}, False),
    ]
    wrong = []
    for label, g, xi, flat in cases:
        vec = [xi.get(n, ZERO) for n in g.names]
        if is_flat_orbit(orbit_cross_section(g, vec)) is not flat:
            wrong.append(label)
    record(6, not wrong, f"{len(cases) - len(wrong)}/5 verdicts correct" + (f"; wrong: {wrong}" if wrong else ""))


def test_criterion_7_proposition_suites():
    start = time.perf_counter()
    instances = random_instances(120, seed=7, max_dim=6)
    disagree = 0
    codim1 = 0
    mismatch31 = 0
    for inst in instances:
        g = inst.algebra
        rep = prop32_check(g, inst.ideal, inst.xi, restrict=False)
        disagree += not rep.agree
        ideals = [inst.ideal] if len(inst.ideal) == g.dim - 1 else []
        flag = [g.basis(k) for k in range(g.dim - 1)]
        if g.dim > 1 and g.is_ideal(flag):
            ideals.append(flag)
        for h in ideals:
            codim1 += 1
            p32 = prop32_check(g, h, inst.xi, restrict=False)
            mismatch31 += prop31_check(g, h, inst.xi).verdict != p32.verdict
    elapsed = time.perf_counter() - start
    ok = len(instances) >= 100 and disagree == 0 and mismatch31 == 0 and codim1 > 0 and elapsed < 60
    detail = (
        f"{len(instances)} instances, restriction-condition disagreements {disagree}; "
        f"{codim1} codimension-1 checks, ideal-orbit check mismatches {mismatch31}; {elapsed:.2f} s"
    )
    record(7, ok, detail)


def test_criterion_8_pullback_identity():
    g = library.pedersen6()
    orbit = orbit_cross_section(g, P6_XI)
    rep = induced_drep(g, vergne_polarization(g, P6_XI), P6_XI)
    data = restriction_data(g, 5, P6_XI, big=orbit)
    n = orbit.dim
    monomials = [e for e in itertools.product(range(4), repeat=n) if sum(e) <= 3]
    failures = []
    for e in monomials:
        a = MultiPoly(n, {e: ONE}, orbit.y_names)
        if not verify_pullback(a, rep, data).ok:
            failures.append(str(a))
    ok = not failures and len(monomials) == 35
    record(8, ok, f"{len(monomials) - len(failures)}/{len(monomials)} monomials of degree <= 3 satisfy the identity")


def test_criterion_9_boundedness():
    norms = boundedness_norms((64, 128))
    change = abs(norms[64] - norms[128]) / norms[128]
    ok = change <= 0.05
    record(9, ok, f"norms {norms[64]:.6f} (64) and {norms[128]:.6f} (128), relative change {change:.2e}")


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-v"]))
