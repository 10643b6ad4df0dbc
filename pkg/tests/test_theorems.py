import pytest

from orbitkit import library
from orbitkit.errors import PreconditionFailed
from orbitkit.exact import param
from orbitkit.lie import LieAlgebra
from orbitkit.theorems import (
    DecompositionWitness,
    build_big_algebra,
    check_decomposition,
    check_flat_preservation,
    check_theorem_main3,
    generic_flatness,
)

GENERIC_A = [[1, 2, 0], [2, 5, 1], [0, 1, -1]]


def test_pedersen_data_rebuilds_pedersen6():
    big, g = build_big_algebra(library.pedersen_theorem_input())
    p6 = library.pedersen6()
    # basis (Z, X2..X5, D) with Z = -X1 and D = X6
    frame = [[-1 if i == 0 else 0 for i in range(6)]] + [p6.basis(k) for k in range(1, 6)]
    assert big == p6.change_basis(frame, big.names)
    assert g.dim == 5


def test_pedersen_theorem_items_pass():
    rep = check_theorem_main3(library.pedersen_theorem_input())
    assert rep.verdict, rep.failed()
    assert rep.info["step"] == 5
    assert len(rep.items) == 6


def test_xi_conditions_fail_when_center_vanishes():
    rep = check_theorem_main3(library.pedersen_theorem_input(a=0))
    assert not rep.item("(iii) conditions on xi").ok


def test_lauret_identity_A_passes():
    rep = check_theorem_main3(library.lauret_theorem_input(param("s"), param("t")))
    assert rep.verdict, rep.failed()


def test_lauret_generic_A_fails_symplectic_item():
    rep = check_theorem_main3(library.lauret_theorem_input(2, 3, GENERIC_A))
    # without (i) the big algebra cannot be formed, so the structural items fail with it
    assert rep.failed() == [
        "(i) symplectic nilpotent derivations",
        "(ii) center is R x {0}",
        "(iv) s inside isotropy",
        "(v) restriction of orbits",
    ]
    assert "(4,5)=1" in rep.item("(i) symplectic nilpotent derivations").witness
    assert rep.item("(vi) flat orbit").ok


def _lauret_witness(g, c=("X1", "X2", "X3"), V=("X4", "X5", "X6")):
    def b(*ns):
        return [g.basis(g.index(n)) for n in ns]

    return DecompositionWitness(h=b("X0"), z=b("X0"), c=b(*c), V=b(*V), h1=b("X0"), s=b("D"))


def test_decomposition_of_lauret6():
    g = library.lauret6(2, 3)
    rep = check_decomposition(g, _lauret_witness(g))
    assert rep.verdict, rep.failed()
    assert rep.item("V x c -> z nondegenerate").witness == "det = 1"


def test_decomposition_rejects_swapped_roles():
    g = library.lauret6(2, 3)
    rep = check_decomposition(g, _lauret_witness(g, c=("X4", "X5", "X6"), V=("X1", "X2", "X3")))
    assert "c abelian" in rep.failed()


def test_decomposition_rejects_high_step():
    g = library.pedersen6()
    z = [g.basis(0)]
    rep = check_decomposition(g, DecompositionWitness(h=z, z=z, c=[], V=[], h1=z, s=[]))
    assert "at most 3-step" in rep.failed()


def test_generic_flatness():
    assert generic_flatness(library.heisenberg3()).flat
    assert generic_flatness(library.pedersen5()).flat
    assert not generic_flatness(library.filiform4()).flat
    with pytest.raises(PreconditionFailed):
        generic_flatness(LieAlgebra.abelian(2))


def test_flat_preservation_heisenberg():
    rep = check_flat_preservation(library.heisenberg3(), library.heisenberg5())
    assert rep.verdict
    assert rep.info["product_dimension"] == 7


def test_flat_preservation_needs_flat_factors():
    with pytest.raises(PreconditionFailed):
        check_flat_preservation(library.heisenberg3(), library.pedersen6())
