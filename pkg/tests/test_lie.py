from fractions import Fraction

import pytest

from orbitkit import library
from orbitkit.errors import (
    AntisymmetryViolation,
    CentersNotShared,
    CocycleViolation,
    JacobiViolation,
    NotDerivation,
    NotNilpotent,
    NotPolarization,
)
from orbitkit.exact import ONE, ZERO, as_scalar, param
from orbitkit.exact.linalg import is_zero_matrix, mat_mul
from orbitkit.lie import (
    LieAlgebra,
    SymplecticForm,
    build_S_p,
    central_extension,
    check_symplectic_derivation,
    is_derivation,
    is_jordan_holder,
    jordan_holder_basis,
    reduced_direct_product,
    semidirect_product,
    validate_lie,
)


def _e(m, k, c=1):
    v = [ZERO] * m
    v[k] = as_scalar(c)
    return v


def test_antisymmetry_violation():
    c = [[[ZERO] * 2 for _ in range(2)] for _ in range(2)]
    c[0][1] = _e(2, 0)
    with pytest.raises(AntisymmetryViolation) as exc:
        validate_lie(LieAlgebra(["X1", "X2"], c))
    assert "[X1,X2]" in str(exc.value) or "1" in str(exc.value)


def test_jacobi_violation():
    # [X2,X3] = X1 and [X4,X1] = X1 break Jacobi on (X2, X3, X4)
    table = {(1, 2): _e(4, 0), (3, 0): _e(4, 0)}
    with pytest.raises(JacobiViolation):
        validate_lie(table, ["X1", "X2", "X3", "X4"])


def test_not_nilpotent():
    # [X2, X1] = X1: the 2-dimensional non-abelian algebra
    with pytest.raises(NotNilpotent):
        validate_lie({(1, 0): _e(2, 0)}, ["X1", "X2"])


@pytest.mark.parametrize(
    "build, step",
    [
        (library.heisenberg3, 2),
        (library.heisenberg5, 2),
        (library.filiform4, 3),
        (library.pedersen5, 3),
        (library.pedersen6, 5),
    ],
)
def test_steps(build, step):
    assert build().step == step


def test_default_basis_is_jordan_holder():
    for build in (library.heisenberg3, library.pedersen6, library.filiform4):
        g = build()
        assert is_jordan_holder(g, g.full_basis())
        assert not jordan_holder_basis(g).changed


def test_jordan_holder_refines_reversed_basis():
    g = library.pedersen6()
    rev = list(reversed(g.full_basis()))
    assert not is_jordan_holder(g, rev)
    jh = jordan_holder_basis(g, preferred=rev)
    assert jh.changed
    assert is_jordan_holder(g, jh.vectors)


def test_pedersen_central_extension_has_opposite_center():
    g0 = library.pedersen_g0()
    ext = central_extension(g0, SymplecticForm(library.PEDERSEN_J))
    # [X5, X2] = omega(X5, X2) Z = Z, while pedersen5 has [X5, X2] = -X1
    z = ext.bracket(ext.basis(4), ext.basis(1))
    assert z == _e(5, 0)
    p5 = library.pedersen5()
    assert p5.bracket(p5.basis(4), p5.basis(1)) == _e(5, 0, -1)


def test_cocycle_violation():
    g0 = library.filiform4()
    J = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    with pytest.raises(CocycleViolation):
        central_extension(g0, SymplecticForm(J))


def test_semidirect_rejects_non_derivation():
    g = library.heisenberg3()
    D = [[ZERO] * 3 for _ in range(3)]
    D[1][1] = ONE
    with pytest.raises(NotDerivation):
        semidirect_product(LieAlgebra.abelian(1, ["D"]), g, [D])


def test_lauret_identities_for_identity_A():
    s, t = param("s"), param("t")
    g0 = library.lauret_g0(s, t)
    omega = SymplecticForm(library.LAURET_J)
    omega.validate(g0)
    D = library.lauret_D(library.IDENTITY3)
    rep = check_symplectic_derivation(D, omega, g0)
    assert rep.ok
    assert rep.nilpotency_index == 2
    assert is_zero_matrix(mat_mul(D, D))


def test_lauret_generic_symmetric_A_is_derivation_but_not_symplectic():
    A = [[1, 2, 0], [2, 5, 1], [0, 1, -1]]
    g0 = library.lauret_g0(2, 3)
    D = library.lauret_D(A)
    assert is_derivation(D, g0)
    rep = check_symplectic_derivation(D, SymplecticForm(library.LAURET_J), g0)
    assert rep.derivation and rep.nilpotent
    assert not rep.symplectic


def test_lauret6_builds():
    g = library.lauret6(Fraction(1, 2), -3)
    assert g.dim == 8
    assert g.is_nilpotent()
    z, _ = g.center()
    assert len(z) == 1


def test_reduced_direct_product_of_heisenbergs():
    h = reduced_direct_product(library.heisenberg3(), library.heisenberg3())
    assert h.dim == 5
    z, _ = h.center()
    assert len(z) == 1
    assert h.step == 2


def test_reduced_product_needs_one_dim_centers():
    with pytest.raises(CentersNotShared):
        reduced_direct_product(library.heisenberg3(), LieAlgebra.abelian(2))


def test_S_p_for_pedersen_polarization():
    g0 = library.pedersen_g0()
    omega = SymplecticForm(library.PEDERSEN_J)
    p = [g0.basis(0), g0.basis(1)]
    S = build_S_p(g0, omega, p)
    assert S.dim >= 1
    for D in S.derivations:
        assert check_symplectic_derivation(D, omega, g0).ok
        assert is_zero_matrix(mat_mul(D, D))
    assert S.automorphisms and S.square_zero
    with pytest.raises(NotPolarization):
        build_S_p(g0, omega, [g0.basis(0)])
