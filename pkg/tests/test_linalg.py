from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from orbitkit.exact import ONE, ZERO, as_scalar, param
from orbitkit.exact.linalg import det, identity, mat_kernel, mat_vec, rank, zeros
from strategies import scalars


def test_identity_has_trivial_kernel():
    assert mat_kernel(identity(3)).basis == []


def test_zero_matrix_full_kernel():
    k = mat_kernel(zeros(2, 2))
    assert len(k.basis) == 2
    assert rank(k.basis) == 2


def test_skew_pairing_kernel_records_assumption():
    a = param("a")
    B = zeros(6, 6)
    B[1][4], B[4][1] = a, -a
    B[2][3], B[3][2] = -a, a
    res = mat_kernel(B)
    assert len(res.basis) == 2
    for v in res.basis:
        assert all(x == ZERO for x in mat_vec(B, v))
        assert v[1] == v[2] == v[3] == v[4] == ZERO
    assert "a != 0" in res.assumptions.render()


@given(st.lists(st.lists(scalars(), min_size=4, max_size=4), min_size=1, max_size=3))
def test_kernel_vectors_annihilated(rows):
    res = mat_kernel(rows)
    for v in res.basis:
        assert all(x == ZERO for x in mat_vec(rows, v))
    assert len(res.basis) + rank(rows) == 4


def test_det():
    A = [[as_scalar(Fraction(1, 2)), ONE], [ONE, as_scalar(4)]]
    assert det(A) == as_scalar(1)
