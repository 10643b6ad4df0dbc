import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitkit import library
from orbitkit.errors import GridTooCoarse, NoConvergence
from orbitkit.exact import ZERO, param
from orbitkit.exact.poly import MultiPoly
from orbitkit.kirillov import induced_drep, vergne_polarization
from orbitkit.numeric import (
    GridSpec,
    HeisenbergModel,
    discretize_multiplication,
    discretize_op,
    gaussian,
    gaussian_comparison,
    opnorm_oracle,
    opnorm_power,
    read_matrix,
    relative_frobenius,
    sample_symbol,
    weyl_gaussian_kernel,
    write_matrix,
)
from orbitkit.orbits import orbit_cross_section
from orbitkit.quantization import quantize_poly


def _op(fn, grid, lam, **kw):
    return discretize_op(sample_symbol(fn, grid, lam), HeisenbergModel(lam), **kw)


def test_character_quantizes_to_group_element():
    # Op(e^{i<y, x>}) = pi(exp x) for x on the dual grid
    grid, lam = GridSpec(32, 4.0), 1.3
    P = 2 * grid.n - 1
    dx2 = 2 * np.pi / (P * abs(lam) * grid.h / 2)
    x2, x3 = 2 * dx2, 3 * grid.h
    M = _op(lambda y2, y3: np.exp(1j * (y2 * x2 + y3 * x3)), grid, lam, tail_tol=10.0)
    t = grid.t
    E = np.zeros((grid.n, grid.n), dtype=complex)
    for i in range(grid.n - 3):
        E[i, i + 3] = np.exp(1j * lam * x2 * (t[i] + x3 / 2))
    assert np.abs(M - E).max() < 1e-12


def test_op_one_is_identity():
    grid = GridSpec(64, 6.0)
    M = _op(lambda y2, y3: np.ones_like(y2), grid, 0.7)
    assert np.abs(M - np.eye(grid.n)).max() < 1e-12


def test_symbolic_and_numeric_agree_on_y2():
    g = library.heisenberg3()
    xi = [param("l"), ZERO, ZERO]
    orbit = orbit_cross_section(g, xi)
    rep = induced_drep(g, vergne_polarization(g, xi), xi)
    op = quantize_poly(MultiPoly.var(0, 2, orbit.y_names), rep, orbit)
    grid = GridSpec(64, 6.0)
    D = discretize_multiplication(op, grid, {"l": 0.8})
    M = _op(lambda y2, y3: y2, grid, 0.8)
    assert np.abs(M - D).max() < 1e-10
    assert HeisenbergModel.from_drep(rep, {"l": 0.8}).lam == pytest.approx(0.8)


@pytest.mark.parametrize("lam", [1.0, -0.6, 2.5])
def test_gaussian_matches_weyl_oracle(lam):
    grid = GridSpec(64, 8.0)
    fn = gaussian(0.2, -0.4, 1.1, 0.9)
    M = _op(fn, grid, lam)
    W = weyl_gaussian_kernel(grid, lam, 0.2, -0.4, 1.1, 0.9)
    assert relative_frobenius(M, W) < 1e-10


def test_gauss_legendre_rule_converges():
    r = gaussian_comparison(96, rule="gauss-legendre")
    assert r.error < 1e-4


@settings(max_examples=10)
@given(st.floats(-1, 1), st.floats(-1, 1), st.floats(0.7, 1.5))
def test_real_symbols_are_hermitian(mu2, mu3, s):
    grid = GridSpec(48, 7.0)
    M = _op(gaussian(mu2, mu3, s, s), grid, 1.0)
    assert np.linalg.norm(M - M.conj().T) <= 1e-10 * np.linalg.norm(M)


def test_coarse_grid_is_rejected():
    with pytest.raises(GridTooCoarse):
        _op(gaussian(0, 0, 1, 1), GridSpec(16, 8.0), 1.0)
    with pytest.raises(GridTooCoarse):
        _op(gaussian(0, 0, 1, 1), GridSpec(64, 8.0, n_y3=32), 1.0)


def test_gridspec_validation():
    with pytest.raises(ValueError):
        GridSpec(4)
    with pytest.raises(ValueError):
        GridSpec(32, rule="simpson")


def test_power_iteration_matches_svd():
    rng = np.random.default_rng(1)
    M = rng.standard_normal((40, 40)) + 1j * rng.standard_normal((40, 40))
    est = opnorm_power(M, tol=1e-12, max_iter=100000)
    assert est.converged
    assert est.value == pytest.approx(opnorm_oracle(M), rel=1e-5)
    with pytest.raises(NoConvergence):
        opnorm_power(M, tol=1e-16, max_iter=3)


def test_matrix_roundtrip(tmp_path):
    M = np.array([[1 + 2j, -0.5], [1e-20, 3j]])
    path = tmp_path / "m.txt"
    write_matrix(path, M)
    assert np.array_equal(read_matrix(path), M)
