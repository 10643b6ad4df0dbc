"""Floating-point Weyl-Pedersen quantization on the generic orbit of the Heisenberg algebra.

Schroedinger model: ``pi(exp(x2 X2 + x3 X3)) f(t) = e^{i lam x2 (t + x3/2)} f(t + x3)``.
The symbol lives on the orbit ``{y1 = lam}`` in the jump coordinates (y2, y3) and

    a^(x) = (2 pi)^-2 ∫∫ e^{-i (y2 x2 + y3 x3)} a(y) dy,
    Op(a) f(t) = ∫∫ a^(x) (pi(exp x) f)(t) dx,

with the measure fixed by ``Op(1) = I``.  Both integrals are evaluated as
discrete sums on dual grids.  The oracle is the classical Weyl kernel
``(2 pi)^-1 ∫ a(lam (t+s)/2, y3) e^{i y3 (t-s)} dy3`` evaluated in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import GridTooCoarse, NoConvergence
from .exact.diffop import DiffOperator
from .exact.scalar import I, as_scalar
from .kirillov import DRep

RULES = ("trapezoid", "gauss-legendre")


@dataclass(frozen=True)
class GridSpec:
    """``n`` sample points on ``[-extent, extent)`` for the model variable t.

    The orbit grid is derived: y2 on the half-step grid ``lam (t + s)/2`` and
    y3 on ``n_y3`` points (default ``2 n``) of ``[-pi/h, pi/h)``.
    """

    n: int = 128
    extent: float = 8.0
    n_y3: int | None = None
    rule: str = "trapezoid"

    def __post_init__(self):
        if self.n < 8:
            raise ValueError("grids need at least 8 points")
        if not self.extent > 0:
            raise ValueError("extent must be positive")
        if self.rule not in RULES:
            raise ValueError(f"unknown quadrature rule {self.rule!r}")
        if self.n_y3 is not None and self.n_y3 < 8:
            raise ValueError("grids need at least 8 points")

    @property
    def h(self) -> float:
        return 2.0 * self.extent / self.n

    @property
    def t(self) -> np.ndarray:
        return -self.extent + self.h * np.arange(self.n)

    @property
    def q(self) -> int:
        return self.n_y3 if self.n_y3 is not None else 2 * self.n

    @property
    def nyquist(self) -> float:
        return np.pi / self.h

    def y2(self, lam: float) -> np.ndarray:
        return lam * (-self.extent + 0.5 * self.h * np.arange(2 * self.n - 1))

    def y3_nodes(self) -> tuple[np.ndarray, np.ndarray]:
        """Nodes and weights for the y3 integral over ``[-pi/h, pi/h)``."""
        w = self.nyquist
        if self.rule == "gauss-legendre":
            x, wt = np.polynomial.legendre.leggauss(self.q)
            return w * x, w * wt
        d = 2 * w / self.q
        return -w + d * np.arange(self.q), np.full(self.q, d)

    def x3(self) -> np.ndarray:
        return self.h * np.arange(-(self.n - 1), self.n)


def _exact_values(values: dict) -> dict:
    # floats are converted through their exact binary value
    return {k: as_scalar(Fraction(v) if isinstance(v, float) else v) for k, v in values.items()}


@dataclass
class HeisenbergModel:
    """The Schroedinger model with central character ``i lam``."""

    lam: float

    def __post_init__(self):
        if not self.lam or not np.isfinite(self.lam):
            raise ValueError("lam must be a nonzero finite real")

    @classmethod
    def from_drep(cls, rep: DRep, values: dict | None = None) -> "HeisenbergModel":
        """Read ``lam`` from an exact h3 representation (parameters substituted by ``values``)."""
        if rep.algebra.dim != 3 or rep.d != 1:
            raise ValueError("numeric quantization needs the 3-dimensional Heisenberg model")
        if values:
            rep = rep.subs_params(_exact_values(values))
        z = rep.operators[0]
        if not z.is_scalar():
            raise ValueError("X1 does not act by a scalar")
        lam_s = z.scalar_value() * (-I)
        if lam_s.params:
            raise ValueError("substitute numeric parameter values first")
        lam = float(lam_s.to_complex().real)
        model = cls(lam)
        t = DiffOperator.coordinate(0, 1)
        d = DiffOperator.partial(0, 1)
        expected = [DiffOperator.scalar(I * lam_s, 1), t * (I * lam_s), d]
        if [op.with_names(("t1",)) for op in rep.operators] != [e.with_names(("t1",)) for e in expected]:
            raise ValueError("representation is not the Schroedinger model in the standard coordinates")
        return model


@dataclass
class SampledSymbol:
    """Symbol values on the orbit grid ``(y2, y3)``."""

    values: np.ndarray
    tag: str
    grid: GridSpec
    lam: float
    fn: Callable | None = field(default=None, repr=False)

    def __post_init__(self):
        shape = (2 * self.grid.n - 1, self.grid.q)
        if self.values.shape != shape:
            raise ValueError(f"symbol has shape {self.values.shape}, grid needs {shape}")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("symbol values must be finite")


def sample_symbol(fn: Callable, grid: GridSpec, lam: float, tag: str = "user") -> SampledSymbol:
    y2 = grid.y2(lam)
    y3, _ = grid.y3_nodes()
    Y2, Y3 = np.meshgrid(y2, y3, indexing="ij")
    vals = np.asarray(fn(Y2, Y3), dtype=complex) * np.ones_like(Y2, dtype=complex)
    return SampledSymbol(vals, tag, grid, lam, fn)


def gaussian(mu2: float = 0.0, mu3: float = 0.0, s2: float = 1.0, s3: float = 1.0) -> Callable:
    def fn(y2, y3):
        return np.exp(-((y2 - mu2) ** 2) / (2 * s2**2) - (y3 - mu3) ** 2 / (2 * s3**2))

    fn.params = (mu2, mu3, s2, s3)
    return fn


def sech_product(y2, y3):
    """A bounded smooth symbol with bounded derivatives."""
    return 1.0 / (np.cosh(y2) * np.cosh(y3))


def _bandwidth_check(a: SampledSymbol, tol: float) -> None:
    if a.fn is None:
        return
    y2 = a.grid.y2(a.lam)
    edge = a.grid.nyquist
    peak = float(np.max(np.abs(a.values))) or 1.0
    spread = np.max(np.abs(a.values - a.values[:, :1]))
    if spread <= tol * peak:
        return  # independent of y3: the y3 sum is exact
    tail = np.abs(np.asarray(a.fn(y2, np.full_like(y2, edge)))) + np.abs(np.asarray(a.fn(y2, np.full_like(y2, -edge))))
    if np.max(tail) > tol * peak:
        raise GridTooCoarse(
            f"symbol is {np.max(tail) / peak:.2e} of its peak at |y3| = {edge:.3g}; refine the t grid"
        )


def discretize_op(a: SampledSymbol, model: HeisenbergModel, grid: GridSpec | None = None, tail_tol: float = 1e-6):
    """Matrix of ``Op(a)`` acting on samples at ``grid.t`` (kernel times h)."""
    grid = grid or a.grid
    if grid != a.grid or model.lam != a.lam:
        raise ValueError("symbol was sampled on a different grid or orbit")
    if grid.rule == "trapezoid" and grid.q < 2 * grid.n - 1:
        raise GridTooCoarse(f"y3 grid of {grid.q} points aliases x3 offsets up to {grid.n - 1} steps")
    _bandwidth_check(a, tail_tol)
    n, h, lam = grid.n, grid.h, model.lam
    y2 = grid.y2(lam)
    P = y2.size
    dy2 = abs(lam) * 0.5 * h
    y3, w3 = grid.y3_nodes()
    x3 = grid.x3()
    dx2 = 2 * np.pi / (P * dy2)
    x2 = dx2 * (np.arange(P) - P // 2)
    # orbital Fourier transform on the (x2, x3) grid
    F2 = np.exp(-1j * np.outer(x2, y2)) * dy2
    F3 = np.exp(-1j * np.outer(y3, x3)) * w3[:, None]
    ahat = F2 @ a.values @ F3 / (2 * np.pi) ** 2
    # operator integral over x2 at the midpoints T = (t + s)/2
    G = np.exp(1j * np.outer(y2, x2)) * dx2
    K = G @ ahat  # K[p, k]: midpoint index p, offset index k
    i = np.arange(n)
    pi_, sj = np.meshgrid(i, i, indexing="ij")
    return K[pi_ + sj, sj - pi_ + n - 1] * h


def discretize_multiplication(op: DiffOperator, grid: GridSpec, values: dict | None = None) -> np.ndarray:
    """Diagonal matrix of an order-0 operator in t1."""
    if op.order() > 0:
        raise ValueError("only multiplication operators can be discretized this way")
    if values:
        op = op.subs_params(_exact_values(values))
    coeffs = {alpha[0]: complex(c.to_complex()) for (alpha, _), c in op.terms.items()}
    t = grid.t
    diag = sum((c * t**k for k, c in coeffs.items()), np.zeros_like(t, dtype=complex))
    return np.diag(diag)


def weyl_gaussian_kernel(grid: GridSpec, lam: float, mu2=0.0, mu3=0.0, s2=1.0, s3=1.0) -> np.ndarray:
    """Closed-form classical Weyl matrix of a Gaussian symbol (kernel times h)."""
    t = grid.t
    T = 0.5 * (t[:, None] + t[None, :])
    D = t[:, None] - t[None, :]
    k = (
        np.exp(-((lam * T - mu2) ** 2) / (2 * s2**2))
        * s3
        / np.sqrt(2 * np.pi)
        * np.exp(1j * mu3 * D - 0.5 * s3**2 * D**2)
    )
    return k * grid.h


def relative_frobenius(A: np.ndarray, B: np.ndarray) -> float:
    return float(np.linalg.norm(A - B) / np.linalg.norm(B))


# -- operator norms -------------------------------------------------------------------------------


@dataclass
class NormEstimate:
    value: float
    iterations: int
    converged: bool


def opnorm_estimate(M: np.ndarray, tol: float = 1e-8, max_iter: int = 20000, seed: int = 0) -> float:
    """Largest singular value by power iteration on ``M* M``."""
    return opnorm_power(M, tol, max_iter, seed).value


def opnorm_power(M: np.ndarray, tol: float = 1e-8, max_iter: int = 20000, seed: int = 0) -> NormEstimate:
    M = np.asarray(M, dtype=complex)
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    n = M.shape[1]
    if n == 0 or not np.any(M):
        return NormEstimate(0.0, 0, True)
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    v /= np.linalg.norm(v)
    prev = 0.0
    for it in range(1, max_iter + 1):
        w = M.conj().T @ (M @ v)
        lam = float(np.linalg.norm(w))
        if lam == 0.0:
            return NormEstimate(0.0, it, True)
        v = w / lam
        if abs(lam - prev) <= tol * lam:
            return NormEstimate(float(np.sqrt(lam)), it, True)
        prev = lam
    raise NoConvergence(f"power iteration did not reach relative tolerance {tol} in {max_iter} steps")


def opnorm_oracle(M: np.ndarray) -> float:
    """Dense SVD reference for small matrices."""
    return float(np.linalg.svd(np.asarray(M, dtype=complex), compute_uv=False)[0])


def write_matrix(path, M: np.ndarray) -> None:
    """Row-major text: one line per row, entries as ``re im`` pairs."""
    M = np.asarray(M, dtype=complex)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{M.shape[0]} {M.shape[1]}\n")
        for row in M:
            fh.write(" ".join(f"{z.real:.17g} {z.imag:.17g}" for z in row) + "\n")


def read_matrix(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        r, c = (int(x) for x in fh.readline().split())
        data = np.loadtxt(fh, ndmin=2)
    return (data[:, 0::2] + 1j * data[:, 1::2]).reshape(r, c)


# -- experiments used by the CLI and the acceptance suite ---------------------------------------------


@dataclass
class CompareResult:
    grid: GridSpec
    lam: float
    error: float
    hermitian_error: float


def gaussian_comparison(n: int = 128, extent: float = 8.0, lam: float = 1.0, rule: str = "trapezoid",
                        mu2=0.3, mu3=-0.5, s2=1.0, s3=1.2) -> CompareResult:
    grid = GridSpec(n, extent, rule=rule)
    fn = gaussian(mu2, mu3, s2, s3)
    M = discretize_op(sample_symbol(fn, grid, lam, "gaussian"), HeisenbergModel(lam))
    W = weyl_gaussian_kernel(grid, lam, mu2, mu3, s2, s3)
    herm = float(np.linalg.norm(M - M.conj().T) / np.linalg.norm(M))
    return CompareResult(grid, lam, relative_frobenius(M, W), herm)


def boundedness_norms(sizes=(64, 128), extent: float = 6.0, lam: float = 1.0, symbol: Callable = sech_product) -> dict:
    out = {}
    for n in sizes:
        grid = GridSpec(n, extent)
        M = discretize_op(sample_symbol(symbol, grid, lam, "sech"), HeisenbergModel(lam))
        out[n] = opnorm_estimate(M)
    return out
