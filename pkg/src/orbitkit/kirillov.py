"""Vergne polarizations and the induced representation as differential operators.

Model: functions f on G with ``f(p g) = chi(p) f(g)``, ``chi(exp W) = e^{i<xi,W>}``
for W in the polarization p, and ``(pi(x) f)(g) = f(g x)``.  Restricted to the
cross-section ``gamma(t) = exp(t1 Y1) ... exp(td Yd)`` of the complement,

    dpi(X) = i <xi, W(t)> + sum_k v_k(t) d/dt_k,

where ``Ad(gamma(t)) X = W(t) + sum_k v_k(t) R_k(t)`` with ``W(t)`` in p and
``R_k(t) = Ad(exp t1 Y1 ... exp t_{k-1} Y_{k-1}) Y_k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import BracketOracleFailure
from .exact.diffop import DiffOperator, commutator
from .exact.linalg import Assumptions, identity, in_span, mat_mul, solve, span_basis, transpose
from .exact.poly import MultiPoly
from .exact.scalar import I, ZERO, ScalarExpr, as_scalar
from .lie import LieAlgebra, is_jordan_holder
from .orbits import Ad, isotropy_algebra, pairing, restricted_isotropy


@dataclass
class Polarization:
    """Subalgebra ``p`` with a Malcev complement ``Y_1..Y_d`` (JH indices, 0-based)."""

    basis: list
    complement: list
    assumptions: Assumptions

    @property
    def d(self) -> int:
        return len(self.complement)

    @property
    def dim(self) -> int:
        return len(self.basis)


def vergne_polarization(g: LieAlgebra, xi: Sequence) -> Polarization:
    """``p = sum_j (g_j)_{xi|g_j}`` over the flag of the (Jordan-Hoelder) basis."""
    if not is_jordan_holder(g, g.full_basis()):
        raise ValueError("the basis of g is not Jordan-Hoelder")
    xi = [as_scalar(v) for v in xi]
    m = g.dim
    vecs: list = []
    for j in range(1, m + 1):
        vecs.extend(restricted_isotropy(g, [g.basis(i) for i in range(j)], xi))
    p = span_basis(vecs, m) if vecs else []
    complement = []
    for k in reversed(range(m)):
        base = [g.basis(i) for i in range(k)] + p
        if not in_span(base, g.basis(k)):
            complement.append(k)
    pol = Polarization(p, complement, Assumptions())
    _check_polarization(g, xi, pol)
    return pol


def _check_polarization(g: LieAlgebra, xi, pol: Polarization) -> None:
    iso = isotropy_algebra(g, xi)
    orbit_dim = g.dim - iso.dim
    if not g.is_subalgebra(pol.basis):
        raise AssertionError("polarization is not a subalgebra")
    for u in pol.basis:
        for v in pol.basis:
            if pairing(xi, g.bracket(u, v)):
                raise AssertionError("xi does not vanish on [p, p]")
    if 2 * pol.d != orbit_dim or pol.dim != g.dim - orbit_dim // 2:
        raise AssertionError("polarization has the wrong dimension")
    pol.assumptions.extend(iso.assumptions)


def _sname(k: int) -> str:
    return f"_s{k + 1}"


@dataclass
class DRep:
    """``dpi(X_j)`` for every basis element, as operators in t1..td."""

    algebra: LieAlgebra
    xi: list
    operators: list
    polarization: Polarization | None = None
    notes: list = field(default_factory=list)

    @property
    def d(self) -> int:
        return self.operators[0].nvars if self.operators else 0

    def __getitem__(self, name_or_index):
        if isinstance(name_or_index, str):
            return self.operators[self.algebra.index(name_or_index)]
        return self.operators[name_or_index]

    def of(self, x: Sequence) -> DiffOperator:
        """``dpi`` of a coordinate vector."""
        total = DiffOperator(self.d, {}, self.operators[0].names)
        for c, op in zip(x, self.operators):
            if c:
                total = total + op * as_scalar(c)
        return total

    def lines(self) -> list[str]:
        return [f"dpi({n}) = {op}" for n, op in zip(self.algebra.names, self.operators)]

    def subs_params(self, values: dict) -> "DRep":
        return DRep(self.algebra, self.xi, [op.subs_params(values) for op in self.operators], self.polarization)

    def rescaled(self, scales: Sequence) -> "DRep":
        """Same representation in coordinates t_k = scales[k] * u_k."""
        return DRep(
            self.algebra, self.xi, [op.substitute_linear(scales) for op in self.operators], self.polarization
        )


def _to_operator(scalar_part: ScalarExpr, coeffs: Sequence[ScalarExpr], snames, tnames) -> DiffOperator:
    d = len(tnames)
    op = DiffOperator.multiplication(MultiPoly.from_scalar(scalar_part, snames).with_names(tnames), tnames)
    for k, v in enumerate(coeffs):
        if v:
            P = MultiPoly.from_scalar(v, snames).with_names(tnames)
            op = op + DiffOperator.multiplication(P, tnames) * DiffOperator.partial(k, d, tnames)
    return op


def induced_drep(g: LieAlgebra, pol: Polarization, xi: Sequence, check: bool = True) -> DRep:
    xi = [as_scalar(v) for v in xi]
    m, d = g.dim, pol.d
    snames = [_sname(k) for k in range(d)]
    tnames = [f"t{k + 1}" for k in range(d)]
    # R_k(t) and Ad(gamma(t))
    prefix = identity(m)
    R = []
    for k, idx in enumerate(pol.complement):
        R.append([row[idx] for row in prefix])
        x = [ZERO] * m
        x[idx] = ScalarExpr.parameter(snames[k])
        prefix = mat_mul(prefix, Ad(g, x))
    AdGamma = prefix
    frame = transpose([list(v) for v in pol.basis] + R)  # columns: p basis, then R_k
    xi_p = [pairing(xi, v) for v in pol.basis]
    ops = []
    for j in range(m):
        target = [row[j] for row in AdGamma]
        coords = solve(frame, target)
        if coords is None:
            raise BracketOracleFailure(f"Ad(gamma)X{j + 1} is not decomposable along p + R")
        w = coords[: pol.dim]
        v = coords[pol.dim :]
        scalar = I * sum((a * b for a, b in zip(w, xi_p) if a and b), ZERO)
        try:
            ops.append(_to_operator(scalar, v, snames, tnames))
        except ValueError as exc:
            raise BracketOracleFailure(f"dpi(X{j + 1}) has non-polynomial coefficients") from exc
    rep = DRep(g, xi, ops, pol)
    if check:
        report = verify_drep_brackets(rep.operators, g)
        if not report.ok:
            raise BracketOracleFailure(f"bracket residuals on pairs {sorted(report.residuals)}")
        for z in g.center()[0]:
            op = rep.of(z)
            if op != DiffOperator.scalar(I * pairing(xi, z), d, tnames):
                raise BracketOracleFailure("central element does not act by its character")
    return rep


@dataclass
class BracketReport:
    residuals: dict
    pairs_checked: int

    @property
    def ok(self) -> bool:
        return not self.residuals


def verify_drep_brackets(operators: Sequence[DiffOperator], g: LieAlgebra) -> BracketReport:
    """Residuals ``[dpi(X_j), dpi(X_k)] - dpi([X_j, X_k])`` for all pairs j < k."""
    residuals = {}
    count = 0
    m = g.dim
    for j in range(m):
        for k in range(j + 1, m):
            count += 1
            lhs = commutator(operators[j], operators[k])
            rhs = DiffOperator(lhs.nvars, {}, lhs.names)
            for l, c in enumerate(g.c[j][k]):
                if c:
                    rhs = rhs + operators[l] * c
            r = lhs - rhs
            if r:
                residuals[(j + 1, k + 1)] = r
    return BracketReport(residuals, count)


def central_character(rep: DRep) -> list:
    """``(z, scalar)`` for a basis z of the center; scalars are ``dpi(z)``."""
    out = []
    for z in rep.algebra.center()[0]:
        op = rep.of(z)
        out.append((z, op.scalar_value() if op.is_scalar() else None))
    return out


@dataclass
class Comparison:
    """Operator-by-operator comparison with a reference list after a coordinate rescaling."""

    scales: list
    residuals: dict  # basis index (1-based) -> operator difference

    @property
    def matches(self) -> bool:
        return not self.residuals


def compare_with_reference(rep: DRep, reference: Sequence[DiffOperator], scales: Sequence) -> Comparison:
    """Compare ``rep`` in coordinates ``t_k = scales[k] * u_k`` with ``reference``."""
    scales = [as_scalar(s) for s in scales]
    moved = rep.rescaled(scales)
    res = {}
    for j, (ours, ref) in enumerate(zip(moved.operators, reference)):
        diff = ours - ref.with_names(ours.names)
        if diff:
            res[j + 1] = diff
    return Comparison(scales, res)
