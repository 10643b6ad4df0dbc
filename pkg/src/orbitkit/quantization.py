"""Weyl-Pedersen quantization of polynomial symbols and invariant operators.

Conventions: the orbital Fourier transform is ``a^(X) = ∫ e^{-i<xi,X>} a(xi) dxi``
and ``Op(a) = ∫ a^(X) pi(X) dX``, so ``Op(e^{i<.,X>}) = pi(exp X)`` and
a monomial ``y_{j1} ... y_{jk}`` quantizes to ``(-i)^k`` times the
symmetrized product of ``dpi(X_{j1}), ..., dpi(X_{jk})``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import ArityMismatch, RestrictionNotBijective
from .exact.diffop import DiffOperator, commutator
from .exact.linalg import mat_kernel
from .exact.ncword import NCWord, symmetrize
from .exact.poly import MultiPoly
from .exact.scalar import I, ONE, ZERO, as_scalar
from .kirillov import DRep
from .lie import LieAlgebra
from .orbits import CoadjointOrbit, orbit_cross_section, prop32_check


def _check_compatible(rep: DRep, orbit: CoadjointOrbit) -> None:
    if rep.algebra.dim != orbit.algebra.dim or rep.algebra.c != orbit.algebra.c:
        raise ValueError("representation and orbit use different algebras")
    if list(rep.xi) != list(orbit.xi):
        raise ValueError("representation and orbit use different functionals")


def quantize_poly(a: MultiPoly, rep: DRep, orbit: CoadjointOrbit) -> DiffOperator:
    """``Op_pi(a)`` for a polynomial symbol in the jump coordinates of ``orbit``."""
    if a.nvars != len(orbit.jumps):
        raise ArityMismatch(f"symbol has {a.nvars} variables, orbit has {len(orbit.jumps)} jump coordinates")
    _check_compatible(rep, orbit)
    names = [f"X{j}" for j in orbit.jumps]
    images = {n: rep.operators[j - 1] for n, j in zip(names, orbit.jumps)}
    ident = DiffOperator.identity(rep.d, rep.operators[0].names if rep.operators else None)
    total = DiffOperator(rep.d, {}, ident.names)
    for exps, c in a.terms.items():
        word = tuple(n for n, e in zip(names, exps) for _ in range(e))
        k = len(word)
        sym = symmetrize(NCWord({word: ONE}))
        op = sym.evaluate(images, ident)
        total = total + op * (c * (-I) ** k)
    return total


def coadjoint_vector_fields(orbit: CoadjointOrbit) -> list:
    """``L_X f(xi) = d/ds f(Ad*(exp sX) xi)`` for each basis X, in jump coordinates.

    ``L_X = sum_j -<xi(y), [X, X_j]> d/dy_j``; these satisfy
    ``[L_X, L_Y] = L_{-[X,Y]}``.
    """
    g = orbit.algebra
    n = orbit.dim
    names = orbit.y_names
    coords = [orbit.coordinate(l) for l in range(1, g.dim + 1)]
    fields = []
    for x in range(g.dim):
        coeffs = []
        for j in orbit.jumps:
            vec = g.c[x][j - 1]
            p = MultiPoly(n, {}, names)
            for l, c in enumerate(vec):
                if c:
                    p = p + coords[l] * c
            coeffs.append(-p)
        fields.append(DiffOperator.from_vector_field(coeffs, names) if n else DiffOperator(0, {}, ()))
    return fields


def is_invariant_op(D: DiffOperator, orbit: CoadjointOrbit, fields: Sequence | None = None) -> bool:
    fields = fields if fields is not None else coadjoint_vector_fields(orbit)
    return all(not commutator(D, L) for L in fields)


def _multi_indices(n: int, bound: int):
    for e in product(range(bound + 1), repeat=n):
        if sum(e) <= bound:
            yield e


def find_invariant_ops(orbit: CoadjointOrbit, max_order: int, max_coeff_degree: int) -> list:
    """Basis of invariant operators ``sum c_{ab} y^a d^b`` with the given bounds."""
    if max_order < 0 or max_coeff_degree < 0:
        raise ValueError("bounds must be nonnegative")
    n = orbit.dim
    names = orbit.y_names
    fields = coadjoint_vector_fields(orbit)
    monos = [(a, b) for b in _multi_indices(n, max_order) for a in _multi_indices(n, max_coeff_degree)]
    basis_ops = [DiffOperator(n, {(a, b): ONE}, names) for a, b in monos]
    comms = [[commutator(B, L) for L in fields] for B in basis_ops]
    keys = sorted({(x, key) for col in comms for x, C in enumerate(col) for key in C.terms}, key=str)
    index = {k: r for r, k in enumerate(keys)}
    rows = [[ZERO] * len(monos) for _ in keys]
    for i, col in enumerate(comms):
        for x, C in enumerate(col):
            for key, c in C.terms.items():
                rows[index[(x, key)]][i] = c
    ker = mat_kernel(rows, len(monos)).basis if rows else [
        [ONE if i == k else ZERO for i in range(len(monos))] for k in range(len(monos))
    ]
    out = []
    for vec in ker:
        op = DiffOperator(n, {m: c for m, c in zip(monos, vec) if c}, names)
        out.append(op)
    return out


# -- restriction pullback ----------------------------------------------------------------------


@dataclass
class Restriction:
    """The restriction map between orbits in jump coordinates."""

    big: CoadjointOrbit
    small: CoadjointOrbit
    k: int
    rho: list  # small jump coordinates as polynomials on the big orbit
    rho_inv: list  # big jump coordinates as polynomials on the small orbit


def restriction_data(g: LieAlgebra, k: int, xi: Sequence, big: CoadjointOrbit | None = None) -> Restriction:
    """``rho: O~ -> O, xi -> xi|h`` for the ideal h spanned by the first k basis vectors."""
    xi = [as_scalar(v) for v in xi]
    h = [g.basis(i) for i in range(k)]
    rep = prop32_check(g, h, xi, jh=g.full_basis(), restrict=False)
    if not rep.verdict:
        raise RestrictionNotBijective("g is not g_xi + h; restriction is not a bijection of orbits")
    big = big or orbit_cross_section(g, xi)
    hsub = g.subalgebra(h, g.names[:k])
    small = orbit_cross_section(hsub, xi[:k])
    rho = [big.coordinate(j) for j in small.jumps]
    if small.jumps != big.jumps:
        raise RestrictionNotBijective("jump sets of the two orbits differ")
    names_small = small.y_names
    rho_inv = [MultiPoly.var(i, small.dim, names_small) for i in range(small.dim)]
    # rho o rho^{-1} = id
    for i, p in enumerate(rho):
        if p.with_names(names_small).substitute(rho_inv) != rho_inv[i]:
            raise RestrictionNotBijective("restriction is not invertible in jump coordinates")
    return Restriction(big, small, k, rho, rho_inv)


def pullback_symbol(a: MultiPoly, data: Restriction, inverse: bool = False) -> MultiPoly:
    """``a o rho`` (symbol on O to O~) or, with ``inverse``, ``a o rho^{-1}``."""
    if inverse:
        if a.nvars != data.big.dim:
            raise ArityMismatch("symbol does not live on the big orbit")
        return a.substitute(data.rho_inv).with_names(data.small.y_names)
    if a.nvars != data.small.dim:
        raise ArityMismatch("symbol does not live on the small orbit")
    return a.substitute(data.rho).with_names(data.big.y_names)


def restricted_rep(rep: DRep, data: Restriction) -> DRep:
    """``pi = pi~`` restricted to the ideal spanned by the first k basis vectors."""
    return DRep(data.small.algebra, data.small.xi, rep.operators[: data.k], None)


@dataclass
class PullbackCheck:
    symbol: MultiPoly
    lhs: DiffOperator
    rhs: DiffOperator

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def verify_pullback(a: MultiPoly, rep: DRep, data: Restriction) -> PullbackCheck:
    """``Op_{pi~}(a) == Op_pi(a o rho^{-1})`` as exact operators."""
    lhs = quantize_poly(a, rep, data.big)
    small_rep = restricted_rep(rep, data)
    rhs = quantize_poly(pullback_symbol(a, data, inverse=True), small_rep, data.small)
    return PullbackCheck(a, lhs, rhs)
