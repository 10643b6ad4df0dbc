"""Group law, (co)adjoint actions and coadjoint orbits of nilpotent Lie algebras.

Conventions
-----------
* ``Ad(exp x) = exp(ad x)`` (a finite sum for nilpotent algebras).
* ``Ad*(g) xi = xi o Ad(g^{-1})``, so in coordinates
  ``Ad*(exp x) xi = Ad(exp(-x))^T xi``.
* Orbit coordinates y_l are the coordinates in the dual basis; jump indices
  and relation labels are 1-based.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import NotAnIdeal, SequenceMismatch, TriangularityFailure
from .exact.linalg import (
    Assumptions,
    identity,
    intersect,
    mat_add,
    mat_kernel,
    mat_mul,
    mat_scale,
    mat_vec,
    rank,
    span_basis,
    transpose,
)
from .exact.poly import MultiPoly
from .exact.scalar import ZERO, ScalarExpr, as_scalar
from .lie import LieAlgebra, is_jordan_holder, jordan_holder_basis

# -- BCH ---------------------------------------------------------------------------------


def _free_mul(A: dict, B: dict, n: int) -> dict:
    out: dict = {}
    for w1, c1 in A.items():
        for w2, c2 in B.items():
            if len(w1) + len(w2) <= n:
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=None)
def bch_series(n: int) -> tuple:
    """``log(e^X e^Y)`` up to words of length ``n`` as Dynkin-weighted words.

    Returns ``(coefficient, word)`` pairs, word letters 0 (X) and 1 (Y); the Lie
    element is ``sum coefficient * [w1, [w2, ... [w_{k-1}, w_k]]]``.
    """
    ex = {(0,) * i: Fraction(1, _fact(i)) for i in range(n + 1)}
    ey = {(1,) * i: Fraction(1, _fact(i)) for i in range(n + 1)}
    E = _free_mul(ex, ey, n)
    E.pop((), None)  # E - 1
    log: dict = {}
    power = {(): Fraction(1)}
    for k in range(1, n + 1):
        power = _free_mul(power, E, n)
        sign = Fraction((-1) ** (k + 1), k)
        for w, c in power.items():
            log[w] = log.get(w, 0) + sign * c
    # Dynkin-Specht-Wever: a homogeneous Lie element P of degree k equals
    # (1/k) sum_w c_w r(w) with r the right-normed bracketing.
    return tuple(
        (c / len(w), w) for w, c in sorted(log.items(), key=lambda kv: (len(kv[0]), kv[0])) if c
    )


def _fact(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def bch_product(x: Sequence, y: Sequence, g: LieAlgebra) -> list:
    """Group product of exponential coordinates, exact for nilpotent ``g``."""
    x = [as_scalar(v) for v in x]
    y = [as_scalar(v) for v in y]
    n = g.step
    letters = (x, y)
    memo: dict = {}

    def nested(word):
        if word in memo:
            return memo[word]
        if len(word) == 1:
            val = letters[word[0]]
        else:
            val = g.bracket(letters[word[0]], nested(word[1:]))
        memo[word] = val
        return val

    out = [ZERO] * g.dim
    for c, w in bch_series(max(n, 1)):
        v = nested(w)
        if any(v):
            out = [a + c * b for a, b in zip(out, v)]
    return out


def group_inverse(x: Sequence) -> list:
    return [-as_scalar(v) for v in x]


# -- adjoint and coadjoint actions -----------------------------------------------------------


def exp_nilpotent(A: list) -> list:
    n = len(A)
    out = identity(n)
    term = identity(n)
    for k in range(1, n + 1):
        term = mat_scale(mat_mul(term, A), Fraction(1, k))
        if not any(x for row in term for x in row):
            break
        out = mat_add(out, term)
    return out


def Ad(g: LieAlgebra, x: Sequence) -> list:
    """Matrix of ``Ad(exp x) = e^{ad x}``."""
    return exp_nilpotent(g.ad([as_scalar(v) for v in x]))


def coadjoint(g: LieAlgebra, x: Sequence, xi: Sequence) -> list:
    """``Ad*(exp x) xi``."""
    M = Ad(g, [-as_scalar(v) for v in x])
    return mat_vec(transpose(M), [as_scalar(v) for v in xi])


def pairing(xi: Sequence, x: Sequence) -> ScalarExpr:
    total = ZERO
    for a, b in zip(xi, x):
        if a and b:
            total = total + a * b
    return total


# -- isotropy and jump indices ----------------------------------------------------------------


def skew_pairing(g: LieAlgebra, xi: Sequence) -> list:
    """``B_jk = <xi, [X_j, X_k]>``."""
    xi = [as_scalar(v) for v in xi]
    return [[pairing(xi, g.c[j][k]) for k in range(g.dim)] for j in range(g.dim)]


@dataclass
class Isotropy:
    basis: list
    assumptions: Assumptions

    @property
    def dim(self) -> int:
        return len(self.basis)


def isotropy_algebra(g: LieAlgebra, xi: Sequence) -> Isotropy:
    res = mat_kernel(skew_pairing(g, xi), g.dim)
    return Isotropy(res.basis, res.assumptions)


def jump_indices(g: LieAlgebra, xi: Sequence, isotropy: Isotropy | None = None) -> list[int]:
    """1-based ``{j : X_j not in g_{j-1} + g_xi}`` for the basis of ``g``."""
    iso = isotropy or isotropy_algebra(g, xi)
    out = []
    prev = rank(iso.basis) if iso.basis else 0
    vecs = list(iso.basis)
    for j in range(g.dim):
        vecs = vecs + [g.basis(j)]
        r = rank(vecs)
        if r > prev:
            out.append(j + 1)
        prev = r
    return out


# -- orbits ---------------------------------------------------------------------------------


def _tname(j: int) -> str:
    return f"_t{j}"


def _yname(j: int) -> str:
    return f"_y{j}"


@dataclass
class CoadjointOrbit:
    """Orbit of ``xi`` with its jump-coordinate cross-section.

    ``phi[l]`` is the l-th coordinate of the parametrization (MultiPoly in
    t_j, j in jumps); ``cross_section[l]`` expresses y_l (l not a jump index)
    through the jump coordinates; ``inverse[j]`` gives t_j from y.
    """

    algebra: LieAlgebra
    xi: list
    jumps: list
    isotropy: Isotropy
    phi: list
    cross_section: dict
    inverse: dict
    assumptions: Assumptions
    order: str

    @property
    def dim(self) -> int:
        return len(self.jumps)

    @property
    def y_names(self) -> tuple:
        return tuple(f"y{j}" for j in self.jumps)

    @property
    def t_names(self) -> tuple:
        return tuple(f"t{j}" for j in self.jumps)

    def coordinate(self, l: int) -> MultiPoly:
        """y_l (1-based) as a polynomial in the jump coordinates."""
        if l in self.jumps:
            return MultiPoly.var(self.jumps.index(l), self.dim, self.y_names)
        return self.cross_section[l]

    def relation_text(self, l: int) -> str:
        return f"y{l} = {self.cross_section[l]}"

    def relations(self) -> list[str]:
        return [self.relation_text(l) for l in sorted(self.cross_section)]

    def is_flat(self) -> bool:
        return is_flat_orbit(self)

    def params(self) -> set:
        out = set()
        for p in self.cross_section.values():
            for c in p.terms.values():
                out.update(c.params)
        return out


def _split_linear(expr: ScalarExpr, name: str):
    """``expr = c * name + r`` with c, r free of ``name``; ``None`` if not linear."""
    p = MultiPoly.from_scalar(expr, [name])
    if p.total_degree() > 1:
        return None
    return p.coefficient((1,)), p.coefficient((0,))


def _has_internal(x: ScalarExpr) -> bool:
    return any(p.startswith("_") for p in x.params)


def _orbit_attempt(g: LieAlgebra, xi: list, jumps: list, order: str):
    seq = sorted(jumps, reverse=(order == "decreasing"))
    eta = list(xi)
    for j in seq:
        x = [ZERO] * g.dim
        x[j - 1] = ScalarExpr.parameter(_tname(j))
        eta = coadjoint(g, x, eta)
    phi = eta
    assumptions = Assumptions()
    solved: dict[int, ScalarExpr] = {}
    used: set[int] = set()
    progress = True
    while len(solved) < len(jumps) and progress:
        progress = False
        for l in jumps:
            if l in used:
                continue
            expr = phi[l - 1].subs({_tname(j): v for j, v in solved.items()}) if solved else phi[l - 1]
            free = [j for j in jumps if j not in solved and _tname(j) in expr.params]
            if len(free) != 1:
                continue
            j = free[0]
            split = _split_linear(expr, _tname(j))
            if split is None:
                continue
            c, r = split
            if not c or _has_internal(c):
                continue
            assumptions.add(c)
            solved[j] = (ScalarExpr.parameter(_yname(l)) - r) / c
            used.add(l)
            progress = True
            break
    if len(solved) < len(jumps):
        missing = [j for j in jumps if j not in solved]
        raise TriangularityFailure(
            f"no equation is linear with a parameter-only coefficient in t{missing[0]} ({order} order)",
            missing[0],
        )
    if used != set(jumps):
        raise TriangularityFailure(f"jump equations are not matched one-to-one ({order} order)")
    back = {_tname(j): v for j, v in solved.items()}
    ynames = [_yname(j) for j in jumps]
    yvals = {_yname(j): phi[j - 1] for j in jumps}
    cross = {}
    for l in range(1, g.dim + 1):
        val = phi[l - 1].subs(back)
        if l in jumps:
            if val != ScalarExpr.parameter(_yname(l)):
                raise TriangularityFailure(f"back-substitution does not reproduce y{l}", l)
            continue
        try:
            P = MultiPoly.from_scalar(val, ynames)
        except ValueError as exc:
            raise TriangularityFailure(f"y{l} is not polynomial in the jump coordinates", l) from exc
        if any(_has_internal(c) for c in P.terms.values()):
            raise TriangularityFailure(f"y{l} still depends on flow parameters", l)
        # defining identity: substitute the parametrization back in
        if P.to_scalar_with(ynames).subs(yvals) != phi[l - 1]:
            raise TriangularityFailure(f"cross-section identity fails for y{l}", l)
        cross[l] = P.with_names([f"y{j}" for j in jumps])
    tn = [_tname(j) for j in jumps]
    phi_polys = [MultiPoly.from_scalar(v, tn).with_names([f"t{j}" for j in jumps]) for v in phi]
    inverse = {
        j: MultiPoly.from_scalar(v, ynames).with_names([f"y{k}" for k in jumps]) for j, v in solved.items()
    }
    return phi_polys, cross, inverse, assumptions


def orbit_cross_section(g: LieAlgebra, xi: Sequence, order: str = "decreasing") -> CoadjointOrbit:
    """Coadjoint orbit of ``xi`` with polynomial cross-section.

    The basis of ``g`` must be Jordan-Hoelder.  The flows are composed with
    the highest jump index applied first; if the resulting system is not
    triangular the opposite order is tried before giving up.
    """
    if not is_jordan_holder(g, g.full_basis()):
        raise ValueError("the basis of g is not Jordan-Hoelder; use jordan_holder_basis first")
    xi = [as_scalar(v) for v in xi]
    if len(xi) != g.dim:
        raise ValueError("functional arity does not match the algebra")
    iso = isotropy_algebra(g, xi)
    jumps = jump_indices(g, xi, iso)
    orders = [order, "increasing" if order == "decreasing" else "decreasing"]
    last = None
    for o in orders:
        try:
            phi, cross, inverse, assumptions = _orbit_attempt(g, xi, jumps, o)
        except TriangularityFailure as exc:
            last = exc
            continue
        assumptions.extend(iso.assumptions)
        return CoadjointOrbit(g, xi, jumps, iso, phi, cross, inverse, assumptions, o)
    raise last


def is_flat_orbit(orbit: CoadjointOrbit) -> bool:
    return all(p.total_degree() <= 1 for p in orbit.cross_section.values())


# -- parameter sampling ------------------------------------------------------------------------


def generic_values(names: Sequence[str], avoid: Sequence[ScalarExpr] = (), seed: int = 0, tries: int = 50) -> dict:
    """Random small rationals for ``names`` on which every ``avoid`` is nonzero."""
    rng = random.Random(seed)
    for _ in range(tries):
        vals = {n: as_scalar(Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5))) for n in names}
        if all(as_scalar(e).subs(vals) for e in avoid):
            return vals
    raise ValueError("could not find a generic parameter point")


# -- propositions -------------------------------------------------------------------------------


def _same_subspace(U, V) -> bool:
    ru = rank(U) if U else 0
    rv = rank(V) if V else 0
    if ru != rv:
        return False
    return ru == 0 or rank(list(U) + list(V)) == ru


def restricted_isotropy(g: LieAlgebra, sub: Sequence, xi: Sequence) -> list:
    """``{X in sub : <xi, [X, sub]> = 0}`` as vectors of g."""
    sub = [list(v) for v in sub]
    if not sub:
        return []
    xi = [as_scalar(v) for v in xi]
    B = [[pairing(xi, g.bracket(u, v)) for v in sub] for u in sub]
    ker = mat_kernel(transpose(B), len(sub)).basis
    out = []
    for k in ker:
        vec = [ZERO] * g.dim
        for c, u in zip(k, sub):
            if c:
                vec = [a + c * b for a, b in zip(vec, u)]
        out.append(vec)
    return out


@dataclass
class IdealOrbitReport:
    isotropy_matches: bool  # (G0)_{xi0} = G0 ∩ G_xi at the Lie algebra level
    decomposes: bool  # g = g0 + g_xi
    dims: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return self.isotropy_matches and self.decomposes


def prop31_check(g: LieAlgebra, g0: Sequence, xi: Sequence) -> IdealOrbitReport:
    """Restriction to the ideal ``g0`` is an orbit diffeomorphism iff both hold."""
    g0 = [list(v) for v in g0]
    if not g.is_ideal(g0):
        raise NotAnIdeal("g0 is not an ideal of g")
    iso = isotropy_algebra(g, xi).basis
    iso0 = restricted_isotropy(g, g0, xi)
    cap = intersect(g0, iso) if iso else []
    a = _same_subspace(iso0, cap)
    b = rank(g0 + iso) == g.dim if (g0 or iso) else g.dim == 0
    dims = {"g": g.dim, "g0": rank(g0) if g0 else 0, "g_xi": len(iso), "(g0)_xi0": len(iso0), "g0 ∩ g_xi": len(cap)}
    return IdealOrbitReport(a, b, dims)


@dataclass
class RestrictionReport:
    sum_condition: bool  # g = g_xi + h
    dimension_condition: bool
    jump_condition: bool
    jumps: list
    k: int
    restricted_orbit: CoadjointOrbit | None = None
    jh: object = None

    @property
    def agree(self) -> bool:
        return self.sum_condition == self.dimension_condition == self.jump_condition

    @property
    def verdict(self) -> bool:
        return self.agree and self.sum_condition


def prop32_check(
    g: LieAlgebra, h: Sequence, xi: Sequence, jh: Sequence | None = None, restrict: bool = True
) -> RestrictionReport:
    """Evaluate the three equivalent restriction conditions for the ideal ``h``."""
    h = span_basis([list(v) for v in h], g.dim) if h else []
    if h and not g.is_ideal(h):
        raise NotAnIdeal("h is not an ideal of g")
    k = len(h)
    if jh is None:
        jhb = jordan_holder_basis(g, through=h)
        vectors = jhb.vectors
        ga = jhb.algebra
    else:
        vectors = [[as_scalar(x) for x in v] for v in jh]
        if not is_jordan_holder(g, vectors):
            raise SequenceMismatch("the supplied sequence is not Jordan-Hoelder")
        ga = g.change_basis(vectors)
    if k and not _same_subspace(vectors[:k], h):
        raise SequenceMismatch(f"the sequence does not pass through h at index {k}")
    xi = [as_scalar(v) for v in xi]
    iso = isotropy_algebra(g, xi).basis
    c3 = (rank(iso + h) if (iso or h) else 0) == g.dim
    cap = intersect(h, iso) if (h and iso) else []
    c4 = k - len(cap) == g.dim - len(iso)
    xi_new = [pairing(xi, v) for v in vectors]
    jumps = jump_indices(ga, xi_new)
    c5 = all(j <= k for j in jumps)
    rep = RestrictionReport(c3, c4, c5, jumps, k, jh=vectors)
    if restrict and rep.verdict and k:
        hsub = ga.subalgebra([ga.basis(i) for i in range(k)], ga.names[:k])
        rep.restricted_orbit = orbit_cross_section(hsub, xi_new[:k])
    return rep
