"""Lie algebras from structure constants and the constructions built on them.

Basis indices are 0-based internally; error messages and reports use the
1-based numbering of the basis names X1, X2, ...
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    AntisymmetryViolation,
    CentersNotShared,
    CocycleViolation,
    Degenerate,
    JacobiViolation,
    NotDerivation,
    NotHomomorphism,
    NotNilpotent,
    NotPolarization,
)
from .exact.linalg import (
    Assumptions,
    coordinates_in,
    det,
    identity,
    in_span,
    is_zero_matrix,
    mat_add,
    mat_kernel,
    mat_mul,
    mat_scale,
    mat_vec,
    rank,
    span_basis,
    transpose,
)
from .exact.scalar import ONE, ZERO, ScalarExpr, as_scalar

Vector = list


def _zero_vec(m: int) -> Vector:
    return [ZERO] * m


def _unit(m: int, j: int) -> Vector:
    v = [ZERO] * m
    v[j] = ONE
    return v


def _vadd(u, v):
    return [x + y for x, y in zip(u, v)]


def _vscale(u, c):
    c = as_scalar(c)
    return [x * c for x in u]


def _is_zero(v) -> bool:
    return not any(v)


class LieAlgebra:
    """Finite-dimensional Lie algebra with structure constants over ScalarExpr.

    ``c[j][k]`` is the coordinate vector of ``[X_j, X_k]``.  Construction does
    not validate; use :func:`validate_lie`.
    """

    def __init__(self, names: Sequence[str], brackets: list):
        self.names = tuple(names)
        self.dim = len(self.names)
        self.c = brackets
        self._lcs = None

    @classmethod
    def from_table(cls, names: Sequence[str], table: dict) -> "LieAlgebra":
        """Build from ``{(j, k): vector}``; missing pairs are zero.

        Both orders may be given as long as they are antisymmetric.
        """
        m = len(names)
        c = [[_zero_vec(m) for _ in range(m)] for _ in range(m)]
        seen = {}
        for (j, k), vec in table.items():
            vec = [as_scalar(x) for x in vec]
            if len(vec) != m:
                raise ValueError(f"bracket vector for ({j},{k}) has wrong length")
            if j == k:
                if not _is_zero(vec):
                    raise AntisymmetryViolation(j + 1, k + 1)
                continue
            if (k, j) in seen:
                if [-x for x in seen[(k, j)]] != vec:
                    raise AntisymmetryViolation(j + 1, k + 1)
            seen[(j, k)] = vec
            c[j][k] = vec
            c[k][j] = [-x for x in vec]
        return cls(names, c)

    @classmethod
    def abelian(cls, m: int, names: Sequence[str] | None = None) -> "LieAlgebra":
        names = names or [f"X{j + 1}" for j in range(m)]
        return cls(names, [[_zero_vec(m) for _ in range(m)] for _ in range(m)])

    # -- basic operations ---------------------------------------------------------
    def basis(self, j: int) -> Vector:
        return _unit(self.dim, j)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def bracket(self, u: Sequence, v: Sequence) -> Vector:
        m = self.dim
        out = _zero_vec(m)
        for j in range(m):
            if not u[j]:
                continue
            for k in range(m):
                if not v[k] or j == k:
                    continue
                ck = self.c[j][k]
                f = u[j] * v[k]
                for l in range(m):
                    if ck[l]:
                        out[l] = out[l] + f * ck[l]
        return out

    def ad(self, u: Sequence) -> list:
        """Matrix of ``ad u``: column k holds ``[u, X_k]``."""
        cols = [self.bracket(u, self.basis(k)) for k in range(self.dim)]
        return transpose(cols) if cols else []

    def structure_constant(self, j: int, k: int, l: int) -> ScalarExpr:
        return self.c[j][k][l]

    def nonzero_brackets(self) -> list:
        """``(j, k, vector)`` with ``j > k``, highest first (printed-table order)."""
        out = []
        for j in reversed(range(self.dim)):
            for k in reversed(range(j)):
                if not _is_zero(self.c[j][k]):
                    out.append((j, k, self.c[j][k]))
        return out

    def params(self) -> set:
        out = set()
        for row in self.c:
            for vec in row:
                for x in vec:
                    out.update(x.params)
        return out

    def subs_params(self, values: dict) -> "LieAlgebra":
        c = [[[x.subs(values) for x in vec] for vec in row] for row in self.c]
        return LieAlgebra(self.names, c)

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self.c == other.c

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, names={self.names})"

    def render_vector(self, v: Sequence) -> str:
        from .exact.poly import render_terms

        return render_terms([(x, n) for x, n in zip(v, self.names) if x])

    def to_dsl(self) -> str:
        lines = [f"dim {self.dim}", "basis " + " ".join(self.names)]
        ps = sorted(self.params())
        if ps:
            lines.append("param " + " ".join(ps))
        for j, k, vec in self.nonzero_brackets():
            lines.append(f"[{self.names[j]},{self.names[k]}] = {self.render_vector(vec)}")
        return "\n".join(lines) + "\n"

    # -- subspaces -------------------------------------------------------------------
    def bracket_span(self, U: Sequence, V: Sequence) -> list:
        vecs = [self.bracket(u, v) for u in U for v in V]
        vecs = [w for w in vecs if not _is_zero(w)]
        return span_basis(vecs, self.dim) if vecs else []

    def full_basis(self) -> list:
        return [self.basis(j) for j in range(self.dim)]

    def lower_central_series(self) -> list:
        """Bases of C^1 = g, C^2 = [g, g], ... ending with the first repeat or 0."""
        if self._lcs is None:
            series = [self.full_basis()]
            while True:
                nxt = self.bracket_span(self.full_basis(), series[-1])
                if len(nxt) == len(series[-1]):
                    break
                series.append(nxt)
                if not nxt:
                    break
            self._lcs = series
        return self._lcs

    def is_nilpotent(self) -> bool:
        return not self.lower_central_series()[-1]

    @property
    def step(self) -> int:
        lcs = self.lower_central_series()
        if lcs[-1]:
            raise NotNilpotent("lower central series stabilizes above zero")
        return len(lcs) - 1

    def center(self) -> tuple[list, Assumptions]:
        m = self.dim
        rows = []
        for k in range(m):
            # [x, X_k] = sum_j x_j c[j][k]; each output coordinate gives a row
            for l in range(m):
                rows.append([self.c[j][k][l] for j in range(m)])
        res = mat_kernel(rows, m)
        return res.basis, res.assumptions

    def is_subalgebra(self, U: Sequence) -> bool:
        return all(in_span(U, self.bracket(u, v)) for u in U for v in U)

    def is_ideal(self, U: Sequence) -> bool:
        return all(in_span(U, self.bracket(x, u)) for x in self.full_basis() for u in U)

    def change_basis(self, vectors: Sequence, names: Sequence[str] | None = None) -> "LieAlgebra":
        """Algebra expressed in a new basis (``vectors`` in current coordinates)."""
        vectors = [[as_scalar(x) for x in v] for v in vectors]
        m = len(vectors)
        if m != self.dim or rank(vectors) != m:
            raise ValueError("change_basis needs a basis")
        return self._restrict(vectors, names)

    def subalgebra(self, vectors: Sequence, names: Sequence[str] | None = None) -> "LieAlgebra":
        vectors = [list(v) for v in vectors]
        if rank(vectors) != len(vectors) if vectors else False:
            raise ValueError("subalgebra basis is not independent")
        if not self.is_subalgebra(vectors):
            raise ValueError("subspace is not closed under the bracket")
        return self._restrict(vectors, names)

    def _restrict(self, vectors, names):
        m = len(vectors)
        names = names or [self._vector_name(v, i) for i, v in enumerate(vectors)]
        c = [[_zero_vec(m) for _ in range(m)] for _ in range(m)]
        for j in range(m):
            for k in range(j + 1, m):
                w = self.bracket(vectors[j], vectors[k])
                if _is_zero(w):
                    continue
                coords = coordinates_in(vectors, w)
                if coords is None:
                    raise ValueError("bracket leaves the span")
                c[j][k] = coords
                c[k][j] = [-x for x in coords]
        return LieAlgebra(names, c)

    def _vector_name(self, v, i) -> str:
        nz = [j for j, x in enumerate(v) if x]
        if len(nz) == 1 and v[nz[0]] == 1:
            return self.names[nz[0]]
        return f"W{i + 1}"


# -- validation ------------------------------------------------------------------------


def jacobi_residual(g: LieAlgebra, j: int, k: int, l: int) -> Vector:
    X, Y, Z = g.basis(j), g.basis(k), g.basis(l)
    r = _vadd(g.bracket(X, g.bracket(Y, Z)), g.bracket(Y, g.bracket(Z, X)))
    return _vadd(r, g.bracket(Z, g.bracket(X, Y)))


def validate_lie(spec, names: Sequence[str] | None = None, require_nilpotent: bool = True) -> LieAlgebra:
    """Validate antisymmetry, Jacobi and nilpotency; return the algebra.

    ``spec`` is a :class:`LieAlgebra` or a ``{(j, k): vector}`` table.
    """
    if isinstance(spec, LieAlgebra):
        g = spec
        for j in range(g.dim):
            if not _is_zero(g.c[j][j]):
                raise AntisymmetryViolation(j + 1, j + 1)
            for k in range(j + 1, g.dim):
                if [-x for x in g.c[k][j]] != g.c[j][k]:
                    raise AntisymmetryViolation(j + 1, k + 1)
    else:
        if names is None:
            raise ValueError("names are required with a bracket table")
        g = LieAlgebra.from_table(names, spec)
    m = g.dim
    for j in range(m):
        for k in range(j + 1, m):
            for l in range(k + 1, m):
                r = jacobi_residual(g, j, k, l)
                if not _is_zero(r):
                    raise JacobiViolation(j + 1, k + 1, l + 1, r)
    if require_nilpotent and not g.is_nilpotent():
        lcs = g.lower_central_series()
        raise NotNilpotent(
            f"lower central series stabilizes at dimension {len(lcs[-1])} after {len(lcs) - 1} steps"
        )
    return g


# -- Jordan-Hoelder bases -----------------------------------------------------------------


def is_jordan_holder(g: LieAlgebra, basis: Sequence) -> bool:
    """Check ``[g, g_j] ⊆ g_{j-1}`` for the flag spanned by ``basis``."""
    basis = [list(b) for b in basis]
    if len(basis) != g.dim or rank(basis) != g.dim:
        return False
    for j, b in enumerate(basis):
        prev = basis[:j]
        for x in g.full_basis():
            w = g.bracket(x, b)
            if not _is_zero(w) and not in_span(prev, w):
                return False
    return True


@dataclass
class JHBasis:
    """Jordan-Hoelder basis with the algebra re-expressed in it."""

    vectors: list
    names: tuple
    algebra: LieAlgebra
    changed: bool

    def flag(self, j: int) -> list:
        return self.vectors[:j]


def _resolve_preferred(g: LieAlgebra, preferred) -> list:
    if preferred is None:
        return g.full_basis()
    out = []
    for p in preferred:
        if isinstance(p, str):
            out.append(g.basis(g.index(p)))
        elif isinstance(p, int):
            out.append(g.basis(p))
        else:
            out.append([as_scalar(x) for x in p])
    return out


def jordan_holder_basis(g: LieAlgebra, preferred=None, through: Sequence | None = None) -> JHBasis:
    """Jordan-Hoelder basis, keeping ``preferred`` when it already qualifies.

    ``preferred`` may list names, 0-based indices or coordinate vectors.  With
    ``through`` (an ideal), the flag passes through it at ``k = dim``.
    """
    pref = _resolve_preferred(g, preferred)
    h = [list(v) for v in through] if through is not None else None
    if h is not None and not g.is_ideal(h):
        from .errors import NotAnIdeal

        raise NotAnIdeal("the subspace to pass through is not an ideal")
    if len(pref) == g.dim and is_jordan_holder(g, pref):
        if h is None or rank(pref[: len(span_basis(h, g.dim))] + h) == len(span_basis(h, g.dim)):
            names = tuple(g._vector_name(v, i) for i, v in enumerate(pref))
            return JHBasis(pref, names, g.change_basis(pref, names), False)
    lcs = g.lower_central_series()
    if lcs[-1]:
        raise NotNilpotent("Jordan-Hoelder bases need a nilpotent algebra")
    # chain of ideals from 0 up to g, each step central modulo the previous
    chain: list[list] = []
    if h is None:
        chain = [list(c) for c in reversed(lcs)]
    else:
        from .exact.linalg import intersect

        hb = span_basis(h, g.dim)
        for c in reversed(lcs):
            chain.append(intersect(hb, c) if c else [])
        for c in reversed(lcs):
            chain.append(span_basis(hb + list(c), g.dim) if c else hb)
    fill = g.full_basis()
    vectors: list = []
    for layer in chain:
        for cand in pref + fill + [list(v) for v in layer]:
            if len(vectors) >= len(layer):
                break
            if in_span(layer, cand) and not in_span(vectors, cand):
                vectors.append(cand)
    if len(vectors) != g.dim or not is_jordan_holder(g, vectors):
        raise AssertionError("Jordan-Hoelder refinement failed")
    names = tuple(g._vector_name(v, i) for i, v in enumerate(vectors))
    return JHBasis(vectors, names, g.change_basis(vectors, names), True)


# -- symplectic forms and central extensions ------------------------------------------------


@dataclass
class SymplecticForm:
    """``omega(x, y) = x^T J y``."""

    J: list

    def __post_init__(self):
        self.J = [[as_scalar(x) for x in row] for row in self.J]

    @property
    def dim(self) -> int:
        return len(self.J)

    def __call__(self, x: Sequence, y: Sequence) -> ScalarExpr:
        return sum((xi * v for xi, v in zip(x, mat_vec(self.J, y)) if xi), ZERO)

    def is_skew(self) -> bool:
        n = self.dim
        return all(self.J[i][j] == -self.J[j][i] for i in range(n) for j in range(n))

    def determinant(self) -> ScalarExpr:
        return det(self.J)

    def cocycle_witness(self, g0: LieAlgebra):
        """First basis triple violating the 2-cocycle identity, or ``None``."""
        m = g0.dim
        B = g0.full_basis()
        for x in range(m):
            for y in range(x + 1, m):
                for z in range(y + 1, m):
                    r = (
                        self(B[x], g0.bracket(B[y], B[z]))
                        + self(B[y], g0.bracket(B[z], B[x]))
                        + self(B[z], g0.bracket(B[x], B[y]))
                    )
                    if r:
                        return (x + 1, y + 1, z + 1)
        return None

    def validate(self, g0: LieAlgebra) -> "SymplecticForm":
        if self.dim != g0.dim:
            raise ValueError("form and algebra dimensions differ")
        if not self.is_skew():
            raise Degenerate("form is not skew-symmetric")
        if not self.determinant():
            raise Degenerate("form is degenerate")
        w = self.cocycle_witness(g0)
        if w is not None:
            raise CocycleViolation(*w)
        return self


def central_extension(g0: LieAlgebra, omega: SymplecticForm, center_name: str = "Z") -> LieAlgebra:
    """``R +_omega g0`` with basis (center, g0 basis)."""
    omega.validate(g0)
    m = g0.dim + 1
    c = [[_zero_vec(m) for _ in range(m)] for _ in range(m)]
    B = g0.full_basis()
    for j in range(g0.dim):
        for k in range(g0.dim):
            if j == k:
                continue
            c[j + 1][k + 1] = [omega(B[j], B[k])] + list(g0.c[j][k])
    return validate_lie(LieAlgebra((center_name,) + g0.names, c))


# -- derivations and semidirect products -------------------------------------------------------


def derivation_witness(D: list, g: LieAlgebra):
    """First basis pair where ``D[x,y] != [Dx,y] + [x,Dy]``, or ``None``."""
    m = g.dim
    cols = [[D[i][j] for i in range(m)] for j in range(m)]
    for j in range(m):
        for k in range(j + 1, m):
            lhs = mat_vec(D, g.c[j][k])
            rhs = _vadd(g.bracket(cols[j], g.basis(k)), g.bracket(g.basis(j), cols[k]))
            if lhs != rhs:
                return (j + 1, k + 1)
    return None


def is_derivation(D: list, g: LieAlgebra) -> bool:
    return derivation_witness(D, g) is None


def _commutator(A, B):
    return mat_add(mat_mul(A, B), mat_scale(mat_mul(B, A), -1))


def semidirect_product(
    s: LieAlgebra, g: LieAlgebra, action: Sequence, names: Sequence[str] | None = None
) -> LieAlgebra:
    """``s ⋉ g`` with basis (g basis, s basis); ``action[i]`` is the matrix of s_i."""
    if len(action) != s.dim:
        raise ValueError("need one derivation per basis element of s")
    A = [[[as_scalar(x) for x in row] for row in M] for M in action]
    for i, M in enumerate(A):
        w = derivation_witness(M, g)
        if w is not None:
            raise NotDerivation(f"action of {s.names[i]} fails on basis pair {w}")
    for i in range(s.dim):
        for j in range(i + 1, s.dim):
            lhs = _commutator(A[i], A[j])
            rhs = [[ZERO] * g.dim for _ in range(g.dim)]
            for k, coef in enumerate(s.c[i][j]):
                if coef:
                    rhs = mat_add(rhs, mat_scale(A[k], coef))
            if lhs != rhs:
                raise NotHomomorphism(f"[{s.names[i]},{s.names[j]}] is not preserved")
    n, r = g.dim, s.dim
    m = n + r
    c = [[_zero_vec(m) for _ in range(m)] for _ in range(m)]
    for j in range(n):
        for k in range(n):
            c[j][k] = list(g.c[j][k]) + [ZERO] * r
    for i in range(r):
        for j in range(r):
            c[n + i][n + j] = [ZERO] * n + list(s.c[i][j])
        for k in range(n):
            img = [A[i][l][k] for l in range(n)]
            c[n + i][k] = img + [ZERO] * r
            c[k][n + i] = [-x for x in img] + [ZERO] * r
    names = names or (g.names + s.names)
    return validate_lie(LieAlgebra(names, c))


def direct_sum(g1: LieAlgebra, g2: LieAlgebra, names=None) -> LieAlgebra:
    zero = [[ZERO] * g1.dim for _ in range(g1.dim)]
    return semidirect_product(g2, g1, [zero] * g2.dim, names or _disjoint_names(g1.names, g2.names))


def _disjoint_names(n1, n2):
    out = list(n1)
    for n in n2:
        out.append(n if n not in out else n + "_2")
    return tuple(out)


def quotient_by_central(g: LieAlgebra, z: Sequence, drop: int, names=None) -> LieAlgebra:
    """``g / R z`` for central ``z``; basis = images of all X_k with k != drop."""
    if not g.bracket_span(g.full_basis(), [list(z)]) == []:
        raise ValueError("quotient vector is not central")
    if not z[drop]:
        raise ValueError("dropped coordinate must be nonzero in z")
    keep = [k for k in range(g.dim) if k != drop]
    m = len(keep)
    frame = [g.basis(k) for k in keep] + [list(z)]
    c = [[_zero_vec(m) for _ in range(m)] for _ in range(m)]
    for a, j in enumerate(keep):
        for b, k in enumerate(keep):
            if a == b:
                continue
            coords = coordinates_in(frame, g.c[j][k])
            c[a][b] = coords[:m]
    names = names or tuple(g.names[k] for k in keep)
    return LieAlgebra(names, c)


def _one_dim_center(g: LieAlgebra, label: str) -> Vector:
    z, _ = g.center()
    if len(z) != 1:
        raise CentersNotShared(f"{label} has a center of dimension {len(z)}, not 1")
    return z[0]


def reduced_semidirect_product(
    k1: LieAlgebra, k2: LieAlgebra, action: Sequence | None = None, names=None
) -> LieAlgebra:
    """Identify the 1-dimensional centers of ``k1`` and ``k2`` inside ``k1 ⋊ k2``.

    ``action[i]`` is a derivation of ``k1`` for the i-th basis element of ``k2``;
    it must annihilate the center of ``k1`` and the center of ``k2`` must act
    trivially.  With no action this is the reduced direct product.
    """
    z1 = _one_dim_center(k1, "first factor")
    z2 = _one_dim_center(k2, "second factor")
    if action is None:
        action = [[[ZERO] * k1.dim for _ in range(k1.dim)] for _ in range(k2.dim)]
    big = semidirect_product(k2, k1, action, _disjoint_names(k1.names, k2.names))
    w = list(z1) + [-x for x in z2]
    if big.bracket_span(big.full_basis(), [w]):
        raise CentersNotShared("the action does not fix the shared center")
    # drop the last coordinate of k2 on which z2 is nonzero
    drop = max(k1.dim + i for i, x in enumerate(z2) if x)
    q = quotient_by_central(big, w, drop)
    if names:
        q = LieAlgebra(names, q.c)
    return validate_lie(q)


def reduced_direct_product(k1: LieAlgebra, k2: LieAlgebra, names=None) -> LieAlgebra:
    return reduced_semidirect_product(k1, k2, None, names)


# -- symplectic derivations, S_p -------------------------------------------------------------


def nilpotency_index(D: list, cap: int | None = None) -> int | None:
    """Smallest k with ``D^k = 0`` (``None`` if none up to ``cap``)."""
    n = len(D)
    cap = cap or n + 1
    P = identity(n)
    for k in range(1, cap + 1):
        P = mat_mul(P, D)
        if is_zero_matrix(P):
            return k
    return None


@dataclass
class SymplecticDerivationReport:
    derivation: bool
    derivation_witness: tuple | None
    symplectic: bool
    symplectic_residual: list
    nilpotent: bool
    nilpotency_index: int | None

    @property
    def ok(self) -> bool:
        return self.derivation and self.symplectic and self.nilpotent


def symplectic_residual(D: list, omega: SymplecticForm) -> list:
    """``J D + D^T J``."""
    return mat_add(mat_mul(omega.J, D), mat_mul(transpose(D), omega.J))


def check_symplectic_derivation(D: list, omega: SymplecticForm, g0: LieAlgebra) -> SymplecticDerivationReport:
    D = [[as_scalar(x) for x in row] for row in D]
    if len(D) != g0.dim or any(len(r) != g0.dim for r in D):
        raise ValueError("derivation matrix has the wrong size")
    w = derivation_witness(D, g0)
    res = symplectic_residual(D, omega)
    k = nilpotency_index(D)
    return SymplecticDerivationReport(w is None, w, is_zero_matrix(res), res, k is not None, k)


def mat_exp_nilpotent(D: list) -> list:
    n = len(D)
    out = identity(n)
    term = identity(n)
    for k in range(1, n + 1):
        term = mat_scale(mat_mul(term, D), Fraction(1, k))
        if is_zero_matrix(term):
            break
        out = mat_add(out, term)
    return out


@dataclass
class SpGroup:
    """Lie algebra of S_p plus the sampled group-level checks."""

    derivations: list
    samples: list = field(default_factory=list)
    square_zero: bool = True
    automorphisms: bool = True

    @property
    def dim(self) -> int:
        return len(self.derivations)


def is_polarization(g0: LieAlgebra, omega: SymplecticForm, p: Sequence) -> str | None:
    """Reason why ``p`` is not a polarization, or ``None``."""
    p = [list(v) for v in p]
    if 2 * rank(p) != g0.dim:
        return "dimension is not half of the algebra dimension"
    if not g0.is_subalgebra(p):
        return "not a subalgebra"
    for u in p:
        for v in p:
            if omega(u, v):
                return "omega does not vanish on p x p"
    return None


def build_S_p(g0: LieAlgebra, omega: SymplecticForm, p: Sequence, samples: int = 3, seed: int = 0) -> SpGroup:
    """Symplectic derivations vanishing on the polarization ``p``."""
    why = is_polarization(g0, omega, p)
    if why:
        raise NotPolarization(why)
    m = g0.dim
    nvar = m * m

    def unknown(i, j):
        return i * m + j

    rows = []
    # derivation identity, one row per output coordinate of each basis pair
    for j in range(m):
        for k in range(j + 1, m):
            for l in range(m):
                row = [ZERO] * nvar
                for r in range(m):
                    # (D c[j][k])_l
                    if g0.c[j][k][r]:
                        row[unknown(l, r)] += g0.c[j][k][r]
                    # -[D e_j, e_k]_l - [e_j, D e_k]_l
                    if g0.c[r][k][l]:
                        row[unknown(r, j)] -= g0.c[r][k][l]
                    if g0.c[j][r][l]:
                        row[unknown(r, k)] -= g0.c[j][r][l]
                if any(row):
                    rows.append(row)
    # J D + D^T J = 0
    J = omega.J
    for a in range(m):
        for b in range(m):
            row = [ZERO] * nvar
            for r in range(m):
                if J[a][r]:
                    row[unknown(r, b)] += J[a][r]
                if J[r][b]:
                    row[unknown(r, a)] += J[r][b]
            if any(row):
                rows.append(row)
    # D p = 0
    for v in p:
        for i in range(m):
            row = [ZERO] * nvar
            for j in range(m):
                if v[j]:
                    row[unknown(i, j)] = as_scalar(v[j])
            if any(row):
                rows.append(row)
    sol = mat_kernel(rows, nvar).basis
    ders = [[[vec[unknown(i, j)] for j in range(m)] for i in range(m)] for vec in sol]
    out = SpGroup(ders)
    rng = random.Random(seed)
    for _ in range(samples):
        D = [[ZERO] * m for _ in range(m)]
        for M in ders:
            D = mat_add(D, mat_scale(M, Fraction(rng.randint(-5, 5), rng.randint(1, 4))))
        alpha = mat_exp_nilpotent(D)
        shifted = mat_add(alpha, mat_scale(identity(m), -1))
        sq = is_zero_matrix(mat_mul(shifted, shifted))
        sympl = mat_mul(mat_mul(transpose(alpha), J), alpha) == J
        auto = all(
            mat_vec(alpha, g0.c[j][k])
            == g0.bracket([alpha[i][j] for i in range(m)], [alpha[i][k] for i in range(m)])
            for j in range(m)
            for k in range(j + 1, m)
        )
        fixes = all(mat_vec(alpha, v) == [as_scalar(x) for x in v] for v in p)
        out.samples.append({"square_zero": sq, "symplectic": sympl, "automorphism": auto, "fixes_p": fixes})
        out.square_zero &= sq
        out.automorphisms &= sympl and auto and fixes
    return out
