"""Exact linear algebra over the parametric field Q(i)(params).

Matrices are lists of rows of ScalarExpr.  Elimination divides by pivots;
when a pivot depends on parameters it is reported as a nonzero assumption,
so every result is valid on the Zariski-open set where those assumptions hold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .scalar import I, ONE, ZERO, ScalarExpr, as_scalar

__all__ = [
    "Matrix",
    "Assumptions",
    "RowReduction",
    "rref",
    "mat_kernel",
    "rank",
    "solve",
    "span_basis",
    "in_span",
    "coordinates_in",
    "intersect",
    "complement_indices",
    "mat_mul",
    "mat_vec",
    "transpose",
    "identity",
    "zeros",
    "mat_add",
    "mat_scale",
    "is_zero_matrix",
    "det",
    "nonzero_condition",
    "to_matrix",
]

Matrix = list


@dataclass
class Assumptions:
    """Collected ``expr != 0`` conditions, kept canonical and deduplicated."""

    items: list = field(default_factory=list)

    def add(self, x: ScalarExpr) -> None:
        cond = nonzero_condition(x)
        if cond is not None and cond not in self.items:
            self.items.append(cond)

    def extend(self, other: "Assumptions | Sequence") -> None:
        for x in getattr(other, "items", other):
            self.add(x)

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def render(self) -> list[str]:
        return [f"{x} != 0" for x in self.items]


def nonzero_condition(x: ScalarExpr) -> ScalarExpr | None:
    """Canonical numerator whose nonvanishing is equivalent to ``x != 0``.

    Returns ``None`` for parameter-free nonzero values.
    """
    x = as_scalar(x)
    if x.is_constant():
        if not x:
            raise ZeroDivisionError("pivot is identically zero")
        return None
    n = x.numerator()
    c, atom = n._num_terms()[-1]
    lead = as_scalar(c) * (I if atom == "i" or atom.startswith("i*") else ONE)
    n = n / lead
    # monomials such as a^2*b only need each factor nonzero
    terms = n._num_terms()
    if len(terms) == 1:
        return _squarefree_monomial(n)
    return n


def _squarefree_monomial(n: ScalarExpr) -> ScalarExpr:
    out = ONE
    for p in n.params:
        out = out * ScalarExpr.parameter(p)
    return out


def to_matrix(rows) -> Matrix:
    return [[as_scalar(x) for x in row] for row in rows]


def zeros(m: int, n: int) -> Matrix:
    return [[ZERO] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def transpose(A: Matrix) -> Matrix:
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    out = []
    for row in A:
        new = []
        for col in Bt:
            s = ZERO
            for x, y in zip(row, col):
                if x and y:
                    s = s + x * y
            new.append(s)
        out.append(new)
    return out


def mat_vec(A: Matrix, v: Sequence) -> list:
    out = []
    for row in A:
        s = ZERO
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(A, B)]


def mat_scale(A: Matrix, c) -> Matrix:
    c = as_scalar(c)
    return [[x * c for x in r] for r in A]


def is_zero_matrix(A: Matrix) -> bool:
    return all(not x for row in A for x in row)


def _pivot_score(x: ScalarExpr):
    return (0 if x.is_constant() else 1, x.nterms(), x.degree())


@dataclass
class RowReduction:
    rows: Matrix
    pivots: list
    assumptions: Assumptions


def rref(A: Matrix, ncols: int | None = None) -> RowReduction:
    """Reduced row echelon form with pivot preference for constants."""
    R = [list(r) for r in A]
    m = len(R)
    n = ncols if ncols is not None else (len(R[0]) if R else 0)
    pivots: list[int] = []
    assumptions = Assumptions()
    r = 0
    for col in range(n):
        if r >= m:
            break
        cands = [i for i in range(r, m) if R[i][col]]
        if not cands:
            continue
        best = min(cands, key=lambda i: _pivot_score(R[i][col]))
        R[r], R[best] = R[best], R[r]
        piv = R[r][col]
        if not piv.is_constant():
            assumptions.add(piv)
        if not piv.is_one():
            inv = piv.inverse()
            R[r] = [x * inv if x else x for x in R[r]]
        for i in range(m):
            if i != r and R[i][col]:
                f = R[i][col]
                R[i] = [x - f * y if y else x for x, y in zip(R[i], R[r])]
        pivots.append(col)
        r += 1
    return RowReduction(R[:r], pivots, assumptions)


@dataclass
class KernelResult:
    basis: list
    assumptions: Assumptions


def mat_kernel(A: Matrix, ncols: int | None = None) -> KernelResult:
    """Basis of ``{v : A v = 0}``; one vector per free column."""
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    red = rref(A, n)
    free = [j for j in range(n) if j not in red.pivots]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for row, pc in zip(red.rows, red.pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return KernelResult(basis, red.assumptions)


def rank(A: Matrix) -> int:
    return len(rref(A).pivots)


def solve(A: Matrix, b: Sequence, assumptions: Assumptions | None = None):
    """One solution of ``A x = b`` or ``None`` when inconsistent."""
    n = len(A[0]) if A else 0
    aug = [list(r) + [as_scalar(x)] for r, x in zip(A, b)]
    red = rref(aug, n + 1)
    if assumptions is not None:
        assumptions.extend(red.assumptions)
    if n in red.pivots:
        return None
    x = [ZERO] * n
    for row, pc in zip(red.rows, red.pivots):
        x[pc] = row[n]
    return x


def span_basis(vectors: Sequence[Sequence], dim: int | None = None) -> list:
    """RREF basis of the span (rows)."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    return rref(vectors, dim or len(vectors[0])).rows


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    if not any(v):
        return True
    if not vectors:
        return False
    return rank([list(u) for u in vectors] + [list(v)]) == rank([list(u) for u in vectors])


def coordinates_in(vectors: Sequence[Sequence], v: Sequence):
    """Coefficients c with ``sum c_k vectors[k] = v``; ``None`` if outside."""
    if not vectors:
        return [] if not any(v) else None
    return solve(transpose([list(u) for u in vectors]), v)


def intersect(U: Sequence[Sequence], V: Sequence[Sequence]) -> list:
    """Basis of span(U) ∩ span(V)."""
    if not U or not V:
        return []
    M = transpose([list(u) for u in U] + [[-x for x in w] for w in V])
    ker = mat_kernel(M, len(U) + len(V)).basis
    n = len(U[0])
    out = []
    for k in ker:
        vec = [ZERO] * n
        for c, u in zip(k[: len(U)], U):
            if c:
                vec = [x + c * y for x, y in zip(vec, u)]
        out.append(vec)
    return span_basis(out, n) if out else []


def complement_indices(vectors: Sequence[Sequence], dim: int) -> list[int]:
    """Standard basis indices completing ``vectors`` to a basis."""
    rows = [list(v) for v in vectors]
    out = []
    r = rank(rows) if rows else 0
    for j in range(dim):
        e = [ONE if k == j else ZERO for k in range(dim)]
        if rank(rows + [e]) > r:
            rows.append(e)
            out.append(j)
            r += 1
    return out


def det(A: Matrix) -> ScalarExpr:
    """Determinant by fraction-field elimination."""
    R = [list(r) for r in A]
    n = len(R)
    d = ONE
    for col in range(n):
        cands = [i for i in range(col, n) if R[i][col]]
        if not cands:
            return ZERO
        best = min(cands, key=lambda i: _pivot_score(R[i][col]))
        if best != col:
            R[col], R[best] = R[best], R[col]
            d = -d
        piv = R[col][col]
        d = d * piv
        inv = piv.inverse()
        for i in range(col + 1, n):
            if R[i][col]:
                f = R[i][col] * inv
                R[i] = [x - f * y for x, y in zip(R[i], R[col])]
    return d
