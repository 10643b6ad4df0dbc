"""Mechanical checks of the boundedness-theorem hypotheses and of the 3-step decomposition."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import OrbitkitError, PreconditionFailed
from .exact.linalg import det, intersect, is_zero_matrix, mat_add, mat_mul, mat_scale, rank, solve, span_basis
from .exact.scalar import ZERO, as_scalar
from .lie import (
    LieAlgebra,
    SymplecticForm,
    central_extension,
    check_symplectic_derivation,
    reduced_direct_product,
    semidirect_product,
)
from .orbits import isotropy_algebra, orbit_cross_section, pairing, prop32_check


@dataclass
class Item:
    name: str
    ok: bool
    witness: str = ""

    def as_dict(self) -> dict:
        d = {"name": self.name, "result": "pass" if self.ok else "fail"}
        if self.witness:
            d["witness"] = self.witness
        return d


@dataclass
class CheckReport:
    title: str
    items: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, name: str, ok: bool, witness: str = "", keep: bool = False) -> bool:
        # witnesses explain failures; ``keep`` retains informative ones on success
        self.items.append(Item(name, bool(ok), witness if (keep or not ok) else ""))
        return bool(ok)

    @property
    def verdict(self) -> bool:
        return all(i.ok for i in self.items)

    def item(self, name: str) -> Item:
        for i in self.items:
            if i.name == name:
                return i
        raise KeyError(name)

    def failed(self) -> list:
        return [i.name for i in self.items if not i.ok]

    def as_dict(self) -> dict:
        out = {"check": self.title, "verdict": "PASS" if self.verdict else "FAIL"}
        if self.info:
            out["info"] = dict(self.info)
        out["items"] = [i.as_dict() for i in self.items]
        return out


# -- main theorem -----------------------------------------------------------------------------


@dataclass
class Theorem42Input:
    """Data ``(g0, omega, s, xi~)``; the big algebra has basis (Z, g0 basis, s basis)."""

    g0: LieAlgebra
    omega: SymplecticForm
    derivations: list
    xi: list
    center_name: str = "Z"
    s_names: list | None = None

    def __post_init__(self):
        self.derivations = [[[as_scalar(x) for x in row] for row in D] for D in self.derivations]
        self.xi = [as_scalar(x) for x in self.xi]
        m = self.g0.dim
        for D in self.derivations:
            if len(D) != m or any(len(r) != m for r in D):
                raise ValueError("derivations must be square matrices on g0")
        if len(self.xi) != 1 + m + len(self.derivations):
            raise ValueError("xi must have one coefficient per basis element of the big algebra")
        if self.s_names is None:
            self.s_names = ["D"] if len(self.derivations) == 1 else [f"D{i + 1}" for i in range(len(self.derivations))]


def _s_algebra(derivations: list, names) -> LieAlgebra | None:
    """Lie algebra spanned by the derivation matrices, or ``None`` if not closed."""
    r = len(derivations)
    flat = [[x for row in D for x in row] for D in derivations]
    frame = [list(col) for col in zip(*flat)] if flat else []
    c = [[[ZERO] * r for _ in range(r)] for _ in range(r)]
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            A, B = derivations[i], derivations[j]
            comm = mat_add(mat_mul(A, B), mat_scale(mat_mul(B, A), -1))
            if is_zero_matrix(comm):
                continue
            coords = solve(frame, [x for row in comm for x in row])
            if coords is None:
                return None
            c[i][j] = coords
    return LieAlgebra(names, c)


def _extend_derivation(D: list) -> list:
    n = len(D)
    return [[ZERO] * (n + 1)] + [[ZERO] + list(row) for row in D]


def build_big_algebra(inp: Theorem42Input) -> tuple[LieAlgebra, LieAlgebra]:
    """``(g~, g)`` with ``g = R +_omega g0`` and ``g~ = s ⋉ g``."""
    g = central_extension(inp.g0, inp.omega, center_name=inp.center_name)
    s = _s_algebra(inp.derivations, inp.s_names)
    if s is None:
        raise OrbitkitError("the derivations do not span a Lie algebra")
    big = semidirect_product(s, g, [_extend_derivation(D) for D in inp.derivations])
    return big, g


def _fmt(x) -> str:
    return str(as_scalar(x))


def check_theorem_main3(inp: Theorem42Input) -> CheckReport:
    rep = CheckReport("theorem hypotheses")
    m = inp.g0.dim
    n = m + 1
    # (i)
    bad = []
    for k, D in enumerate(inp.derivations):
        r = check_symplectic_derivation(D, inp.omega, inp.g0)
        if not r.derivation:
            bad.append(f"{inp.s_names[k]}: not a derivation on basis pair {r.derivation_witness}")
        elif not r.symplectic:
            entries = [
                f"({i + 1},{j + 1})={_fmt(x)}" for i, row in enumerate(r.symplectic_residual) for j, x in enumerate(row) if x
            ]
            bad.append(f"{inp.s_names[k]}: J*D + D^T*J has nonzero entries " + ", ".join(entries[:4]))
        elif not r.nilpotent:
            bad.append(f"{inp.s_names[k]}: not nilpotent")
    if _s_algebra(inp.derivations, inp.s_names) is None:
        bad.append("derivations are not closed under commutators")
    rep.add("(i) symplectic nilpotent derivations", not bad, "; ".join(bad))
    xi = inp.xi
    names = [inp.center_name] + list(inp.g0.names) + list(inp.s_names)
    s_alg = _s_algebra(inp.derivations, inp.s_names)
    # (iii) only needs coordinates and [s, s]
    wit = []
    if not xi[0]:
        wit.append("xi vanishes on the center")
    nz = [names[1 + k] for k in range(m) if xi[1 + k]]
    if nz:
        wit.append("xi is nonzero on " + ", ".join(nz))
    if s_alg is not None:
        ss = s_alg.bracket_span(s_alg.full_basis(), s_alg.full_basis())
        for v in ss:
            if pairing(xi[n:], v):
                wit.append(f"xi is nonzero on [s,s] at {s_alg.render_vector(v)}")
                break
    rep.add("(iii) conditions on xi", not wit, "; ".join(wit))
    g = central_extension(inp.g0, inp.omega, center_name=inp.center_name)
    try:
        big, _ = build_big_algebra(inp)
    except OrbitkitError as exc:
        big = None
        why = f"big algebra could not be formed: {exc}"
    if big is not None:
        rep.info["dimension"] = big.dim
        rep.info["step"] = big.step
        # (ii)
        z, _ = big.center()
        ok = len(z) == 1 and rank([z[0], big.basis(0)]) == 1
        rep.add("(ii) center is R x {0}", ok, f"center has basis {[big.render_vector(v) for v in z]}")
        # (iv)
        wit = []
        for u in [big.basis(n + i) for i in range(len(inp.derivations))]:
            for k in range(big.dim):
                v = pairing(xi, big.bracket(u, big.basis(k)))
                if v:
                    wit.append(f"<xi,[{big.render_vector(u)},{big.names[k]}]> = {_fmt(v)}")
                    break
        rep.add("(iv) s inside isotropy", not wit, "; ".join(wit))
        # (v)
        p32 = prop32_check(big, [big.basis(k) for k in range(n)], xi, restrict=False)
        rep.add(
            "(v) restriction of orbits",
            p32.verdict,
            f"jumps {p32.jumps} exceed index {p32.k} or conditions disagree",
        )
    else:
        for name in ("(ii) center is R x {0}", "(iv) s inside isotropy", "(v) restriction of orbits"):
            rep.add(name, False, why)
    # (vi)
    try:
        small = orbit_cross_section(g, xi[:n])
        flat = small.is_flat()
        wit = "; ".join(small.relations())
        rep.info["orbit_relations"] = small.relations()
    except OrbitkitError as exc:
        flat, wit = False, str(exc)
    rep.add("(vi) flat orbit", flat, wit)
    rep.items.sort(key=lambda it: it.name)
    return rep


# -- decomposition witness ------------------------------------------------------------------------


@dataclass
class DecompositionWitness:
    """Subspace bases (coordinate vectors) inside the big algebra.

    ``a`` is the optional second reading of the subalgebra in the
    ``[h1 + a, V] ⊆ c`` bullet; it defaults to ``s``.
    """

    h: list
    z: list
    c: list
    V: list
    h1: list
    s: list
    a: list | None = None

    def reading_a(self) -> list:
        return self.s if self.a is None else self.a


def _span(vectors, m):
    return span_basis([list(v) for v in vectors], m) if vectors else []


def _sum(m, *spaces):
    vecs = [list(v) for sp in spaces for v in sp]
    return _span(vecs, m)


def _contains(U, V) -> bool:
    """``V ⊆ U``."""
    if not V:
        return True
    if not U:
        return rank(V) == 0
    return rank(list(U) + list(V)) == rank(U)


def _cap(U, V):
    if not U or not V:
        return []
    return intersect(U, V)


def _equal(U, V) -> bool:
    return _contains(U, V) and _contains(V, U)


def _bracket_into(g: LieAlgebra, U, V, W) -> tuple[bool, str]:
    for u in U:
        for v in V:
            b = g.bracket(u, v)
            if any(b) and not _contains(W, [b]):
                return False, f"[{g.render_vector(u)},{g.render_vector(v)}] = {g.render_vector(b)}"
    return True, ""


def _is_heisenberg(g: LieAlgebra, h, z) -> tuple[bool, str]:
    if not _contains(h, z):
        return False, "does not contain z"
    if not g.is_subalgebra(h):
        return False, "not a subalgebra"
    ok, w = _bracket_into(g, h, h, z)
    if not ok:
        return False, f"bracket outside z: {w}"
    # the center of h must be z
    B = [[pairing(_z_dual(g, z), g.bracket(u, v)) for v in h] for u in h]
    r = rank(B) if B else 0
    if r != len(h) - len(z):
        return False, f"degenerate bracket form (rank {r} on dimension {len(h)})"
    return True, ""


def _z_dual(g: LieAlgebra, z):
    """A functional equal to 1 on the (1-dimensional) z."""
    zv = z[0]
    k = next(i for i, x in enumerate(zv) if x)
    out = [ZERO] * g.dim
    out[k] = zv[k].inverse()
    return out


def check_decomposition(g: LieAlgebra, w: DecompositionWitness) -> CheckReport:
    rep = CheckReport("3-step decomposition")
    m = g.dim
    sp = {k: _span(getattr(w, k), m) for k in ("h", "z", "c", "V", "h1", "s")}
    sp["a"] = _span(w.reading_a(), m)
    h, z, c, V, h1, s, a = (sp[k] for k in ("h", "z", "c", "V", "h1", "s", "a"))
    step = g.step
    center, _ = g.center()
    rep.info["step"] = step
    rep.info["center_dimension"] = len(center)
    rep.add("at most 3-step", step <= 3, f"step is {step}" if step > 3 else "")
    rep.add("1-dimensional center", len(center) == 1, f"center has dimension {len(center)}")
    zok = len(z) == 1 and _equal(z, center)
    rep.add("z is the center", zok, "" if zok else "z differs from the center")
    total = _sum(m, h, z, c, V, h1, s)
    rep.add("spanning", len(total) == m, f"sum has dimension {len(total)} of {m}")
    for name, sub in (("h", h), ("h1", h1)):
        ok, wit = _is_heisenberg(g, sub, z) if zok else (False, "z is not the center")
        rep.add(f"{name} is Heisenberg containing z", ok, wit)
    ok, wit = _bracket_into(g, h, [g.basis(k) for k in range(m)], z)
    rep.add("[h, g] in z", ok, wit)
    cap1 = _cap(h, _sum(m, z, c, V, h1, s))
    rep.add("h ∩ (z+c+V+h1+s) = z", _equal(cap1, z), f"intersection has dimension {len(cap1)}")
    cap2 = _cap(_sum(m, z, c, V), _sum(m, h1, s))
    rep.add("(z+c+V) ∩ (h1+s) = z", _equal(cap2, z), f"intersection has dimension {len(cap2)}")
    ok, wit = _bracket_into(g, c, c, [])
    rep.add("c abelian", ok and g.is_subalgebra(c) if c else True, wit)
    ok, wit = _bracket_into(g, V, V, c)
    rep.add("[V, V] in c", ok, wit)
    ok, wit = _bracket_into(g, V, c, z)
    if ok and len(V) != len(c):
        ok, wit = False, f"dim V = {len(V)} but dim c = {len(c)}"
    if ok and V and zok:
        zd = _z_dual(g, z)
        M = [[pairing(zd, g.bracket(v, u)) for u in c] for v in V]
        d = det(M)
        ok = bool(d)
        wit = f"det = {d}"
    rep.add("V x c -> z nondegenerate", ok, wit, keep=True)
    ok, wit = _bracket_into(g, _sum(m, h1, s), c, [])
    rep.add("[h1+s, c] = 0", ok, wit)
    ok, wit = _bracket_into(g, _sum(m, h1, s), V, c)
    rep.add("[h1+s, V] in c", ok, wit)
    if w.a is not None:
        ok, wit = _bracket_into(g, _sum(m, h1, a), V, c)
        rep.add("[h1+a, V] in c", ok, wit)
    ok, wit = _bracket_into(g, h1, s, [])
    rep.add("[h1, s] = 0", ok, wit)
    return rep


# -- flat preservation under reduced direct products -------------------------------------------------


@dataclass
class GenericOrbitResult:
    flat: bool
    draws: list
    orbit_dim: int
    relations: list


def generic_flatness(
    k: LieAlgebra, seed: int = 0, draws: int = 3, max_tries: int = 50, label: str = "algebra"
) -> GenericOrbitResult:
    """Flatness at ``draws`` random functionals nonzero on the center and of maximal orbit dimension."""
    z, _ = k.center()
    if len(z) != 1:
        raise PreconditionFailed(label, f"center has dimension {len(z)}")
    zv = z[0]
    rng = random.Random(seed)

    def draw():
        return [as_scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 4))) for _ in range(k.dim)]

    accepted: list = []
    tries = 0
    best = -1
    while len(accepted) < draws:
        tries += 1
        if tries > max_tries:
            raise PreconditionFailed(label, "could not draw generic functionals")
        xi = draw()
        if not pairing(xi, zv):
            continue  # vanishes on the center; retry
        d = k.dim - isotropy_algebra(k, xi).dim
        if d < best:
            continue
        if d > best:
            best = d
            accepted = []
        accepted.append(xi)
    verdicts = []
    rels = []
    for xi in accepted:
        o = orbit_cross_section(k, xi)
        verdicts.append(o.is_flat())
        rels.append(o.relations())
    if len(set(verdicts)) != 1:
        raise PreconditionFailed(label, "generic draws disagree on flatness")
    return GenericOrbitResult(verdicts[0], [[str(x) for x in xi] for xi in accepted], best, rels[0])


def check_flat_preservation(k1: LieAlgebra, k2: LieAlgebra, seed: int = 0) -> CheckReport:
    rep = CheckReport("flat preservation")
    for label, k in (("k1", k1), ("k2", k2)):
        r = generic_flatness(k, seed, label=label)
        if not r.flat:
            raise PreconditionFailed(label, "generic orbit is not flat: " + "; ".join(r.relations))
        rep.add(f"{label} has flat generic orbits", True)
    prod = reduced_direct_product(k1, k2)
    z, _ = prod.center()
    rep.info["product_dimension"] = prod.dim
    rep.add("product has 1-dimensional center", len(z) == 1, f"center has dimension {len(z)}")
    if len(z) == 1:
        r = generic_flatness(prod, seed)
        rep.info["product_relations"] = r.relations
        rep.add("product has flat generic orbits", r.flat, "" if r.flat else "; ".join(r.relations))
    rep.info["product"] = prod.to_dsl()
    return rep
