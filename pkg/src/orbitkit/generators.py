"""Random nilpotent algebras, ideals and functionals for property suites and experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exact.linalg import span_basis
from .exact.scalar import ZERO, as_scalar
from .lie import LieAlgebra, validate_lie
from . import library


def _q(rng: random.Random, num: int = 3, den: int = 2, zero_ok: bool = True) -> Fraction:
    while True:
        v = Fraction(rng.randint(-num, num), rng.randint(1, den))
        if v or zero_ok:
            return v


def two_step(rng: random.Random, dim: int) -> LieAlgebra:
    """``[X_j, X_k]`` in span(X_1..X_c) for j, k > c; Jacobi holds automatically."""
    c = rng.randint(1, max(1, dim // 2))
    table = {}
    for j in range(c, dim):
        for k in range(c, j):
            if rng.random() < 0.6:
                vec = [as_scalar(_q(rng)) if l < c else ZERO for l in range(dim)]
                if any(vec):
                    table[(j, k)] = vec
    return validate_lie(table, [f"X{i + 1}" for i in range(dim)])


def filiform(dim: int) -> LieAlgebra:
    """Model filiform algebra ``[X_n, X_k] = X_{k-1}``."""
    table = {}
    for k in range(1, dim - 1):
        vec = [ZERO] * dim
        vec[k - 1] = as_scalar(1)
        table[(dim - 1, k)] = vec
    return validate_lie(table, [f"X{i + 1}" for i in range(dim)])


def triangular_change(g: LieAlgebra, rng: random.Random) -> LieAlgebra:
    """``Y_j = X_j + sum_{l<j} c_l X_l``, which keeps every flag ideal."""
    vecs = []
    for j in range(g.dim):
        v = [as_scalar(_q(rng, 2, 2)) if l < j and rng.random() < 0.4 else ZERO for l in range(g.dim)]
        v[j] = as_scalar(_q(rng, 2, 2, zero_ok=False))
        vecs.append(v)
    return g.change_basis(vecs, [f"X{i + 1}" for i in range(g.dim)])


def random_algebra(rng: random.Random, max_dim: int = 6) -> tuple[str, LieAlgebra]:
    kind = rng.choice(["two_step", "two_step", "filiform", "heisenberg", "pedersen", "lauret_g0", "filiform4"])
    if kind == "two_step":
        g = two_step(rng, rng.randint(2, max_dim))
    elif kind == "filiform":
        g = filiform(rng.randint(3, max_dim))
    elif kind == "heisenberg":
        g = rng.choice([library.heisenberg3, library.heisenberg5])()
    elif kind == "pedersen":
        g = rng.choice([library.pedersen6, library.pedersen5])()
    elif kind == "lauret_g0":
        s = _q(rng, 3, 2, zero_ok=False)
        t = _q(rng, 3, 2, zero_ok=False)
        g = library.lauret_g0(s, t)
    else:
        g = library.filiform4()
    if g.dim > max_dim:
        g = g.subalgebra([g.basis(k) for k in range(max_dim)], g.names[:max_dim]) if g.is_ideal(
            [g.basis(k) for k in range(max_dim)]
        ) else two_step(rng, max_dim)
    if rng.random() < 0.5:
        g = triangular_change(g, rng)
        kind += "+change"
    return kind, g


def random_ideal(g: LieAlgebra, rng: random.Random) -> list:
    """A flag ideal, a lower-central term, or a flag ideal plus the center."""
    choice = rng.random()
    if choice < 0.6:
        k = rng.randint(1, g.dim)
        return [g.basis(i) for i in range(k)]
    if choice < 0.8:
        lcs = [t for t in g.lower_central_series() if t]
        if lcs:
            return rng.choice(lcs)
        return [g.basis(0)]
    z, _ = g.center()
    k = rng.randint(0, g.dim - 1)
    vecs = [g.basis(i) for i in range(k)] + list(z)
    return span_basis(vecs, g.dim)


def random_functional(g: LieAlgebra, rng: random.Random, zero_prob: float = 0.3) -> list:
    return [as_scalar(0 if rng.random() < zero_prob else _q(rng, 5, 3, zero_ok=False)) for _ in range(g.dim)]


@dataclass
class Instance:
    kind: str
    algebra: LieAlgebra
    ideal: list
    xi: list


def random_instances(count: int, seed: int = 0, max_dim: int = 6) -> list:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        kind, g = random_algebra(rng, max_dim)
        out.append(Instance(kind, g, random_ideal(g, rng), random_functional(g, rng)))
    return out
