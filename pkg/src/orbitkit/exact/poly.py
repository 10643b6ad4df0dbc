"""Sparse multivariate polynomials with ScalarExpr coefficients."""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalar import ONE, ZERO, ScalarExpr, _Q0, as_scalar

__all__ = ["MultiPoly", "term_order_key"]


def term_order_key(exps: tuple[int, ...]):
    """Canonical term order: ascending total degree, then descending lex."""
    return (sum(exps), tuple(-e for e in exps))


class MultiPoly:
    """Polynomial in ``nvars`` commuting variables.

    ``terms`` maps exponent tuples to nonzero coefficients.  ``names`` is used
    only for rendering and parsing; it does not take part in equality.
    """

    __slots__ = ("nvars", "terms", "names")

    def __init__(self, nvars: int, terms: dict | None = None, names: Sequence[str] | None = None):
        self.nvars = nvars
        if terms:
            clean = {}
            for e, c in terms.items():
                c = as_scalar(c)
                if c:
                    if len(e) != nvars:
                        raise ValueError(f"exponent {e} does not have arity {nvars}")
                    clean[tuple(e)] = c
            self.terms = clean
        else:
            self.terms = {}
        self.names = tuple(names) if names is not None else tuple(f"y{k + 1}" for k in range(nvars))
        if len(self.names) != nvars:
            raise ValueError("names must match nvars")

    @classmethod
    def _raw(cls, nvars, terms, names):
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj.names = names
        return obj

    @classmethod
    def constant(cls, c, nvars: int, names=None) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c}, names)

    @classmethod
    def var(cls, k: int, nvars: int, names=None) -> "MultiPoly":
        e = [0] * nvars
        e[k] = 1
        return cls(nvars, {tuple(e): ONE}, names)

    @classmethod
    def gens(cls, names: Sequence[str]) -> tuple["MultiPoly", ...]:
        n = len(names)
        return tuple(cls.var(k, n, names) for k in range(n))

    def with_names(self, names: Sequence[str]) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, self.terms, tuple(names))

    # -- queries ----------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> ScalarExpr:
        return self.terms.get((0,) * self.nvars, ZERO)

    def coefficient(self, exps) -> ScalarExpr:
        return self.terms.get(tuple(exps), ZERO)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, k: int) -> int:
        return max((e[k] for e in self.terms), default=-1)

    def variables_used(self) -> set[int]:
        return {k for e in self.terms for k, v in enumerate(e) if v}

    # -- arithmetic -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
            return other
        c = as_scalar(other, strict=False)
        if c is NotImplemented:
            return NotImplemented
        return MultiPoly.constant(c, self.nvars, self.names)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly._raw(self.nvars, out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "MultiPoly":
        c = as_scalar(c)
        if not c:
            return MultiPoly._raw(self.nvars, {}, self.names)
        return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()}, self.names)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = as_scalar(other, strict=False)
            if c is NotImplemented:
                return NotImplemented
            return self.scale(c)
        if other.nvars != self.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                s = out.get(e)
                out[e] = p if s is None else s + p
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c}, self.names)

    def __rmul__(self, other):
        c = as_scalar(other, strict=False)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def __truediv__(self, other):
        c = as_scalar(other, strict=False)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c.inverse())

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly.constant(ONE, self.nvars, self.names)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        c = as_scalar(other, strict=False)
        if c is NotImplemented:
            return NotImplemented
        return self == MultiPoly.constant(c, self.nvars)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- calculus / composition ---------------------------------------------------
    def derivative(self, k: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                f = list(e)
                f[k] -= 1
                out[tuple(f)] = c * e[k]
        return MultiPoly._raw(self.nvars, out, self.names)

    def map_coefficients(self, fn) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: fn(c) for e, c in self.terms.items()}, self.names)

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Compose: replace variable k by ``images[k]`` (all of one arity)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        if not images:
            return self
        target = images[0]
        n = target.nvars
        cache: dict[tuple[int, int], MultiPoly] = {}

        def power(k, p):
            key = (k, p)
            if key not in cache:
                cache[key] = images[k] if p == 1 else power(k, p - 1) * images[k]
            return cache[key]

        total = MultiPoly._raw(n, {}, target.names)
        for e, c in self.terms.items():
            term = MultiPoly.constant(c, n, target.names)
            for k, p in enumerate(e):
                if p:
                    term = term * power(k, p)
            total = total + term
        return total

    def evaluate(self, values: Sequence) -> ScalarExpr:
        vals = [as_scalar(v) for v in values]
        total = ZERO
        for e, c in self.terms.items():
            term = c
            for v, p in zip(vals, e):
                if p:
                    term = term * v**p
            total = total + term
        return total

    def subs_params(self, values: dict) -> "MultiPoly":
        return self.map_coefficients(lambda c: c.subs(values))

    def extend(self, nvars: int, positions: Sequence[int], names=None) -> "MultiPoly":
        """Re-embed into ``nvars`` variables, variable k going to ``positions[k]``."""
        out = {}
        for e, c in self.terms.items():
            f = [0] * nvars
            for k, p in zip(positions, e):
                f[k] += p
            out[tuple(f)] = c
        return MultiPoly(nvars, out, names)

    # -- bridge to ScalarExpr -------------------------------------------------------
    def to_scalar(self) -> ScalarExpr:
        """Read the variables as parameters named by ``self.names``."""
        return self.to_scalar_with(self.names)

    def to_scalar_with(self, names: Sequence[str]) -> ScalarExpr:
        """Read variable k as the parameter ``names[k]``."""
        return self.evaluate([ScalarExpr.parameter(n) for n in names])

    @classmethod
    def from_scalar(cls, expr: ScalarExpr, names: Sequence[str]) -> "MultiPoly":
        """Split ``expr`` into a polynomial in the parameters ``names``.

        Remaining parameters stay in the coefficients.  Raises ``ValueError``
        when a denominator involves one of ``names``.
        """
        names = tuple(names)
        n = len(names)
        expr = as_scalar(expr)
        if not any(p in names for p in expr.params):
            return cls.constant(expr, n, names)
        pnames = expr.params
        pos = {p: k for k, p in enumerate(pnames)}
        var_idx = [pos.get(v) for v in names]
        rest = [k for k, p in enumerate(pnames) if p not in names]
        for k in var_idx:
            if k is not None and expr._den.degrees()[k] > 0:
                raise ValueError(f"denominator of {expr} involves {pnames[k]}")
        den = _poly_to_scalar(expr._den, pnames, rest)
        inv_den = den.inverse()
        buckets: dict[tuple, ScalarExpr] = {}
        for part, unit in ((expr._re, ONE), (expr._im, ScalarExpr(0, 1))):
            for exps, c in part.to_dict().items():
                key = tuple(int(exps[k]) if k is not None else 0 for k in var_idx)
                coeff = ScalarExpr._const(c, _Q0) * unit
                for k in rest:
                    if exps[k]:
                        coeff = coeff * ScalarExpr.parameter(pnames[k]) ** int(exps[k])
                buckets[key] = buckets.get(key, ZERO) + coeff
        return cls(n, {e: c * inv_den for e, c in buckets.items()}, names)

    # -- rendering --------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: term_order_key(kv[0]))

    def __str__(self) -> str:
        return render_terms(
            [(c, _monomial_text(self.names, e)) for e, c in self.sorted_terms()]
        )

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"


def _poly_to_scalar(p, pnames, keep) -> ScalarExpr:
    total = ZERO
    for exps, c in p.to_dict().items():
        term = ScalarExpr._const(c, _Q0)
        for k in keep:
            if exps[k]:
                term = term * ScalarExpr.parameter(pnames[k]) ** int(exps[k])
        total = total + term
    return total


def _monomial_text(names, exps) -> str:
    parts = []
    for n, e in zip(names, exps):
        if e == 1:
            parts.append(n)
        elif e:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def render_terms(terms: Iterable[tuple[ScalarExpr, str]]) -> str:
    """Join ``coefficient*atom`` terms with explicit signs; "0" when empty."""
    out = []
    for coeff, atom in terms:
        neg, body, atomic = coeff.render()
        if atom:
            if body == "1" and atomic:
                text = atom
            elif atomic:
                text = f"{body}*{atom}"
            else:
                text = f"({body})*{atom}"
        else:
            text = body if atomic or not out else f"({body})"
        if not out:
            out.append("-" + text if neg else text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out) if out else "0"
