"""Gaussian-rational functions in named real parameters.

A :class:`ScalarExpr` is an element of the field Q(i)(p1, ..., pk).  It is
stored as ``(P + i*Q) / R`` with ``P, Q, R`` in Q[p1, ..., pk], ``R`` real,
``gcd(P, Q, R) = 1`` and ``R`` monic in the lexicographic order on the
sorted parameter names.  Values that do not involve any parameter are kept as
a pair of :class:`flint.fmpq` (the fast path).  The parameter tuple always
lists exactly the parameters that occur, so equal values have identical
internal state.

Parameters are treated as real symbols: :meth:`ScalarExpr.conjugate` maps
``P + iQ`` to ``P - iQ``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import flint

__all__ = ["ScalarExpr", "I", "ONE", "ZERO", "param", "params", "as_scalar"]

_Q0 = flint.fmpq(0)
_Q1 = flint.fmpq(1)


@lru_cache(maxsize=None)
def _ctx(names: tuple[str, ...]):
    return flint.fmpq_mpoly_ctx.get(names, "lex")


@lru_cache(maxsize=None)
def _index_map(src: tuple[str, ...], dst: tuple[str, ...]) -> tuple[int, ...]:
    return tuple(dst.index(n) for n in src)


def _lift(poly, src: tuple[str, ...], dst: tuple[str, ...]):
    """Re-embed ``poly`` from the context on ``src`` into the one on ``dst``."""
    if src == dst:
        return poly
    ctx = _ctx(dst)
    imap = _index_map(src, dst)
    n = len(dst)
    out = {}
    for exps, c in poly.to_dict().items():
        e = [0] * n
        for k, v in zip(imap, exps):
            e[k] = v
        out[tuple(e)] = c
    return ctx.from_dict(out)


def _to_fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, Rational):
        return flint.fmpq(int(x.numerator), int(x.denominator))
    if isinstance(x, flint.fmpz):
        return flint.fmpq(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to an exact rational")


def _fmpq_to_fraction(q: flint.fmpq) -> Fraction:
    return Fraction(int(q.p), int(q.q))


class ScalarExpr:
    """Exact element of Q(i)(parameters).  Immutable."""

    __slots__ = ("params", "_re", "_im", "_den")

    def __init__(self, value=0, imag=0):
        if isinstance(value, ScalarExpr):
            if imag:
                raise TypeError("imag part not allowed when copying a ScalarExpr")
            self.params = value.params
            self._re, self._im, self._den = value._re, value._im, value._den
            return
        if isinstance(value, complex):
            raise TypeError("floating-point complex numbers are not exact")
        self.params = ()
        self._re = _to_fmpq(value)
        self._im = _to_fmpq(imag)
        self._den = None

    # -- construction helpers -------------------------------------------------
    @classmethod
    def _const(cls, re: flint.fmpq, im: flint.fmpq) -> "ScalarExpr":
        obj = object.__new__(cls)
        obj.params = ()
        obj._re = re
        obj._im = im
        obj._den = None
        return obj

    @classmethod
    def _from_polys(cls, names, re, im, den) -> "ScalarExpr":
        if den.is_zero():
            raise ZeroDivisionError("division by a zero ScalarExpr")
        if re.is_zero() and im.is_zero():
            return ZERO
        g = re.gcd(im).gcd(den)
        if not g.is_one():
            re, im, den = re / g, im / g, den / g
        lc = den.leading_coefficient()
        if lc != 1:
            inv = 1 / lc
            re, im, den = re * inv, im * inv, den * inv
        used = [False] * len(names)
        for p in (re, im, den):
            for k, d in enumerate(p.degrees()):
                if d > 0:
                    used[k] = True
        if not any(used):
            # den is monic and constant, hence 1
            return cls._const(_const_coeff(re), _const_coeff(im))
        if not all(used):
            sub = tuple(n for n, u in zip(names, used) if u)
            re, im, den = (_project(p, names, sub) for p in (re, im, den))
            names = sub
        obj = object.__new__(cls)
        obj.params = names
        obj._re, obj._im, obj._den = re, im, den
        return obj

    @classmethod
    def parameter(cls, name: str) -> "ScalarExpr":
        names = (name,)
        ctx = _ctx(names)
        obj = object.__new__(cls)
        obj.params = names
        obj._re = ctx.gen(0)
        obj._im = ctx.from_dict({})
        obj._den = ctx.constant(1)
        return obj

    def _polys(self, names):
        """Return (re, im, den) as polynomials in the context over ``names``."""
        if not self.params:
            ctx = _ctx(names)
            return ctx.constant(self._re), ctx.constant(self._im), ctx.constant(1)
        return (
            _lift(self._re, self.params, names),
            _lift(self._im, self.params, names),
            _lift(self._den, self.params, names),
        )

    # -- predicates / accessors -----------------------------------------------
    def is_zero(self) -> bool:
        return not self.params and self._re == 0 and self._im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_constant(self) -> bool:
        return not self.params

    def is_real(self) -> bool:
        return self._im == 0 if not self.params else self._im.is_zero()

    def is_one(self) -> bool:
        return not self.params and self._re == 1 and self._im == 0

    def as_gaussian(self) -> tuple[Fraction, Fraction]:
        """(real, imaginary) parts of a parameter-free value."""
        if self.params:
            raise ValueError(f"{self} depends on parameters {self.params}")
        return _fmpq_to_fraction(self._re), _fmpq_to_fraction(self._im)

    def as_fraction(self) -> Fraction:
        re, im = self.as_gaussian()
        if im:
            raise ValueError(f"{self} is not real")
        return re

    def numerator(self) -> "ScalarExpr":
        """The Gaussian polynomial ``P + iQ`` as a ScalarExpr."""
        if not self.params:
            return self
        ctx = _ctx(self.params)
        return ScalarExpr._from_polys(self.params, self._re, self._im, ctx.constant(1))

    def denominator(self) -> "ScalarExpr":
        if not self.params:
            return ONE
        ctx = _ctx(self.params)
        return ScalarExpr._from_polys(self.params, self._den, ctx.from_dict({}), ctx.constant(1))

    def degree(self) -> int:
        """Total degree of numerator plus denominator; 0 for constants."""
        if not self.params:
            return 0
        return max(p.total_degree() for p in (self._re, self._im)) + self._den.total_degree()

    def nterms(self) -> int:
        if not self.params:
            return (self._re != 0) + (self._im != 0)
        return len(self._re.to_dict()) + len(self._im.to_dict()) + len(self._den.to_dict())

    # -- arithmetic -----------------------------------------------------------
    def __neg__(self) -> "ScalarExpr":
        if not self.params:
            return ScalarExpr._const(-self._re, -self._im)
        obj = object.__new__(ScalarExpr)
        obj.params = self.params
        obj._re, obj._im, obj._den = -self._re, -self._im, self._den
        return obj

    def __pos__(self):
        return self

    def __add__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        if not self.params and not other.params:
            return ScalarExpr._const(self._re + other._re, self._im + other._im)
        names = _union(self.params, other.params)
        a, b, r = self._polys(names)
        c, d, u = other._polys(names)
        if r == u:
            return ScalarExpr._from_polys(names, a + c, b + d, r)
        return ScalarExpr._from_polys(names, a * u + c * r, b * u + d * r, r * u)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        if not self.params and not other.params:
            a, b, c, d = self._re, self._im, other._re, other._im
            if b == 0 and d == 0:
                return ScalarExpr._const(a * c, _Q0)
            return ScalarExpr._const(a * c - b * d, a * d + b * c)
        names = _union(self.params, other.params)
        a, b, r = self._polys(names)
        c, d, u = other._polys(names)
        return ScalarExpr._from_polys(names, a * c - b * d, a * d + b * c, r * u)

    __rmul__ = __mul__

    def inverse(self) -> "ScalarExpr":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if not self.params:
            a, b = self._re, self._im
            if b == 0:
                return ScalarExpr._const(1 / a, _Q0)
            n = a * a + b * b
            return ScalarExpr._const(a / n, -b / n)
        a, b, r = self._re, self._im, self._den
        # r / (a + ib) = r (a - ib) / (a^2 + b^2)
        return ScalarExpr._from_polys(self.params, r * a, -(r * b), a * a + b * b)

    def __truediv__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "ScalarExpr":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conjugate(self) -> "ScalarExpr":
        if not self.params:
            return ScalarExpr._const(self._re, -self._im)
        obj = object.__new__(ScalarExpr)
        obj.params = self.params
        obj._re, obj._im, obj._den = self._re, -self._im, self._den
        return obj

    def real(self) -> "ScalarExpr":
        if not self.params:
            return ScalarExpr._const(self._re, _Q0)
        z = _ctx(self.params).from_dict({})
        return ScalarExpr._from_polys(self.params, self._re, z, self._den)

    def imag(self) -> "ScalarExpr":
        if not self.params:
            return ScalarExpr._const(self._im, _Q0)
        z = _ctx(self.params).from_dict({})
        return ScalarExpr._from_polys(self.params, self._im, z, self._den)

    # -- comparison -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        if self.params != other.params:
            return False
        if not self.params:
            return self._re == other._re and self._im == other._im
        return self._re == other._re and self._im == other._im and self._den == other._den

    def __hash__(self) -> int:
        if not self.params:
            if self._im == 0:
                return hash(self._re)
            return hash((self._re, self._im))
        return hash((self.params, str(self._re), str(self._im), str(self._den)))

    # -- evaluation -----------------------------------------------------------
    def subs(self, values: dict) -> "ScalarExpr":
        """Substitute parameters by ScalarExpr/rational values (partial allowed)."""
        if not self.params:
            return self
        vals = {k: as_scalar(v) for k, v in values.items() if k in self.params}
        if not vals:
            return self
        gens = [vals[n] if n in vals else ScalarExpr.parameter(n) for n in self.params]
        re = _eval_poly(self._re, gens)
        im = _eval_poly(self._im, gens)
        den = _eval_poly(self._den, gens)
        return (re + I * im) / den

    def to_complex(self, values: dict | None = None) -> complex:
        """Floating-point value; every parameter must be given a number."""
        values = values or {}
        if not self.params:
            return complex(float(_fmpq_to_fraction(self._re)), float(_fmpq_to_fraction(self._im)))
        missing = [n for n in self.params if n not in values]
        if missing:
            raise ValueError(f"no value for parameters {missing}")
        xs = [complex(values[n]) for n in self.params]

        def ev(p):
            total = 0j
            for exps, c in p.to_dict().items():
                term = complex(float(_fmpq_to_fraction(c)))
                for x, e in zip(xs, exps):
                    if e:
                        term *= x ** int(e)
                total += term
            return total

        return (ev(self._re) + 1j * ev(self._im)) / ev(self._den)

    # -- rendering ------------------------------------------------------------
    def _num_terms(self) -> list[tuple[Fraction, str]]:
        """Numerator as (rational coefficient, atom) pairs in canonical order.

        ``atom`` is the parameter monomial with an ``i`` factor for imaginary
        parts, e.g. ``"i*a*b"``; the empty string means the unit.
        """
        if not self.params:
            out = []
            if self._re != 0:
                out.append((_fmpq_to_fraction(self._re), ""))
            if self._im != 0:
                out.append((_fmpq_to_fraction(self._im), "i"))
            return out
        re = self._re.to_dict()
        im = self._im.to_dict()
        keys = sorted(set(re) | set(im), key=_monomial_key)
        out = []
        for k in keys:
            mono = _render_monomial(self.params, k)
            if k in re:
                out.append((_fmpq_to_fraction(re[k]), mono))
            if k in im:
                out.append((_fmpq_to_fraction(im[k]), "i*" + mono if mono else "i"))
        return out

    def _den_terms(self) -> list[tuple[Fraction, str]]:
        if not self.params:
            return [(Fraction(1), "")]
        d = self._den.to_dict()
        return [(_fmpq_to_fraction(d[k]), _render_monomial(self.params, k)) for k in sorted(d, key=_monomial_key)]

    def render(self) -> tuple[bool, str, bool]:
        """Return ``(negative, body, atomic)`` for embedding as a coefficient.

        ``body`` carries no leading sign when ``atomic`` is true; ``atomic``
        means the text is a single product/quotient and needs no parentheses
        when multiplied on the right by a monomial.
        """
        num = self._num_terms()
        den = self._den_terms()
        if not num:
            return False, "0", True
        if den == [(1, "")]:
            if len(num) == 1:
                c, atom = num[0]
                return c < 0, _term_text(abs(c), atom), True
            return False, _sum_text(num), False
        # clear rational coefficients so the quotient is written over integers
        scale = 1
        for c, _ in num + den:
            scale = scale * c.denominator // _gcd(scale, c.denominator)
        num = [(c * scale, a) for c, a in num]
        den = [(c * scale, a) for c, a in den]
        g = 0
        for c, _ in num + den:
            g = _gcd(g, c.numerator)
        num = [(c / g, a) for c, a in num]
        den = [(c / g, a) for c, a in den]
        den_is_one = len(den) == 1 and den[0] == (1, "")
        if len(num) == 1:
            c, atom = num[0]
            neg = c < 0
            body = _term_text(abs(c), atom)
            if den_is_one:
                return neg, body, True
            return neg, f"{body}/{_wrap_den(den)}", True
        text = _sum_text(num)
        if den_is_one:
            return False, text, False
        return False, f"({text})/{_wrap_den(den)}", True

    def __str__(self) -> str:
        neg, body, _ = self.render()
        return "-" + body if neg else body

    def __repr__(self) -> str:
        return f"ScalarExpr({str(self)!r})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _monomial_key(exps):
    # ascending total degree, then lexicographically descending exponents
    return (sum(exps), tuple(-e for e in exps))


def _render_monomial(names, exps) -> str:
    parts = []
    for n, e in zip(names, exps):
        if e == 1:
            parts.append(n)
        elif e:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def _term_text(c: Fraction, atom: str) -> str:
    """``c*atom`` with c >= 0, omitting a unit coefficient."""
    if not atom:
        return str(c)
    if c == 1:
        return atom
    return f"{c}*{atom}"


def _sum_text(terms) -> str:
    out = []
    for k, (c, atom) in enumerate(terms):
        body = _term_text(abs(c), atom)
        if k == 0:
            out.append("-" + body if c < 0 else body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def _wrap_den(den) -> str:
    if len(den) == 1:
        c, atom = den[0]
        if atom and c != 1:
            return f"({c}*{atom})"
        return _term_text(c, atom)
    return f"({_sum_text(den)})"


def _const_coeff(p) -> flint.fmpq:
    if p.is_zero():
        return _Q0
    return p.leading_coefficient()


def _project(p, src, dst):
    imap = [src.index(n) for n in dst]
    ctx = _ctx(dst)
    return ctx.from_dict({tuple(e[k] for k in imap): c for e, c in p.to_dict().items()})


@lru_cache(maxsize=None)
def _union(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    if a == b or not b:
        return a
    if not a:
        return b
    return tuple(sorted(set(a) | set(b)))


def _eval_poly(p, gens) -> ScalarExpr:
    total = ZERO
    for exps, c in p.to_dict().items():
        term = ScalarExpr._const(c, _Q0)
        for g, e in zip(gens, exps):
            if e:
                term = term * g ** int(e)
        total = total + term
    return total


def as_scalar(x, strict: bool = True):
    """Coerce ints, rationals and ScalarExpr values; others raise (or NotImplemented)."""
    if isinstance(x, ScalarExpr):
        return x
    if isinstance(x, (int, Rational, flint.fmpq, flint.fmpz)) and not isinstance(x, bool):
        return ScalarExpr._const(_to_fmpq(x), _Q0)
    if isinstance(x, bool):
        return ScalarExpr._const(_to_fmpq(int(x)), _Q0)
    if strict:
        raise TypeError(f"cannot coerce {type(x).__name__} to ScalarExpr")
    return NotImplemented


def param(name: str) -> ScalarExpr:
    """The parameter called ``name`` as a ScalarExpr."""
    return ScalarExpr.parameter(name)


def params(names: str) -> tuple[ScalarExpr, ...]:
    """``params("a b")`` -> (a, b)."""
    return tuple(ScalarExpr.parameter(n) for n in names.replace(",", " ").split())


ZERO = ScalarExpr._const(_Q0, _Q0)
ONE = ScalarExpr._const(_Q1, _Q0)
I = ScalarExpr._const(_Q0, _Q1)
