"""Polynomial-coefficient differential operators in normal order.

A term ``c * t^alpha * d^beta`` stands for multiplication by ``c t^alpha``
applied after the derivative ``d^beta``.  Products are brought back to normal
order with the Leibniz rule

    d^b t^a = sum_k C(b, k) a!/(a-k)! t^(a-k) d^(b-k)      (per variable).
"""

from __future__ import annotations

from itertools import product
from math import comb, factorial
from typing import Sequence

from .poly import MultiPoly, render_terms, term_order_key
from .scalar import ONE, ZERO, ScalarExpr, as_scalar

__all__ = ["DiffOperator", "commutator"]


def _falling(a: int, k: int) -> int:
    return factorial(a) // factorial(a - k)


class DiffOperator:
    """Element of the Weyl algebra over ScalarExpr in ``nvars`` variables."""

    __slots__ = ("nvars", "terms", "names")

    def __init__(self, nvars: int, terms: dict | None = None, names: Sequence[str] | None = None):
        self.nvars = nvars
        clean = {}
        for (a, b), c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                if len(a) != nvars or len(b) != nvars:
                    raise ValueError("multi-index arity mismatch")
                clean[(tuple(a), tuple(b))] = c
        self.terms = clean
        self.names = tuple(names) if names is not None else tuple(f"t{k + 1}" for k in range(nvars))

    @classmethod
    def _raw(cls, nvars, terms, names):
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj.names = names
        return obj

    # -- constructors -----------------------------------------------------------
    @classmethod
    def scalar(cls, c, nvars: int, names=None) -> "DiffOperator":
        z = (0,) * nvars
        return cls(nvars, {(z, z): c}, names)

    @classmethod
    def identity(cls, nvars: int, names=None) -> "DiffOperator":
        return cls.scalar(ONE, nvars, names)

    @classmethod
    def coordinate(cls, k: int, nvars: int, names=None) -> "DiffOperator":
        """Multiplication by the k-th coordinate."""
        a = [0] * nvars
        a[k] = 1
        return cls(nvars, {(tuple(a), (0,) * nvars): ONE}, names)

    @classmethod
    def partial(cls, k: int, nvars: int, names=None) -> "DiffOperator":
        b = [0] * nvars
        b[k] = 1
        return cls(nvars, {((0,) * nvars, tuple(b)): ONE}, names)

    @classmethod
    def multiplication(cls, p: MultiPoly, names=None) -> "DiffOperator":
        z = (0,) * p.nvars
        return cls(p.nvars, {(e, z): c for e, c in p.terms.items()}, names or p.names)

    @classmethod
    def from_vector_field(cls, coeffs: Sequence[MultiPoly], names=None) -> "DiffOperator":
        """``sum_k coeffs[k] * d_k``."""
        n = len(coeffs)
        out = cls(n, {}, names)
        for k, p in enumerate(coeffs):
            out = out + cls.multiplication(p.with_names(out.names)) * cls.partial(k, n, out.names)
        return out

    def with_names(self, names) -> "DiffOperator":
        return DiffOperator._raw(self.nvars, self.terms, tuple(names))

    # -- queries ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def order(self) -> int:
        """Differential order; -1 for the zero operator."""
        return max((sum(b) for _, b in self.terms), default=-1)

    def coefficient_degree(self) -> int:
        return max((sum(a) for a, _ in self.terms), default=-1)

    def is_scalar(self) -> bool:
        return all(not any(a) and not any(b) for a, b in self.terms)

    def scalar_value(self) -> ScalarExpr:
        if not self.is_scalar():
            raise ValueError(f"{self} is not a scalar operator")
        z = (0,) * self.nvars
        return self.terms.get((z, z), ZERO)

    def coefficient_of(self, beta) -> MultiPoly:
        """The polynomial multiplying ``d^beta``."""
        beta = tuple(beta)
        return MultiPoly(
            self.nvars, {a: c for (a, b), c in self.terms.items() if b == beta}, self.names
        )

    # -- arithmetic -----------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, DiffOperator):
            if other.nvars != self.nvars:
                raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
            return DiffOperator.multiplication(other, self.names)
        c = as_scalar(other, strict=False)
        if c is NotImplemented:
            return NotImplemented
        return DiffOperator.scalar(c, self.nvars, self.names)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return DiffOperator._raw(self.nvars, out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return DiffOperator._raw(self.nvars, {k: -c for k, c in self.terms.items()}, self.names)

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

    def scale(self, c) -> "DiffOperator":
        c = as_scalar(c)
        if not c:
            return DiffOperator._raw(self.nvars, {}, self.names)
        return DiffOperator._raw(self.nvars, {k: v * c for k, v in self.terms.items()}, self.names)

    def __mul__(self, other):
        if not isinstance(other, (DiffOperator, MultiPoly)):
            c = as_scalar(other, strict=False)
            if c is NotImplemented:
                return NotImplemented
            return self.scale(c)
        other = self._coerce(other)
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                c12 = c1 * c2
                # per-variable Leibniz expansions of d^b1 t^a2
                choices = []
                for i in range(self.nvars):
                    kmax = min(b1[i], a2[i])
                    choices.append(
                        [(k, comb(b1[i], k) * _falling(a2[i], k)) for k in range(kmax + 1)]
                    )
                for combo in product(*choices):
                    mult = 1
                    for _, m in combo:
                        mult *= m
                    a = tuple(a1[i] + a2[i] - combo[i][0] for i in range(self.nvars))
                    b = tuple(b1[i] - combo[i][0] + b2[i] for i in range(self.nvars))
                    val = c12 * mult if mult != 1 else c12
                    key = (a, b)
                    s = out.get(key)
                    out[key] = val if s is None else s + val
        return DiffOperator._raw(self.nvars, {k: c for k, c in out.items() if c}, self.names)

    def __rmul__(self, other):
        if isinstance(other, MultiPoly):
            return self._coerce(other) * self
        c = as_scalar(other, strict=False)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def __truediv__(self, other):
        c = as_scalar(other, strict=False)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c.inverse())

    def __pow__(self, n: int) -> "DiffOperator":
        if not isinstance(n, int) or n < 0:
            raise ValueError("operator powers must be nonnegative integers")
        result = DiffOperator.identity(self.nvars, self.names)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other) if not isinstance(other, DiffOperator) else other
        if other is NotImplemented:
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- actions --------------------------------------------------------------------
    def apply(self, f: MultiPoly) -> MultiPoly:
        if f.nvars != self.nvars:
            raise ValueError("arity mismatch")
        total = MultiPoly(self.nvars, {}, f.names)
        for (a, b), c in self.terms.items():
            g = f
            for k, p in enumerate(b):
                for _ in range(p):
                    g = g.derivative(k)
            if g:
                mono = MultiPoly(self.nvars, {a: c}, f.names)
                total = total + mono * g
        return total

    def adjoint(self) -> "DiffOperator":
        """Formal adjoint for the L^2 pairing with Lebesgue measure.

        ``(c t^a d^b)^* = (-1)^|b| d^b (conj(c) t^a)``; parameters are real.
        """
        total = DiffOperator._raw(self.nvars, {}, self.names)
        z = (0,) * self.nvars
        for (a, b), c in self.terms.items():
            sign = -1 if sum(b) % 2 else 1
            left = DiffOperator._raw(self.nvars, {(z, b): as_scalar(sign)}, self.names)
            right = DiffOperator._raw(self.nvars, {(a, z): c.conjugate()}, self.names)
            total = total + left * right
        return total

    def map_coefficients(self, fn) -> "DiffOperator":
        return DiffOperator(self.nvars, {k: fn(c) for k, c in self.terms.items()}, self.names)

    def subs_params(self, values: dict) -> "DiffOperator":
        return self.map_coefficients(lambda c: c.subs(values))

    def substitute_linear(self, scales: Sequence) -> "DiffOperator":
        """Rescale coordinates: t_k = scales[k] * u_k (u_k keep the same names).

        Multiplication by t_k becomes scales[k]*u_k and d/dt_k becomes
        (1/scales[k]) d/du_k.
        """
        scales = [as_scalar(s) for s in scales]
        out = {}
        for (a, b), c in self.terms.items():
            f = c
            for k in range(self.nvars):
                if a[k]:
                    f = f * scales[k] ** a[k]
                if b[k]:
                    f = f / scales[k] ** b[k]
            out[(a, b)] = f
        return DiffOperator(self.nvars, out, self.names)

    # -- rendering ------------------------------------------------------------------
    def sorted_terms(self):
        def key(kv):
            (a, b), _ = kv
            return (-sum(b), tuple(-x for x in b), term_order_key(a))

        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        items = []
        for (a, b), c in self.sorted_terms():
            parts = []
            for n, e in zip(self.names, a):
                if e:
                    parts.append(n if e == 1 else f"{n}^{e}")
            for n, e in zip(self.names, b):
                if e:
                    parts.append(f"d_{n}" if e == 1 else f"d_{n}^{e}")
            items.append((c, "*".join(parts)))
        return render_terms(items)

    def __repr__(self) -> str:
        return f"DiffOperator({str(self)!r})"


def commutator(A: DiffOperator, B: DiffOperator) -> DiffOperator:
    """``AB - BA`` in normal order."""
    return A * B - B * A
