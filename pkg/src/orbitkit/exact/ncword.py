"""Formal linear combinations of words: a model of the enveloping algebra."""

from __future__ import annotations

from itertools import permutations
from math import factorial
from typing import Callable, Iterable

from .scalar import ONE, as_scalar

__all__ = ["NCWord", "symmetrize"]


class NCWord:
    """Linear combination of finite sequences of symbols.

    Terms are kept merged and without zero coefficients; iteration order is
    the sorted order of the words (shorter words first).
    """

    __slots__ = ("terms", "alphabet")

    def __init__(self, terms: dict | None = None, alphabet: Iterable[str] | None = None):
        self.alphabet = tuple(alphabet) if alphabet is not None else None
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if self.alphabet is not None:
                bad = [s for s in w if s not in self.alphabet]
                if bad:
                    raise ValueError(f"symbols {bad} not in alphabet {self.alphabet}")
            c = as_scalar(c)
            if c:
                clean[w] = clean.get(w, 0) + c if w in clean else c
        self.terms = {w: c for w, c in sorted(clean.items(), key=lambda kv: (len(kv[0]), kv[0])) if c}

    @classmethod
    def word(cls, *symbols: str, coeff=ONE, alphabet=None) -> "NCWord":
        return cls({tuple(symbols): coeff}, alphabet)

    def __add__(self, other: "NCWord") -> "NCWord":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return NCWord(out, self.alphabet or other.alphabet)

    def __neg__(self):
        return NCWord({w: -c for w, c in self.terms.items()}, self.alphabet)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NCWord):
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out[w] + c1 * c2 if w in out else c1 * c2
            return NCWord(out, self.alphabet or other.alphabet)
        c = as_scalar(other)
        return NCWord({w: v * c for w, v in self.terms.items()}, self.alphabet)

    def __rmul__(self, other):
        c = as_scalar(other)
        return NCWord({w: c * v for w, v in self.terms.items()}, self.alphabet)

    def __eq__(self, other):
        return isinstance(other, NCWord) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, images: dict, one, mul: Callable | None = None):
        """Map each symbol through ``images`` into an associative algebra."""
        mul = mul or (lambda x, y: x * y)
        total = None
        for w, c in self.terms.items():
            val = one
            for s in w:
                val = mul(val, images[s])
            val = val * c
            total = val if total is None else total + val
        return total if total is not None else one * 0

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms.items():
            word = "*".join(w) if w else "1"
            parts.append(f"({c})*{word}")
        return " + ".join(parts)

    __repr__ = __str__


def symmetrize(w: NCWord) -> NCWord:
    """Replace each length-k word by the average over its k! rearrangements."""
    out: dict = {}
    for word, c in w.terms.items():
        k = len(word)
        weight = c / factorial(k)
        for perm in permutations(word):
            out[perm] = out[perm] + weight if perm in out else weight
    return NCWord(out, w.alphabet)
