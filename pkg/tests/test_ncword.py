from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from orbitkit.exact import as_scalar
from orbitkit.exact.ncword import NCWord, symmetrize

words = st.lists(st.sampled_from("XYZ"), min_size=0, max_size=4)


def test_pair():
    s = symmetrize(NCWord.word("X", "Y"))
    half = as_scalar(Fraction(1, 2))
    assert s == NCWord({("X", "Y"): half, ("Y", "X"): half})


def test_square_is_fixed():
    w = NCWord.word("X", "X")
    assert symmetrize(w) == w


def test_triple_has_six_terms():
    s = symmetrize(NCWord.word("X", "Y", "Z"))
    assert len(s.terms) == 6
    assert all(c == as_scalar(Fraction(1, 6)) for c in s.terms.values())


@given(st.lists(words, min_size=1, max_size=3))
def test_idempotent(ws):
    w = NCWord({})
    for x in ws:
        w = w + NCWord.word(*x)
    s = symmetrize(w)
    assert symmetrize(s) == s
