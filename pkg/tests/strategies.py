from __future__ import annotations

from hypothesis import strategies as st

from eebraid.algebra import LaurentPolynomial
from eebraid.braidword import BraidWord

letters = st.sampled_from((1, 2, -1, -2))


def words(min_size: int = 0, max_size: int = 10):
    return st.lists(letters, min_size=min_size, max_size=max_size).map(BraidWord)


def positive_words(min_size: int = 0, max_size: int = 10):
    return st.lists(st.sampled_from((1, 2)), min_size=min_size, max_size=max_size).map(BraidWord)


def reduced_words(min_size: int = 0, max_size: int = 10):
    def strip(ls):
        out = []
        for x in ls:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return BraidWord(out)

    return st.lists(letters, min_size=min_size, max_size=max_size).map(strip)


def laurent(var: str = "t", max_terms: int = 6, lo: int = -4, hi: int = 4, coeff: int = 12):
    return st.dictionaries(st.integers(lo, hi), st.integers(-coeff, coeff), max_size=max_terms).map(
        lambda d: LaurentPolynomial(d, var))
