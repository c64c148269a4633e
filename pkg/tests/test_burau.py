from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from eebraid.algebra import LaurentPolynomial
from eebraid.braidword import BraidWord, parse_bracket_notation
from eebraid.burau import (
    BurauMatrix,
    InconsistentMatrix,
    T,
    burau,
    burau_at,
    burau_batch,
    burau_lettered,
    burau_syllable,
    determinant_exponent,
    preimage_search,
    scalar_central,
    traces_batch,
)

from .strategies import words

ONE = LaurentPolynomial.one()
ZERO = LaurentPolynomial.zero()


def P(text: str) -> BraidWord:
    return parse_bracket_notation(text)


def mono(e: int, c: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(e, c)


@pytest.mark.parametrize(
    "text,entries",
    [
        ("1", (-T, ONE, ZERO, ONE)),
        ("2", (ONE, ZERO, T, -T)),
        ("121", (ZERO, -T, -T * T, ZERO)),
        ("-1-2-1", (ZERO, mono(-2, -1), mono(-1, -1), ZERO)),
        ("121212", (T ** 3, ZERO, ZERO, T ** 3)),
    ],
)
def test_burau_examples(text, entries):
    assert burau(P(text)).entries() == entries


@pytest.mark.parametrize(
    "index,k,entries",
    [
        (1, -1, (mono(-1, -1), mono(-1), ZERO, ONE)),
        (2, 2, (ONE, ZERO, T * (1 - T), T * T)),
        (1, 1, (-T, ONE, ZERO, ONE)),
        (1, 0, (ONE, ZERO, ZERO, ONE)),
    ],
)
def test_syllable_closed_form(index, k, entries):
    assert burau_syllable(index, k).entries() == entries


@given(words(max_size=12))
def test_syllable_route_matches_letter_route(w):
    assert burau(w) == burau_lettered(w)


@given(words(max_size=10), words(max_size=10))
def test_homomorphism(u, v):
    assert burau(u + v) == burau(u) @ burau(v)
    assert (burau(u) @ burau(u.inverse())).is_identity()


@given(words(max_size=12))
def test_determinant(w):
    assert determinant_exponent(burau(w)) == w.exponent_sum


def test_braid_relation():
    assert burau(P("121")) == burau(P("212"))


def test_evaluation():
    assert burau_at(P("1"), 2).entries() == (-2, 1, 0, 1)
    assert burau_at(P("1-2"), 2).trace() == Fraction(-3, 2)
    assert burau_at(P("121212"), 3) == BurauMatrix.scalar(Fraction(27))
    with pytest.raises(ValueError):
        burau_at(P("1"), 0)


@given(words(max_size=8))
def test_evaluation_commutes_with_product(w):
    assert burau_at(w, Fraction(3, 4)) == burau(w).eval(Fraction(3, 4))


def test_scalar_central():
    assert scalar_central(burau(P("121212"))) == 1
    assert scalar_central(burau(P("1122"))) is None
    assert scalar_central(BurauMatrix.identity()) == 0
    assert scalar_central(burau(P("-1-2-1-2-1-2"))) == -1
    with pytest.raises(InconsistentMatrix):
        scalar_central(BurauMatrix.scalar(T))


def test_batch_routes():
    ws = [P("12-1"), P("2"), P("")]
    assert burau_batch(ws) == [burau(w) for w in ws]
    assert traces_batch(ws) == [burau(w).trace() for w in ws]


def test_inverse():
    m = burau(P("12-1-21"))
    assert (m @ m.inverse()).is_identity()


# -- preimages -------------------------------------------------------------------


def test_preimage_of_delta_squared():
    w = preimage_search(BurauMatrix.scalar(T ** 3), 6)
    assert w is not None and len(w) == 6 and burau(w) == BurauMatrix.scalar(T ** 3)


def test_preimage_of_case_one_matrix():
    # t^-3 psi(sigma_1) is the image of Delta^-2 sigma_1
    m = burau(P("1")).scale(mono(-3))
    w = preimage_search(m, 8)
    assert w is not None and burau(w) == m and burau(w) == burau(P("(-1-2)^31"))


def test_no_preimage_for_non_burau_matrix():
    m = BurauMatrix(mono(-2), ZERO, mono(-1), mono(-1, -1))
    assert preimage_search(m, 12) is None


@given(words(max_size=6))
def test_preimage_is_shortest(w):
    found = preimage_search(burau(w), 6)
    assert found is not None and burau(found) == burau(w) and len(found) <= len(w)
