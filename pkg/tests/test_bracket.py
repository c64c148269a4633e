from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from eebraid.algebra import LaurentPolynomial
from eebraid.bracket import (
    DELTA_LOOP,
    LengthCapExceeded,
    adequacy,
    adequate_span_prediction,
    bracket_transfer,
    extreme_b_coefficient,
    extreme_states,
    jones_via_bracket,
    jones_via_transfer,
    kauffman_bracket,
    kauffman_bracket_reference,
    loop_count,
    one_flip_adequate,
    span,
)
from eebraid.braidword import BraidWord, parse_bracket_notation
from eebraid.jones import jones_via_burau

from .strategies import positive_words, words


def P(text: str) -> BraidWord:
    return parse_bracket_notation(text)


def A(e: int, c: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(e, c, var="A")


def q(e: int, c: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(e, c, var="q")


@pytest.mark.parametrize(
    "text,choice,loops",
    [("1", "A", 3), ("1", "B", 2), ("", "", 3), ("-1", "A", 2)],
)
def test_loop_counts(text, choice, loops):
    assert loop_count(P(text), choice) == loops


def test_extreme_states():
    sa, sb = extreme_states(P("1122"))
    assert sa.loops == 3 and sb.loops == 3
    assert extreme_states(P("1212"))[0].loops == 3


def test_bracket_values():
    assert kauffman_bracket(P("1")) == A(5) + A(1)
    assert kauffman_bracket(P("")) == DELTA_LOOP * DELTA_LOOP


@given(words(min_size=1, max_size=8))
def test_three_bracket_routes_agree(w):
    ref = kauffman_bracket_reference(w)
    assert kauffman_bracket(w) == ref
    assert bracket_transfer(w) == ref


@pytest.mark.parametrize(
    "text,v",
    [
        ("1", -q(-1) - q(1)),
        ("", q(-2) + 2 + q(2)),
        ("1212", q(2) + q(6) - q(8)),
        ("1-21-2", q(-4) - q(-2) + 1 - q(2) + q(4)),
    ],
)
def test_jones_values(text, v):
    w = P(text)
    assert jones_via_bracket(w) == v
    assert jones_via_transfer(w) == v
    assert jones_via_burau(w) == v


@given(words(max_size=10))
def test_bracket_and_burau_pipelines_agree(w):
    assert jones_via_bracket(w) == jones_via_burau(w)


def test_bracket_cap():
    with pytest.raises(LengthCapExceeded):
        kauffman_bracket(BraidWord((1,) * 25))
    assert jones_via_transfer(BraidWord((1, 2) * 15)) == jones_via_burau(BraidWord((1, 2) * 15))


def test_span():
    assert span(q(2) + q(6) - q(8)) == 6
    assert span(LaurentPolynomial.one("q")) == 0
    assert span(jones_via_burau(P("1122"))) == 8
    with pytest.raises(ValueError):
        span(LaurentPolynomial.zero("q"))


# -- adequacy ---------------------------------------------------------------------


def test_adequacy_examples():
    r = adequacy(P("1122"))
    assert r.a_adequate and r.b_adequate and r.adequate
    r = adequacy(P("12"))
    assert r.a_adequate and not r.b_adequate and r.semiadequate
    r = adequacy(P("1222"))
    assert r.b_self_traces == ((0, True),)


@given(words(min_size=1, max_size=8))
def test_self_trace_criterion_matches_definition(w):
    r = adequacy(w)
    assert r.a_adequate == one_flip_adequate(w, "A")
    assert r.b_adequate == one_flip_adequate(w, "B")


@given(positive_words(min_size=1, max_size=10))
def test_positive_words_are_a_adequate(w):
    assert adequacy(w).a_adequate


def test_isolated_self_trace_kills_extreme_coefficient():
    assert extreme_b_coefficient(P("1222")) == 0


def test_adequate_span_prediction():
    w = P("1122")
    assert adequate_span_prediction(w) == Fraction(span(jones_via_burau(w)), 2)
