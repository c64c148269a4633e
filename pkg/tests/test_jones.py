from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eebraid.algebra import LaurentPolynomial
from eebraid.braidword import BraidWord, Symmetry, parse_bracket_notation, switch, transform
from eebraid.jones import (
    is_unknot_closure,
    jones_from_trace,
    jones_via_burau,
    link_profile,
    skein_residual,
    switched_profiles,
)
from eebraid.burau import burau

from .strategies import words


def P(text: str) -> BraidWord:
    return parse_bracket_notation(text)


def q(e: int, c: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(e, c, var="q")


def test_jones_from_trace():
    assert jones_from_trace(LaurentPolynomial.constant(2), 0) == q(-2) + 2 + q(2)
    assert jones_via_burau(P("1-2")) == 1


@pytest.mark.parametrize("text,i", [("12", 0), ("1212", 3), ("1-21-2", 1), ("11-2", 2)])
def test_skein_examples(text, i):
    assert skein_residual(P(text), i).is_zero()


@given(words(min_size=1, max_size=10), st.data())
def test_skein_fuzz(w, data):
    i = data.draw(st.integers(0, len(w) - 1))
    assert skein_residual(w, i).is_zero()


@given(words(max_size=10))
def test_mirror_reverses_q(w):
    v = jones_via_burau(w)
    m = jones_via_burau(transform(w, Symmetry.MIRROR))
    assert m == LaurentPolynomial({-e: c for e, c in v.terms()}, "q")


@given(words(max_size=10))
def test_orbit_invariance(w):
    # inverting closes to the mirror image, so pair it with a mirror
    v = jones_via_burau(w)
    assert jones_via_burau(transform(transform(w, Symmetry.INVERT), Symmetry.MIRROR)) == v
    for s in (Symmetry.FLIP, Symmetry.rotate(1)):
        assert jones_via_burau(transform(w, s)) == v


@pytest.mark.parametrize("text,expect", [("12", True), ("1-21-2", False), ("121212", False), ("1-2", True)])
def test_unknot_examples(text, expect):
    assert is_unknot_closure(P(text)) is expect


@given(words(max_size=10))
def test_exponent_parity_tracks_components(w):
    # V has only even q-powers iff the closure has an odd number of components
    odd_components = link_profile(w).component_count % 2 == 1
    assert all((e % 2 == 0) == odd_components for e, _ in jones_via_burau(w).terms())


def test_link_profiles():
    p = link_profile(P("11"))
    assert p.component_count == 3 and sorted(sum(p.linking, ())) == [0] * 7 + [1, 1]
    assert link_profile(P("")).key() == (3, (0, 0, 0))
    assert link_profile(P("12")).key() == (1, ())


@given(words(min_size=1, max_size=10))
def test_switched_profiles_match_direct(w):
    assert switched_profiles(w) == [link_profile(switch(w, i)) for i in range(len(w))]


@given(words(max_size=10))
def test_trace_depends_on_conjugacy_class_only(w):
    assert burau(transform(w, Symmetry.rotate(2))).trace() == burau(w).trace()
