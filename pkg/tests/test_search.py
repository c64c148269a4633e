from __future__ import annotations

from fractions import Fraction

import pytest

from eebraid.braidword import BraidWord, canonicalize, parse_bracket_notation
from eebraid.burau import BurauMatrix, burau_at, generator_at
from eebraid.classify import FAMILY1
from eebraid.search import (
    SearchState,
    admissible_extensions,
    check_t0,
    extend,
    run,
    seed_list,
    seeds,
    trace_conditions_hold,
)


def P(text: str) -> BraidWord:
    return parse_bracket_notation(text)


def state(alpha: str, gamma: str, t0=2) -> SearchState:
    return SearchState(burau_at(P(alpha), t0), P(gamma), Fraction(t0))


# -- seeds ----------------------------------------------------------------------------


def test_eight_seeds():
    assert len(seed_list()) == 8
    assert {(s.case, s.n) for s in seed_list()} == {(1, 3), (2, 2), (2, 1), (3, 1)}


@pytest.mark.parametrize("t0", [2, 3, Fraction(4, 5)])
def test_seed_invariants(t0):
    for seed, st in zip(seed_list(), seeds(t0)):
        assert seed.alpha_word.exponent_sum + seed.gamma.exponent_sum == 0
        assert trace_conditions_hold(st)


def test_case_one_seed_matrix():
    t0 = Fraction(2)
    st = seeds(t0)[0]
    assert st.m == BurauMatrix(-t0 ** -2, t0 ** -3, Fraction(0), t0 ** -3)


def test_bad_t0():
    for bad in (0, 1, -1):
        with pytest.raises(ValueError):
            check_t0(bad)


# -- admissibility and extension ----------------------------------------------------------


def test_admissible_extensions():
    assert 2 not in admissible_extensions(state("", "-1222"))
    assert -2 not in admissible_extensions(state("", "-122"))
    # sigma_2 would leave the closed syllable '1' with two same-sign neighbours
    assert admissible_extensions(state("-2", "-121")) == [1, -2]
    assert 1 not in admissible_extensions(state("", "12-1"))


@pytest.mark.parametrize("gamma,banned", [("1222", 2), ("-2-2-2", -2), ("-1-1-1", -1)])
def test_long_or_unsupported_syllables_are_not_offered(gamma, banned):
    assert banned not in admissible_extensions(state("", gamma))


def test_extend_to_identity():
    st = state("-2", "-121")
    nxt = extend(st, -2)
    assert nxt is not None and nxt.is_complete() and nxt.gamma == P("-121-2")
    assert canonicalize(nxt.gamma) == canonicalize(FAMILY1[3])


def test_extend_matches_direct_trace():
    st = state("-2", "-121")
    t0 = st.t0
    nxt = extend(st, 1)
    direct = (generator_at(-1, t0) @ st.m @ burau_at(st.gamma, t0) @ generator_at(-1, t0)).trace()
    assert (nxt is not None) == (direct == 1 / (-t0))


def test_conjugacy_class_is_conserved():
    for st in seeds(3):
        total = (st.m @ st.gamma_matrix()).trace()
        frontier = [st]
        for _ in range(4):
            nxt = []
            for s in frontier:
                for tau in admissible_extensions(s):
                    child = extend(s, tau)
                    if child is not None:
                        assert (child.m @ child.gamma_matrix()).trace() == total
                        nxt.append(child)
            frontier = nxt


# -- full runs ----------------------------------------------------------------------------


EXPECTED = [P("12-1-2"), P("1-21-2"), P("112-1-2-2"), P("12-1-212-1-2")]


@pytest.mark.parametrize("t0", [2, 3, Fraction(4, 5)])
def test_run_finds_the_non_positive_family(t0):
    res = run(t0, 12)
    assert res.candidates == EXPECTED
    assert res.rejected == []
    assert all(canonicalize(w) in {canonicalize(v) for v in FAMILY1.values()} for w in res.candidates)


def test_run_counts_and_json():
    res = run(2, 8)
    js = res.to_json()
    assert js["t"] == "2" and js["maxLength"] == 8
    assert js["extendablePerLength"]["3"] == 4
    assert res.candidates == EXPECTED


def test_commutator_pruning_keeps_candidates():
    assert run(2, 12, prune_commutator=True).candidates == run(2, 12).candidates


def test_run_rejects_long_searches():
    with pytest.raises(ValueError):
        run(2, 17)
