"""Seed-and-extend search for everywhere-trivial words at a rational t.

A state is a pair (M, gamma) standing for braids alpha * gamma with
psi(alpha) = M, where every crossing switch inside gamma already closes to
the unknot.  Extending by a letter tau conjugates the braid to
(tau^-1 alpha) * (gamma tau), so M becomes psi(tau^-1) M and only the new
crossing needs testing.  A state with M = I is a complete word gamma.

All arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .braidword import COMMUTATOR_WORDS, BraidWord, _runs, canonicalize
from .burau import BurauMatrix, burau_at, generator_at
from .casesolver import expected_alpha
from .classify import EEReport, classify_ee

LETTER_ORDER = (1, 2, -1, -2)
MAX_SEARCH_LEN = 16

# (case, n, gamma); the alpha words come from the case solver
SEED_SHAPES = (
    (1, 3, BraidWord((1, 2, 2, 2, 1))),
    (2, 2, BraidWord((-1, 2, 2, 1))),
    (2, 1, BraidWord((-1, 2, 1))),
    (3, 1, BraidWord((-1, 2, -1))),
)


@dataclass(frozen=True)
class Seed:
    case: int
    n: int
    alpha_word: BraidWord
    gamma: BraidWord


@dataclass(frozen=True)
class SearchState:
    m: BurauMatrix
    gamma: BraidWord
    t0: Fraction
    p: BurauMatrix | None = None
    """psi_t0(gamma), kept to avoid recomputation."""

    def gamma_matrix(self) -> BurauMatrix:
        return self.p if self.p is not None else burau_at(self.gamma, self.t0)

    def is_complete(self) -> bool:
        return self.m == BurauMatrix.identity("rational")


def _unknot_trace(letter: int, t0: Fraction) -> Fraction:
    """(-t0)^-1 after switching a positive letter, (-t0)^+1 after a negative one."""
    return 1 / (-t0) if letter > 0 else -t0


def check_t0(t0) -> Fraction:
    t0 = Fraction(t0)
    if t0 in (0, 1, -1):
        raise ValueError(f"t0 = {t0} is not allowed")
    return t0


def seed_list() -> list[Seed]:
    out = []
    for case, n, gamma in SEED_SHAPES:
        for alpha in expected_alpha(case, n):
            out.append(Seed(case, n, alpha, gamma))
    return out


def seeds(t0) -> list[SearchState]:
    t0 = check_t0(t0)
    return [SearchState(burau_at(s.alpha_word, t0), s.gamma, t0, burau_at(s.gamma, t0)) for s in seed_list()]


def trace_conditions_hold(state: SearchState) -> bool:
    """Every switch inside gamma gives the unknot trace."""
    g = state.gamma
    for i, x in enumerate(g.letters):
        sw = BraidWord(g.letters[:i] + (-x,) + g.letters[i + 1:])
        if (state.m @ burau_at(sw, state.t0)).trace() != _unknot_trace(x, state.t0):
            return False
    return True


# -- admissible syllables ---------------------------------------------------------


def _interior_ok(length: int, same_sign_neighbours: int) -> bool:
    if length >= 4:
        return False
    if length == 3:
        return same_sign_neighbours == 2
    if length == 2:
        return same_sign_neighbours == 1
    return same_sign_neighbours <= 1


def _suffix_ok(letters: tuple[int, ...]) -> bool:
    """Admissibility of the syllables of a word whose left end is unknown and right end still growing."""
    runs = [abs(e) for _, e in _runs(letters)]
    sign = [1 if e > 0 else -1 for _, e in _runs(letters)]
    if runs[-1] >= 4:
        return False
    # the syllable just closed by the newest letter (never the first one)
    if len(runs) >= 3:
        j = len(runs) - 2
        same = (sign[j - 1] == sign[j]) + (sign[j + 1] == sign[j])
        if not _interior_ok(runs[j], same):
            return False
    # partial checks on the open last syllable, whose left neighbour is known
    if len(runs) >= 2:
        j = len(runs) - 1
        left_same = sign[j - 1] == sign[j]
        if runs[j] == 3 and not left_same:
            return False
    return True


def admissible_extensions(state: SearchState) -> list[int]:
    g = state.gamma.letters
    out = []
    for tau in LETTER_ORDER:
        if g and tau == -g[-1]:
            continue
        if _suffix_ok(g + (tau,)):
            out.append(tau)
    return out


def extend(state: SearchState, tau: int) -> SearchState | None:
    t0 = state.t0
    tau_inv = generator_at(-tau, t0)
    m_new = tau_inv @ state.m
    p = state.gamma_matrix()
    if (m_new @ p @ tau_inv).trace() != _unknot_trace(tau, t0):
        return None
    return SearchState(m_new, state.gamma + BraidWord((tau,)), t0, p @ generator_at(tau, t0))


def _ends_with_commutator(gamma: BraidWord) -> bool:
    return len(gamma) >= 4 and BraidWord(gamma.letters[-4:]) in COMMUTATOR_WORDS


# -- driver ---------------------------------------------------------------------------


@dataclass
class Emission:
    word: BraidWord
    canonical: BraidWord
    seed_index: int
    report: EEReport

    @property
    def verified(self) -> bool:
        return self.report.v_ee and self.report.everywhere_trivial

    def to_json(self) -> dict:
        return {
            "word": str(self.word),
            "canonical": str(self.canonical),
            "seed": self.seed_index,
            "verified": self.verified,
            **self.report.family.to_json(),
        }


@dataclass
class SearchResult:
    t0: Fraction
    max_len: int
    emissions: list[Emission] = field(default_factory=list)
    extendable_counts: dict[int, int] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def candidates(self) -> list[BraidWord]:
        """Distinct canonical forms of the symbolically verified emissions, sorted."""
        seen = {e.canonical for e in self.emissions if e.verified}
        return sorted(seen, key=lambda w: (len(w), w.code()))

    @property
    def rejected(self) -> list[Emission]:
        return [e for e in self.emissions if not e.verified]

    def to_json(self) -> dict:
        return {
            "t": str(self.t0),
            "maxLength": self.max_len,
            "candidates": [str(w) for w in self.candidates],
            "rejectedEmissions": [e.to_json() for e in self.rejected],
            "emissionCount": len(self.emissions),
            "extendablePerLength": {str(k): v for k, v in sorted(self.extendable_counts.items())},
            "seconds": round(self.seconds, 3),
        }


def run(t0, max_len: int, prune_commutator: bool = False, prune_from: int = 10) -> SearchResult:
    """Depth-first search from all eight seeds up to words of length max_len.

    With ``prune_commutator`` a word longer than ``prune_from`` whose newest
    four letters form a commutator x y x^-1 y^-1 is discarded: such a word is
    everywhere equivalent only if the shorter word with the commutator
    replaced by y^-1 x is, and those were covered up to ``prune_from``.
    """
    if max_len > MAX_SEARCH_LEN:
        raise ValueError(f"max_len must be at most {MAX_SEARCH_LEN}")
    t0 = check_t0(t0)
    start = time.perf_counter()
    result = SearchResult(t0, max_len)
    verdicts: dict[BraidWord, EEReport] = {}
    counts = result.extendable_counts

    for index, seed in enumerate(seeds(t0)):
        stack = [seed]
        while stack:
            state = stack.pop()
            n = len(state.gamma)
            if n > max_len:
                continue
            counts[n] = counts.get(n, 0) + 1
            if state.is_complete():
                canon = canonicalize(state.gamma)
                if canon not in verdicts:
                    verdicts[canon] = classify_ee(state.gamma)
                result.emissions.append(Emission(state.gamma, canon, index, verdicts[canon]))
            if n == max_len:
                continue
            children = []
            for tau in admissible_extensions(state):
                nxt = extend(state, tau)
                if nxt is None:
                    continue
                if prune_commutator and len(nxt.gamma) > prune_from and _ends_with_commutator(nxt.gamma):
                    continue
                children.append(nxt)
            stack.extend(reversed(children))
    result.seconds = time.perf_counter() - start
    return result
