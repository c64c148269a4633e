"""Kauffman states of closed 3-braid diagrams.

The closure of a word with c letters is modelled as a graph on the 3c
"strand slots" (level j, strand s), level c identified with level 0.  A
crossing j on strands i, i+1 is replaced by either the identity tangle or the
cup-cap tangle on those strands; the third strand passes straight through.
Loops of a state are the cycles of that graph.

Splice convention: for a positive letter the A-splice is the identity tangle
and the B-splice the cup-cap; negative letters swap the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import kernels
from .algebra import LaurentPolynomial
from .braidword import BraidWord

BRACKET_CAP = 24

A = LaurentPolynomial.monomial(1, var="A")
DELTA_LOOP = -(LaurentPolynomial.monomial(2, var="A") + LaurentPolynomial.monomial(-2, var="A"))


class LengthCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SpliceState:
    word: BraidWord
    choice: tuple[str, ...]
    loops: int
    loop_structure: tuple[tuple[tuple[int, int], ...], ...]
    """Per loop, the cyclic sequence of trace endpoints (crossing, end) on it."""
    traces: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    """Per crossing, the (loop, position) of each of its two endpoints."""

    def self_traces(self) -> list[int]:
        return [j for j, (e0, e1) in enumerate(self.traces) if e0[0] == e1[0]]

    def intertwined(self, j: int, k: int) -> bool:
        """Self-traces j and k end on the same loop with alternating endpoints."""
        (lj, p0), (_, p1) = self.traces[j]
        (lk, q0), (_, q1) = self.traces[k]
        if lj != lk or j == k:
            return False
        lo, hi = sorted((p0, p1))
        return (lo < q0 < hi) != (lo < q1 < hi)

    def isolated_self_traces(self) -> list[int]:
        st = self.self_traces()
        return [j for j in st if not any(self.intertwined(j, k) for k in st if k != j)]


def _state_graph(word: BraidWord, cup: Sequence[bool]):
    """Edges of the state graph; trace endpoint (j, e) is node 3c + 2j + e."""
    c = len(word)
    edges = []
    for j, x in enumerate(word.letters):
        i = abs(x) - 1
        o = 2 if i == 0 else 0
        nj = (j + 1) % c
        e0, e1 = 3 * c + 2 * j, 3 * c + 2 * j + 1
        edges.append((3 * j + o, 3 * nj + o))
        if cup[j]:
            a, b = 3 * j + i, 3 * j + i + 1
            p, q = 3 * nj + i, 3 * nj + i + 1
        else:
            a, b = 3 * j + i, 3 * nj + i
            p, q = 3 * j + i + 1, 3 * nj + i + 1
        edges += [(a, e0), (e0, b), (p, e1), (e1, q)]
    return 5 * c, edges


def _cycles(n_nodes: int, edges: list[tuple[int, int]]) -> list[list[int]]:
    """Node sequences of the cycles of a 2-regular multigraph (self-loops allowed)."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n_nodes)]
    for e, (x, y) in enumerate(edges):
        adj[x].append((e, 0))
        adj[y].append((e, 1))
    seen = [False] * n_nodes
    cycles = []
    for start in range(n_nodes):
        if seen[start]:
            continue
        cyc = []
        x, arrived = start, adj[start][0]
        while True:
            seen[x] = True
            cyc.append(x)
            leave = adj[x][1] if adj[x][0] == arrived else adj[x][0]
            e, k = leave
            x = edges[e][1 - k]
            arrived = (e, 1 - k)
            if x == start and arrived == adj[start][0]:
                break
        cycles.append(cyc)
    return cycles


def _cup_flags(word: BraidWord, choice: Sequence[str]) -> list[bool]:
    if len(choice) != len(word):
        raise ValueError(f"choice has length {len(choice)}, word has {len(word)}")
    flags = []
    for x, s in zip(word.letters, choice):
        if s not in ("A", "B"):
            raise ValueError(f"bad splice {s!r}")
        flags.append((s == "B") == (x > 0))
    return flags


def splice(word: BraidWord, choice: Sequence[str]) -> SpliceState:
    cup = _cup_flags(word, choice)
    c = len(word)
    if c == 0:
        return SpliceState(word, (), 3, ((), (), ()), ())
    n_nodes, edges = _state_graph(word, cup)
    cycles = _cycles(n_nodes, edges)
    where: dict[int, tuple[int, int]] = {}
    structure = []
    for li, cyc in enumerate(cycles):
        ends = [x for x in cyc if x >= 3 * c]
        for pos, x in enumerate(ends):
            where[x] = (li, pos)
        structure.append(tuple(divmod(x - 3 * c, 2) for x in ends))
    traces = tuple((where[3 * c + 2 * j], where[3 * c + 2 * j + 1]) for j in range(c))
    return SpliceState(word, tuple(choice), len(cycles), tuple(structure), traces)


def loop_count(word: BraidWord, choice: Sequence[str]) -> int:
    return splice(word, choice).loops


def extreme_states(word: BraidWord) -> tuple[SpliceState, SpliceState]:
    n = len(word)
    return splice(word, "A" * n), splice(word, "B" * n)


@dataclass(frozen=True)
class AdequacyReport:
    a_adequate: bool
    b_adequate: bool
    a_loops: int
    b_loops: int
    a_self_traces: tuple[tuple[int, bool], ...] = field(default=())
    b_self_traces: tuple[tuple[int, bool], ...] = field(default=())
    """(crossing, isolated) for every self-trace of the extreme state."""

    @property
    def adequate(self) -> bool:
        return self.a_adequate and self.b_adequate

    @property
    def semiadequate(self) -> bool:
        return self.a_adequate or self.b_adequate

    @property
    def inadequate(self) -> bool:
        return not self.semiadequate

    def to_json(self) -> dict:
        return {
            "aAdequate": self.a_adequate,
            "bAdequate": self.b_adequate,
            "adequate": self.adequate,
            "semiadequate": self.semiadequate,
            "inadequate": self.inadequate,
            "aLoops": self.a_loops,
            "bLoops": self.b_loops,
            "bSelfTraces": [{"crossing": j, "isolated": iso} for j, iso in self.b_self_traces],
        }


def _self_trace_flags(state: SpliceState) -> tuple[tuple[int, bool], ...]:
    iso = set(state.isolated_self_traces())
    return tuple((j, j in iso) for j in state.self_traces())


def adequacy(word: BraidWord) -> AdequacyReport:
    sa, sb = extreme_states(word)
    return AdequacyReport(
        a_adequate=not sa.self_traces(),
        b_adequate=not sb.self_traces(),
        a_loops=sa.loops,
        b_loops=sb.loops,
        a_self_traces=_self_trace_flags(sa),
        b_self_traces=_self_trace_flags(sb),
    )


def one_flip_adequate(word: BraidWord, side: str) -> bool:
    """Adequacy by definition: every one-flip neighbour of the extreme state has fewer loops."""
    n = len(word)
    other = "B" if side == "A" else "A"
    base = loop_count(word, side * n)
    for j in range(n):
        choice = [side] * n
        choice[j] = other
        if loop_count(word, choice) >= base:
            return False
    return True


# -- the bracket ----------------------------------------------------------------


def _bracket_from_row(coeffs: np.ndarray, offset: int) -> LaurentPolynomial:
    return LaurentPolynomial.from_coeffs(-offset, [int(x) for x in coeffs], "A")


def kauffman_bracket(word: BraidWord) -> LaurentPolynomial:
    """State sum over all 2^c splicings."""
    c = len(word)
    if c > BRACKET_CAP:
        raise LengthCapExceeded(f"state sum capped at {BRACKET_CAP} crossings, got {c}")
    if c == 0:
        return DELTA_LOOP ** 2
    hist = kernels.bracket_hist(word.codes()[None, :])
    coeffs, offset = kernels.bracket_from_hist(hist[0], c)
    return _bracket_from_row(coeffs, offset)


def kauffman_bracket_reference(word: BraidWord) -> LaurentPolynomial:
    """The same state sum, one :func:`splice` per state (slow; for testing)."""
    c = len(word)
    total = LaurentPolynomial.zero("A")
    for s in range(1 << c):
        choice = ["B" if (s >> j) & 1 else "A" for j in range(c)]
        nb = choice.count("B")
        m = loop_count(word, choice)
        total = total + A ** (c - 2 * nb) * DELTA_LOOP ** (m - 1)
    return total


# Temperley-Lieb algebra TL_3 on the basis 1, e1, e2, e1e2, e2e1.
_TL_BASIS = ("1", "e1", "e2", "e1e2", "e2e1")
_TL_CLOSURE_LOOPS = {"1": 3, "e1": 2, "e2": 2, "e1e2": 1, "e2e1": 1}
# right multiplication: basis -> (delta power, basis)
_TL_RMUL = {
    1: {"1": (0, "e1"), "e1": (1, "e1"), "e2": (0, "e2e1"), "e1e2": (0, "e1"), "e2e1": (1, "e2e1")},
    2: {"1": (0, "e2"), "e1": (0, "e1e2"), "e2": (1, "e2"), "e1e2": (1, "e1e2"), "e2e1": (0, "e2")},
}


def bracket_transfer(word: BraidWord) -> LaurentPolynomial:
    """Bracket by sequential composition in TL_3 followed by closure; no length cap."""
    one = LaurentPolynomial.one("A")
    a_inv = A ** -1
    elem = {b: LaurentPolynomial.zero("A") for b in _TL_BASIS}
    elem["1"] = one
    for x in word.letters:
        i = abs(x)
        keep, turn = (A, a_inv) if x > 0 else (a_inv, A)
        new = {b: LaurentPolynomial.zero("A") for b in _TL_BASIS}
        for b, coeff in elem.items():
            if coeff.is_zero():
                continue
            new[b] = new[b] + coeff * keep
            k, target = _TL_RMUL[i][b]
            new[target] = new[target] + coeff * turn * DELTA_LOOP ** k
        elem = new
    total = LaurentPolynomial.zero("A")
    for b, coeff in elem.items():
        total = total + coeff * DELTA_LOOP ** (_TL_CLOSURE_LOOPS[b] - 1)
    return total


def bracket_to_jones(bracket: LaurentPolynomial, writhe: int) -> LaurentPolynomial:
    """(-A^3)^(-w) <D> at A = q^(-1/2), returned in q."""
    terms = {}
    sign = -1 if writhe % 2 else 1
    for k, c in bracket.terms():
        e = k - 3 * writhe
        if e % 2:
            raise ValueError("bracket has exponents of the wrong parity for this writhe")
        terms[-e // 2] = sign * c
    return LaurentPolynomial(terms, var="q")


def jones_via_bracket(word: BraidWord) -> LaurentPolynomial:
    return bracket_to_jones(kauffman_bracket(word), word.exponent_sum)


def jones_via_transfer(word: BraidWord) -> LaurentPolynomial:
    return bracket_to_jones(bracket_transfer(word), word.exponent_sum)


def jones_bracket_arrays(words: np.ndarray, width: int | None = None) -> np.ndarray:
    """Jones coefficient rows for equal-length coded words via the state sum.

    Rows use the layout of :func:`kernels.jones_from_traces` for the same
    ``width`` (default: the word length), so the two pipelines compare with
    ``np.array_equal``.
    """
    n_words, c = words.shape
    width = c if width is None else width
    if c == 0:
        raise ValueError("need at least one crossing")
    hist = kernels.bracket_hist(words)
    coeffs, offset = kernels.bracket_from_hist(hist, c)
    writhe = kernels.exponent_sums(words)
    vw = 3 * width + 4
    out = np.zeros((n_words, 2 * vw + 1), dtype=np.int64)
    k = np.arange(coeffs.shape[1]) - offset
    for n in range(n_words):
        nz = np.nonzero(coeffs[n])[0]
        e = k[nz] - 3 * writhe[n]
        if np.any(e % 2):
            raise ValueError("bracket parity mismatch")
        q = -e // 2
        if np.any(np.abs(q) > vw):
            raise ValueError("bracket-derived Jones exceeds the row width")
        out[n, q + vw] = coeffs[n, nz] * (-1 if writhe[n] % 2 else 1)
    return out


def span(v: LaurentPolynomial) -> int:
    if v.is_zero():
        raise ValueError("span of the zero polynomial")
    return v.span()


def extreme_b_coefficient(word: BraidWord, bracket: LaurentPolynomial | None = None) -> int:
    """Coefficient of A^(-c - 2(|S_B| - 1)), the all-B contribution's extreme degree."""
    bracket = kauffman_bracket(word) if bracket is None else bracket
    sb = extreme_states(word)[1]
    return bracket.coefficient(-len(word) - 2 * (sb.loops - 1))


def adequate_span_prediction(word: BraidWord) -> Fraction:
    """t-span (c + |S_A| + |S_B| - 2)/2 predicted for an adequate closure."""
    sa, sb = extreme_states(word)
    return Fraction(len(word) + sa.loops + sb.loops - 2, 2)

