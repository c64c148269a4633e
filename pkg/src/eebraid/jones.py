"""Jones polynomials of closed 3-braids from the Burau trace, and cheap link data.

Jones polynomials are :class:`LaurentPolynomial` objects in the variable
``q`` with q^2 = t, so half-integral t-powers become odd q-powers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .algebra import LaurentPolynomial
from .braidword import BraidWord, smooth, switch
from .burau import burau

JonesPolynomial = LaurentPolynomial

Q = LaurentPolynomial.monomial(1, var="q")
ONE_Q = LaurentPolynomial.one("q")


class CrossCheckError(AssertionError):
    """Two independent computations of the same quantity disagree."""


def jones_from_trace(trace: LaurentPolynomial, exponent_sum: int) -> LaurentPolynomial:
    """V = (-q)^(e-2) (q^2 tr(q^2) + 1 + q^4)."""
    tr_q = trace.substitute("q", scale=2)
    inner = Q ** 2 * tr_q + 1 + Q ** 4
    sign = -1 if (exponent_sum - 2) % 2 else 1
    return inner.shift(exponent_sum - 2).scale(sign)


def jones_via_burau(word: BraidWord) -> LaurentPolynomial:
    return jones_from_trace(burau(word).trace(), word.exponent_sum)


def jones_array_to_poly(row: np.ndarray) -> LaurentPolynomial:
    width = (row.shape[-1] - 1) // 2
    return LaurentPolynomial.from_coeffs(-width, [int(x) for x in row], "q")


def jones_burau_arrays(words: np.ndarray, lengths: np.ndarray | None = None,
                       width: int | None = None) -> np.ndarray:
    """Batch Jones rows (layout of :func:`kernels.jones_from_traces`)."""
    traces = kernels.trace_batch(words, lengths, width)
    return kernels.jones_from_traces(traces, kernels.exponent_sums(words, lengths))


def skein_residual(word: BraidWord, i: int) -> LaurentPolynomial:
    """t^-1 V(L+) - t V(L-) - (q - q^-1) V(L0) at letter i; identically zero."""
    if not 0 <= i < len(word):
        raise IndexError(f"letter {i} out of range")
    x = word[i]
    plus = word if x > 0 else switch(word, i)
    minus = switch(plus, i)
    zero = smooth(word, i)
    return (Q ** -2 * jones_via_burau(plus) - Q ** 2 * jones_via_burau(minus)
            - (Q - Q ** -1) * jones_via_burau(zero))


def is_unknot_closure(word: BraidWord) -> bool:
    """V == 1, cross-checked against the trace criterion tr = (-t)^(+-1) when [w] = +-2."""
    v_test = jones_via_burau(word) == 1
    e = word.exponent_sum
    if abs(e) == 2:
        target = LaurentPolynomial.monomial(e // 2, -1)  # (-t)^(e/2)
        tr_test = burau(word).trace() == target
        if tr_test != v_test:
            raise CrossCheckError(f"unknot tests disagree on {word}")
    return v_test


@dataclass(frozen=True)
class LinkProfile:
    """Component count and pairwise linking numbers of a closed 3-braid."""

    component_count: int
    linking: tuple[tuple[int, ...], ...]

    def key(self) -> tuple:
        """Invariant under relabelling the components."""
        pairs = sorted(self.linking[i][j] for i in range(self.component_count)
                       for j in range(i + 1, self.component_count))
        return (self.component_count, tuple(pairs))

    def __eq__(self, other):
        if not isinstance(other, LinkProfile):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def to_json(self) -> dict:
        return {"componentCount": self.component_count, "linking": [list(r) for r in self.linking]}


def strand_components(word: BraidWord) -> tuple[list[int], list[int]]:
    """(component of each start position, component pair crossing at each letter).

    Returns the component label per start position and, per letter, the labels
    of the two strands it crosses (packed as ``3*c1 + c2``).
    """
    perm = [0, 1, 2]  # perm[p] = start position of the strand now at position p
    crossings = []
    for x in word.letters:
        i = abs(x) - 1
        crossings.append((perm[i], perm[i + 1]))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    # the strand starting at s ends at position p where perm[p] == s, then continues from p
    end = {perm[p]: p for p in range(3)}
    label = [-1, -1, -1]
    n = 0
    for s in range(3):
        if label[s] >= 0:
            continue
        x = s
        while label[x] < 0:
            label[x] = n
            x = end[x]
        n += 1
    return label, [3 * label[a] + label[b] for a, b in crossings]


def link_profile(word: BraidWord) -> LinkProfile:
    label, pairs = strand_components(word)
    n = max(label) + 1
    twice = [[0] * n for _ in range(n)]
    for x, packed in zip(word.letters, pairs):
        a, b = divmod(packed, 3)
        if a != b:
            s = 1 if x > 0 else -1
            twice[a][b] += s
            twice[b][a] += s
    return LinkProfile(n, tuple(tuple(v // 2 for v in row) for row in twice))


def switched_profiles(word: BraidWord) -> list[LinkProfile]:
    """Link profiles of every crossing-switched word, from one component analysis."""
    label, pairs = strand_components(word)
    n = max(label) + 1
    base = [[0] * n for _ in range(n)]
    for x, packed in zip(word.letters, pairs):
        a, b = divmod(packed, 3)
        if a != b:
            base[a][b] += 1 if x > 0 else -1
            base[b][a] += 1 if x > 0 else -1
    out = []
    for x, packed in zip(word.letters, pairs):
        a, b = divmod(packed, 3)
        twice = [row[:] for row in base]
        if a != b:
            d = -2 if x > 0 else 2
            twice[a][b] += d
            twice[b][a] += d
        out.append(LinkProfile(n, tuple(tuple(v // 2 for v in row) for row in twice)))
    return out
