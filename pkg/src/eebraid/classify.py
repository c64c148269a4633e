"""Everywhere-equivalence verdicts, family matching and exhaustive enumeration.

Every crossing-switched version of a word is compared through its Jones
polynomial (from the Burau trace) together with its :class:`LinkProfile`.
For positive words all switches have the same exponent sum, so equal traces
and equal Jones polynomials are the same condition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import kernels
from .braidword import BraidWord, canonicalize, switch
from .burau import burau, scalar_central
from .jones import jones_array_to_poly, switched_profiles

FAMILY1 = {
    1: BraidWord((1, -2)),
    2: BraidWord((1, -2, 1, -2)),
    3: BraidWord((1, 2, -1, -2)),
    4: BraidWord((1, 2, -1, -2, 1, 2, -1, -2)),
    5: BraidWord((1, -2, -1, -1, 2, 2)),
}
FAMILY1_CANONICAL = {canonicalize(w): v for v, w in FAMILY1.items()}

MIXED_SIGN_CAVEAT = "mixed-sign word: equivalence established only up to Jones polynomial and linking data"


@dataclass(frozen=True)
class FamilyLabel:
    kind: str  # NonPositive | Central | Symmetric | Split | Trivial | None
    variant: int | None = None
    k: int | None = None
    l: int | None = None

    @property
    def matched(self) -> bool:
        return self.kind != "None"

    def to_json(self) -> dict:
        out: dict = {"family": self.kind}
        for name in ("variant", "l", "k"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        return out

    def __str__(self):
        args = ", ".join(f"{n}={getattr(self, n)}" for n in ("variant", "l", "k") if getattr(self, n) is not None)
        return f"{self.kind}({args})" if args else self.kind


NO_FAMILY = FamilyLabel("None")


def _symmetric_shape(word: BraidWord) -> tuple[int, int] | None:
    n = len(word)
    for l in range(1, n // 2 + 1):
        if n % (2 * l):
            continue
        k = n // (2 * l)
        if canonicalize(BraidWord(((1,) * l + (2,) * l) * k)) == word:
            return l, k
    return None


def family_match(word: BraidWord) -> FamilyLabel:
    """Match the canonical form of ``word`` against the four families (and the empty word)."""
    w = canonicalize(word)
    if w in FAMILY1_CANONICAL:
        return FamilyLabel("NonPositive", variant=FAMILY1_CANONICAL[w])
    if len(w) == 0:
        return FamilyLabel("Trivial")
    if w.is_positive() or w.is_negative():
        k = scalar_central(burau(word))
        if k is not None:
            return FamilyLabel("Central", k=k)
    shape = _symmetric_shape(w)
    if shape is not None:
        return FamilyLabel("Symmetric", l=shape[0], k=shape[1])
    if w.is_split():
        return FamilyLabel("Split", k=len(w))
    return NO_FAMILY


@dataclass(frozen=True)
class EEReport:
    v_ee: bool
    psi_ee: bool
    everywhere_trivial: bool
    everywhere_different: bool
    undetermined: bool
    family: FamilyLabel = NO_FAMILY
    caveat: str | None = None
    same_sign_shared_v: bool = False
    """Some two switches of letters of the same sign give equal Jones polynomials."""

    def to_json(self) -> dict:
        out = {
            "vEE": self.v_ee,
            "psiEE": self.psi_ee,
            "everywhereTrivial": self.everywhere_trivial,
            "everywhereDifferent": self.everywhere_different,
            "undetermined": self.undetermined,
            **self.family.to_json(),
        }
        if self.caveat:
            out["caveat"] = self.caveat
        return out


# -- batch evaluation ----------------------------------------------------------


@dataclass
class _Flags:
    psi_ee: np.ndarray
    v_equal: np.ndarray
    v_unit: np.ndarray
    jones: np.ndarray
    traces: np.ndarray


def _batch_flags(words: np.ndarray) -> _Flags:
    """Per-word comparisons of the switched traces and Jones rows (L >= 1)."""
    traces = kernels.switched_traces(words)
    esums = kernels.exponent_sums(words)[:, None] + np.where(words < 2, -2, 2)
    jones = kernels.jones_from_traces(traces, esums)
    psi_ee = np.all(traces == traces[:, :1], axis=(1, 2))
    v_equal = np.all(jones == jones[:, :1], axis=(1, 2))
    unit = np.zeros(jones.shape[-1], dtype=np.int64)
    unit[(jones.shape[-1] - 1) // 2] = 1
    v_unit = np.all(jones == unit, axis=(1, 2))
    return _Flags(psi_ee, v_equal, v_unit, jones, traces)


def _details(word: BraidWord, jones_rows: np.ndarray, v_equal: bool) -> tuple[bool, bool, bool]:
    """(vEE, everywhere different, same-sign shared V) for one word with L >= 1."""
    keys = [r.tobytes() for r in jones_rows]
    profiles = None
    if v_equal:
        profiles = switched_profiles(word)
        v_ee = all(p == profiles[0] for p in profiles)
    else:
        v_ee = False
    n = len(word)
    if n < 2:
        different = False
    elif len(set(keys)) == n:
        different = True
    else:
        profiles = profiles or switched_profiles(word)
        combined = {(k, p.key()) for k, p in zip(keys, profiles)}
        different = len(combined) == n
    seen = set()
    shared = False
    for x, k in zip(word.letters, keys):
        tag = (x > 0, k)
        if tag in seen:
            shared = True
            break
        seen.add(tag)
    return v_ee, different, shared


def _report(word: BraidWord, psi_ee: bool, v_ee: bool, unit: bool, different: bool, shared: bool) -> EEReport:
    fam = family_match(word) if v_ee else NO_FAMILY
    mixed = not (word.is_positive() or word.is_negative())
    return EEReport(
        v_ee=v_ee,
        psi_ee=psi_ee,
        everywhere_trivial=unit and len(word) > 0,
        everywhere_different=different,
        undetermined=v_ee and not fam.matched,
        family=fam,
        caveat=MIXED_SIGN_CAVEAT if v_ee and mixed and len(word) >= 2 else None,
        same_sign_shared_v=shared,
    )


def classify_ee(word: BraidWord) -> EEReport:
    if len(word) == 0:
        return _report(word, True, True, False, False, False)
    f = _batch_flags(word.codes()[None, :])
    v_ee, different, shared = _details(word, f.jones[0], bool(f.v_equal[0]))
    if len(word) < 2:
        v_ee = True
    return _report(word, bool(f.psi_ee[0]), v_ee, bool(f.v_unit[0]), different, shared)


def switched_invariants(word: BraidWord) -> list[tuple]:
    """(V, exponent sum, LinkProfile) for each crossing-switched word."""
    if len(word) == 0:
        return []
    f = _batch_flags(word.codes()[None, :])
    profiles = switched_profiles(word)
    out = []
    for i in range(len(word)):
        sw = switch(word, i)
        out.append((jones_array_to_poly(f.jones[0, i]), sw.exponent_sum, profiles[i]))
    return out


# -- family words ----------------------------------------------------------------


def _positive_words(length: int) -> np.ndarray:
    if length == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.array(list(itertools.product((0, 1), repeat=length)), dtype=np.int8)


def central_positive_words(length: int) -> list[BraidWord]:
    """All positive words of the given length with scalar Burau matrix."""
    if length == 0 or length % 6:
        return []
    words = _positive_words(length)
    m = kernels.burau_batch(words)
    scalar = np.all(m[:, 1] == 0, axis=1) & np.all(m[:, 2] == 0, axis=1) & np.all(m[:, 0] == m[:, 3], axis=1)
    return [BraidWord.from_codes(w) for w in words[scalar]]


def family_words(max_len: int) -> dict[BraidWord, FamilyLabel]:
    """Canonical forms of every word of the four families up to max_len."""
    out: dict[BraidWord, FamilyLabel] = {}

    def add(w: BraidWord, label: FamilyLabel):
        out.setdefault(canonicalize(w), label)

    for v, w in FAMILY1.items():
        if len(w) <= max_len:
            add(w, FamilyLabel("NonPositive", variant=v))
    add(BraidWord(), FamilyLabel("Trivial"))
    for n in range(6, max_len + 1, 6):
        for w in central_positive_words(n):
            add(w, FamilyLabel("Central", k=n // 6))
    for l in range(1, max_len // 2 + 1):
        for k in range(1, max_len // (2 * l) + 1):
            add(BraidWord(((1,) * l + (2,) * l) * k), FamilyLabel("Symmetric", l=l, k=k))
    for k in range(1, max_len + 1):
        add(BraidWord((1,) * k), FamilyLabel("Split", k=k))
    return out


# -- enumeration -----------------------------------------------------------------


@dataclass
class EnumerationSummary:
    max_len: int
    visited: dict[int, int] = field(default_factory=dict)
    v_ee: list[BraidWord] = field(default_factory=list)
    psi_ee: list[BraidWord] = field(default_factory=list)
    everywhere_trivial: list[BraidWord] = field(default_factory=list)
    everywhere_different: list[BraidWord] = field(default_factory=list)
    undetermined: list[BraidWord] = field(default_factory=list)
    no_same_sign_pair: list[BraidWord] = field(default_factory=list)
    family_counts: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "maxLength": self.max_len,
            "visitedPerLength": {str(k): v for k, v in sorted(self.visited.items())},
            "familyCounts": dict(sorted(self.family_counts.items())),
            "vEE": [str(w) for w in self.v_ee],
            "everywhereTrivial": [str(w) for w in self.everywhere_trivial],
            "everywhereDifferentCount": len(self.everywhere_different),
            "everywhereDifferent": [str(w) for w in self.everywhere_different],
            "undetermined": [str(w) for w in self.undetermined],
        }


def enumerate_words(max_len: int, emit: Callable[[BraidWord, EEReport], None] | None = None,
                    lengths: Iterable[int] | None = None) -> EnumerationSummary:
    """Classify every canonical word of length <= max_len.

    ``emit`` receives (word, report) for each visited word in ascending
    (length, code) order.
    """
    if max_len > 14:
        raise ValueError("max_len must be at most 14")
    summary = EnumerationSummary(max_len)
    for length in (range(max_len + 1) if lengths is None else lengths):
        count = 0
        for block in kernels.canonical_words(length):
            count += block.shape[0]
            if length == 0:
                reports = [(BraidWord(), classify_ee(BraidWord()))]
            else:
                f = _batch_flags(block)
                reports = []
                for n in range(block.shape[0]):
                    w = BraidWord.from_codes(block[n])
                    v_ee, different, shared = _details(w, f.jones[n], bool(f.v_equal[n]))
                    if length < 2:
                        v_ee = True
                    reports.append((w, _report(w, bool(f.psi_ee[n]), v_ee, bool(f.v_unit[n]), different, shared)))
            for w, r in reports:
                _accumulate(summary, w, r)
                if emit is not None:
                    emit(w, r)
        summary.visited[length] = count
    return summary


def _accumulate(s: EnumerationSummary, w: BraidWord, r: EEReport) -> None:
    if r.v_ee:
        s.v_ee.append(w)
        s.family_counts[r.family.kind] = s.family_counts.get(r.family.kind, 0) + 1
    if r.psi_ee:
        s.psi_ee.append(w)
    if r.everywhere_trivial:
        s.everywhere_trivial.append(w)
    if r.everywhere_different:
        s.everywhere_different.append(w)
    if r.undetermined:
        s.undetermined.append(w)
    if len(w) >= 2 and not r.same_sign_shared_v:
        s.no_same_sign_pair.append(w)
