"""Pulling Delta^-1 factors to the front of a reduced, Delta-free word.

The iteration keeps the braid written as ``Delta^-k * alpha * gamma`` with
``alpha`` positive and ``gamma`` a terminal subword of the input.  It uses

    s_j^-1 s_jbar^-1 = Delta^-1 s_j,
    s_j^-1           = Delta^-1 s_j s_jbar,
    alpha Delta^-1   = Delta^-1 bar(alpha),

where jbar = 3 - j.  So absorbing a negative head letter tau = s_j^-1 (with
or without a following bar(tau)) bars the current alpha, appends the positive
letters ``j`` (resp. ``j, jbar``) and raises k by one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braidword import (
    BraidWord,
    find_pattern,
    is_cyclically_adequate,
    is_reduced,
    syllables,
)
from .burau import DELTA_INV, burau

# (negative head, followed by its bar?) -> positive letters appended after barring alpha
CONVERSION = {
    (-1, True): (1,),
    (-2, True): (2,),
    (-1, False): (1, 2),
    (-2, False): (2, 1),
}


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class GarsideForm:
    """The braid Delta^-k * alpha with alpha a positive word."""

    k: int
    alpha: BraidWord

    def word(self) -> BraidWord:
        """A word for the braid: k copies of Delta^-1 followed by alpha."""
        return DELTA_INV * self.k + self.alpha

    def to_json(self) -> dict:
        return {"k": self.k, "alpha": str(self.alpha)}


def check_input(word: BraidWord) -> None:
    if not is_reduced(word):
        raise PreconditionError(f"{word} is not reduced")
    for pat in ("Delta", "DeltaInv"):
        if find_pattern(word, pat):
            raise PreconditionError(f"{word} contains a {pat} subword")


def garside_form(word: BraidWord) -> GarsideForm:
    check_input(word)
    alpha: list[int] = []
    gamma = list(word.letters)
    k = 0
    pos = 0
    while True:
        while pos < len(gamma) and gamma[pos] > 0:
            alpha.append(gamma[pos])
            pos += 1
        if pos == len(gamma):
            return GarsideForm(k, BraidWord(alpha))
        tau = gamma[pos]
        bar_tau = -(3 - abs(tau))
        paired = pos + 1 < len(gamma) and gamma[pos + 1] == bar_tau
        pos += 2 if paired else 1
        alpha = [3 - x for x in alpha] + list(CONVERSION[(tau, paired)])
        k += 1


def certify_not_unknot(form: GarsideForm) -> bool:
    """True certifies the closure of Delta^-k alpha is not the unknot.

    Needs k >= 2 and alpha cyclically adequate.  For odd k, rotating a letter
    of alpha past Delta^-k bars it, so alpha must also stay adequate across
    the twisted seam, i.e. alpha * bar(alpha) must be cyclically adequate.
    """
    if form.k < 2 or not is_cyclically_adequate(form.alpha):
        return False
    return form.k % 2 == 0 or is_cyclically_adequate(form.alpha + form.alpha.bar())


def round_trip_ok(word: BraidWord, form: GarsideForm) -> bool:
    return burau(form.word()) == burau(word)


def interior_trivial_syllables(alpha: BraidWord) -> list[int]:
    """Positions of trivial syllables of alpha other than the first and the last."""
    if not alpha:
        return []
    entries = syllables(alpha).entries
    return [i for i in range(1, len(entries) - 1) if entries[i] == 1]
