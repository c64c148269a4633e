"""Words in the generators of the 3-braid group.

A letter is a signed int: ``1``, ``2`` for the Artin generators and ``-1``,
``-2`` for their inverses.  Words are immutable tuples of letters wrapped in
:class:`BraidWord`.  The bracket notation (``"1(2-1)^4-2-1"``) is the text
format for words everywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

# canonical letter order 1 < 2 < -1 < -2
LETTER_CODE = {1: 0, 2: 1, -1: 2, -2: 3}
CODE_LETTER = (1, 2, -1, -2)


class Letter(NamedTuple):
    index: int
    sign: int

    @classmethod
    def of(cls, x: int) -> "Letter":
        return cls(abs(x), 1 if x > 0 else -1)

    def value(self) -> int:
        return self.index * self.sign


class BraidWord:
    """An immutable word in sigma_1^{+-1}, sigma_2^{+-1}."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        letters = tuple(int(x) for x in letters)
        for x in letters:
            if x not in LETTER_CODE:
                raise ValueError(f"invalid letter {x}")
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("BraidWord is immutable")

    @classmethod
    def from_codes(cls, codes: Sequence[int]) -> "BraidWord":
        return cls(CODE_LETTER[int(c)] for c in codes)

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        return parse_bracket_notation(text)

    def codes(self) -> np.ndarray:
        return np.array([LETTER_CODE[x] for x in self.letters], dtype=np.int8)

    def code(self) -> int:
        """Base-4 integer of the codes, first letter most significant."""
        c = 0
        for x in self.letters:
            c = 4 * c + LETTER_CODE[x]
        return c

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return BraidWord(self.letters[i])
        return self.letters[i]

    def __add__(self, other):
        if isinstance(other, BraidWord):
            return BraidWord(self.letters + other.letters)
        return BraidWord(self.letters + tuple(other))

    def __mul__(self, n: int):
        return BraidWord(self.letters * n)

    def __eq__(self, other):
        if isinstance(other, BraidWord):
            return self.letters == other.letters
        if isinstance(other, tuple):
            return self.letters == other
        return NotImplemented

    def __lt__(self, other: "BraidWord"):
        return sort_key(self) < sort_key(other)

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"BraidWord({render(self) or 'ε'})"

    def __str__(self):
        return render(self)

    def letter(self, i: int) -> Letter:
        return Letter.of(self.letters[i])

    @property
    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def is_negative(self) -> bool:
        return all(x < 0 for x in self.letters)

    def indices(self) -> set[int]:
        return {abs(x) for x in self.letters}

    def is_split(self) -> bool:
        return len(self.indices()) < 2

    def negative_count(self) -> int:
        return sum(1 for x in self.letters if x < 0)

    def inverse(self) -> "BraidWord":
        return BraidWord(-x for x in reversed(self.letters))

    def bar(self) -> "BraidWord":
        return BraidWord(_flip(x) for x in self.letters)


def sort_key(w: BraidWord) -> tuple:
    return (len(w), tuple(LETTER_CODE[x] for x in w.letters))


def _flip(x: int) -> int:
    return (3 - abs(x)) * (1 if x > 0 else -1)


# -- bracket notation --------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Parser:
    IGNORED = set(" \t\n\r[]|")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos] in self.IGNORED:
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def word(self, depth: int) -> list[int]:
        out: list[int] = []
        while True:
            c = self.peek()
            if c is None or c == ")":
                if c == ")" and depth == 0:
                    raise ParseError("unbalanced ')'", self.pos)
                return out
            out.extend(self.item(depth))

    def item(self, depth: int) -> list[int]:
        start = self.pos
        c = self.peek()
        if c == "(":
            self.pos += 1
            atom = self.word(depth + 1)
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
        else:
            sign = 1
            if c == "-":
                sign = -1
                self.pos += 1
                c = self.peek()
            if c not in ("1", "2"):
                raise ParseError(f"expected generator 1 or 2, got {c!r}", self.pos)
            self.pos += 1
            atom = [sign * int(c)]
        if self.peek() == "^":
            self.pos += 1
            n = self.integer()
            if n == 0:
                raise ParseError("zero exponent", start)
            if n < 0:
                atom = [-x for x in reversed(atom)]
            atom = atom * abs(n)
        return atom

    def integer(self) -> int:
        braced = self.peek() == "{"
        if braced:
            self.pos += 1
        c = self.peek()
        sign = 1
        if c == "-":
            sign = -1
            self.pos += 1
        start = self.pos
        # unbraced exponents are one digit, so "^-21" is "^-2" then "1"
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
            if not braced:
                break
        digits = self.text[start:self.pos]
        if not digits:
            raise ParseError("expected integer exponent", start)
        if digits[0] == "0":
            raise ParseError("zero exponent" if digits == "0" else "leading zero in exponent", start)
        if braced:
            if self.peek() != "}":
                raise ParseError("expected '}'", self.pos)
            self.pos += 1
        return sign * int(digits)


def parse_bracket_notation(text: str) -> BraidWord:
    """Parse bracket notation.  ``^-n`` on a group inverts it (reverse, negate).

    Whitespace, ``[``, ``]`` and ``|`` are cosmetic.
    """
    p = _Parser(text)
    letters = p.word(0)
    if p.peek() is not None:
        raise ParseError(f"unexpected {p.peek()!r}", p.pos)
    return BraidWord(letters)


def render(word: BraidWord, style: str = "letters") -> str:
    if style == "letters":
        return "".join(str(x) for x in word.letters)
    if style != "syllables":
        raise ValueError(f"unknown style {style!r}")
    out = []
    letters = word.letters
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        run = j - i
        if run == 1:
            out.append(str(letters[i]))
        else:
            out.append(f"{letters[i]}^{run}" if run < 10 else f"{letters[i]}^{{{run}}}")
        i = j
    return "".join(out)


# -- symmetries --------------------------------------------------------------


@dataclass(frozen=True)
class Symmetry:
    kind: str  # "invert" | "mirror" | "flip" | "rotate"
    k: int = 0

    INVERT = None  # filled in below
    MIRROR = None
    FLIP = None

    @classmethod
    def rotate(cls, k: int) -> "Symmetry":
        return cls("rotate", k)


Symmetry.INVERT = Symmetry("invert")
Symmetry.MIRROR = Symmetry("mirror")
Symmetry.FLIP = Symmetry("flip")


def transform(word: BraidWord, s: Symmetry) -> BraidWord:
    if s.kind == "invert":
        return word.inverse()
    if s.kind == "mirror":
        return BraidWord(-x for x in word.letters)
    if s.kind == "flip":
        return word.bar()
    if s.kind == "rotate":
        n = len(word)
        if n == 0:
            return word
        k = s.k % n
        return BraidWord(word.letters[k:] + word.letters[:k])
    raise ValueError(f"unknown symmetry {s.kind!r}")


def orbit(word: BraidWord) -> set[BraidWord]:
    """All images under the group generated by invert, mirror, flip, rotations."""
    out = set()
    n = len(word)
    for w in _point_images(word):
        for k in range(max(n, 1)):
            out.add(transform(w, Symmetry.rotate(k)))
    return out


def _point_images(word: BraidWord) -> list[BraidWord]:
    imgs = []
    for inv in (False, True):
        w = word.inverse() if inv else word
        for mir in (False, True):
            w2 = transform(w, Symmetry.MIRROR) if mir else w
            imgs.append(w2)
            imgs.append(w2.bar())
    return imgs


def canonicalize(word: BraidWord) -> BraidWord:
    """Lexicographically least word in the symmetry orbit (order 1<2<-1<-2)."""
    return min(orbit(word), key=sort_key)


def is_canonical(word: BraidWord) -> bool:
    return canonicalize(word) == word


# -- reduction and syllables -------------------------------------------------


def reduce(word: BraidWord, cyclic: bool = False) -> BraidWord:
    stack: list[int] = []
    for x in word.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    if cyclic:
        i, j = 0, len(stack)
        while j - i >= 2 and stack[i] == -stack[j - 1]:
            i += 1
            j -= 1
        stack = stack[i:j]
    return BraidWord(stack)


def is_reduced(word: BraidWord, cyclic: bool = False) -> bool:
    return reduce(word, cyclic) == word


class NotReducedError(ValueError):
    pass


@dataclass(frozen=True)
class ExponentVector:
    entries: tuple[int, ...]
    start_index: int
    cyclic: bool

    @property
    def weight(self) -> int:
        return len(self.entries)

    @property
    def length(self) -> int:
        return sum(abs(e) for e in self.entries)

    @property
    def exponent_sum(self) -> int:
        return sum(self.entries)

    def indices(self) -> list[int]:
        return [self.start_index if k % 2 == 0 else 3 - self.start_index for k in range(len(self.entries))]

    def has_trivial(self) -> bool:
        return any(abs(e) == 1 for e in self.entries)

    def isolated_trivial_positions(self) -> list[int]:
        """Trivial entries not cyclically adjacent to another trivial entry."""
        n = len(self.entries)
        out = []
        for k, e in enumerate(self.entries):
            if abs(e) != 1:
                continue
            if n == 1:
                out.append(k)
                continue
            if self.cyclic:
                nb = [self.entries[(k - 1) % n], self.entries[(k + 1) % n]]
            else:
                nb = [self.entries[j] for j in (k - 1, k + 1) if 0 <= j < n]
            if all(abs(x) != 1 for x in nb):
                out.append(k)
        return out


def _runs(letters: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal runs of equal index: (index, signed exponent)."""
    runs: list[tuple[int, int]] = []
    for x in letters:
        idx, sgn = abs(x), (1 if x > 0 else -1)
        if runs and runs[-1][0] == idx:
            runs[-1] = (idx, runs[-1][1] + sgn)
        else:
            runs.append((idx, sgn))
    return runs


def syllables(word: BraidWord, cyclic: bool = False) -> ExponentVector:
    if not is_reduced(word, cyclic):
        raise NotReducedError(f"{render(word)} is not {'cyclically ' if cyclic else ''}reduced")
    runs = _runs(word.letters)
    if cyclic and len(runs) > 1 and runs[0][0] == runs[-1][0]:
        runs = [(runs[-1][0], runs[-1][1] + runs[0][1])] + runs[1:-1]
    if not runs:
        return ExponentVector((), 1, cyclic)
    return ExponentVector(tuple(e for _, e in runs), runs[0][0], cyclic)


def weight(word: BraidWord) -> int:
    """Cyclic weight of a cyclically reduced word."""
    return syllables(word, cyclic=True).weight


def is_cyclically_adequate(word: BraidWord) -> bool:
    """Positive word with no trivial syllable up to cyclic permutation."""
    if not word.is_positive():
        return False
    return not syllables(word, cyclic=True).has_trivial()


def is_adequate_word(word: BraidWord) -> bool:
    """Positive word whose (linear) exponent vector has no entry 1."""
    if not word.is_positive():
        return False
    return not syllables(word).has_trivial()


# -- patterns ----------------------------------------------------------------

DELTA_WORDS = (BraidWord((1, 2, 1)), BraidWord((2, 1, 2)))
DELTA_INV_WORDS = tuple(w.inverse() for w in DELTA_WORDS)


def _delta2_words() -> tuple[BraidWord, ...]:
    base = [BraidWord((1, 2, 1, 2, 1, 2)), BraidWord((2, 1, 2, 2, 1, 2)), BraidWord((2, 1, 1, 2, 1, 1))]
    out = set()
    for w in base:
        for v in (w, w.bar()):
            out.add(v)
            out.add(BraidWord(reversed(v.letters)))
    return tuple(sorted(out, key=sort_key))


DELTA2_WORDS = _delta2_words()


def _pattern_words(pattern) -> tuple[BraidWord, ...]:
    if isinstance(pattern, BraidWord):
        return (pattern,)
    table = {"Delta": DELTA_WORDS, "DeltaInv": DELTA_INV_WORDS, "Delta2": DELTA2_WORDS}
    if pattern not in table:
        raise ValueError(f"unknown pattern {pattern!r}")
    return table[pattern]


def find_pattern(word: BraidWord, pattern, cyclic: bool = False) -> list[int]:
    """Start positions of any word of ``pattern`` in ``word``."""
    letters = word.letters
    n = len(letters)
    found = set()
    for p in _pattern_words(pattern):
        m = len(p)
        if m == 0 or m > n:
            continue
        starts = range(n) if cyclic else range(n - m + 1)
        for s in starts:
            if all(letters[(s + j) % n] == p.letters[j] for j in range(m)):
                found.add(s)
    return sorted(found)


class PatternError(ValueError):
    pass


def slide_delta(word: BraidWord, delta_pos: int, direction: str = "left") -> BraidWord:
    """Slide a Delta subword through its neighbour: alpha*Delta -> Delta*bar(alpha).

    ``direction='left'`` moves the Delta at ``delta_pos`` to the front;
    ``'right'`` moves it to the end (Delta*gamma -> bar(gamma)*Delta).
    """
    d = word.letters[delta_pos:delta_pos + 3]
    if BraidWord(d) not in DELTA_WORDS and BraidWord(d) not in DELTA_INV_WORDS:
        raise PatternError(f"no Delta at position {delta_pos} of {render(word)}")
    alpha = word[:delta_pos]
    rest = word[delta_pos + 3:]
    if direction == "left":
        return BraidWord(d) + alpha.bar() + rest
    if direction == "right":
        return alpha + rest.bar() + BraidWord(d)
    raise ValueError(f"unknown direction {direction!r}")


def apply_o9(word: BraidWord, pos: int, k: int) -> BraidWord:
    """x y^k x^-1 -> y^-e x^k y^e  (x = sigma_i^e, y of the other index)."""
    letters = word.letters
    m = abs(k)
    if k == 0 or pos < 0 or pos + m + 2 > len(letters):
        raise PatternError(f"no o9 pattern with k={k} at {pos}")
    x = letters[pos]
    run = letters[pos + 1:pos + 1 + m]
    y = run[0]
    expected_run = (abs(y) * (1 if k > 0 else -1),) * m
    if abs(y) == abs(x) or tuple(run) != expected_run or letters[pos + m + 1] != -x:
        raise PatternError(f"no o9 pattern with k={k} at {pos} of {render(word)}")
    e = 1 if x > 0 else -1
    yi, xi = abs(y), abs(x)
    repl = (-e * yi,) + (xi * (1 if k > 0 else -1),) * m + (e * yi,)
    return BraidWord(letters[:pos] + repl + letters[pos + m + 2:])


COMMUTATOR_WORDS = (
    BraidWord((1, 2, -1, -2)),
    BraidWord((2, 1, -2, -1)),
    BraidWord((-1, -2, 1, 2)),
    BraidWord((-2, -1, 2, 1)),
)


def rewrite_commutator(word: BraidWord, pos: int) -> BraidWord:
    """Replace x y x^-1 y^-1 (cyclic subword at pos) by y^-1 x.

    A wrapping occurrence rotates the word first, so the result is then a
    conjugate rather than an equal braid.
    """
    n = len(word)
    if n < 4:
        raise PatternError("word too short for commutator pattern")
    sub = BraidWord(word.letters[(pos + j) % n] for j in range(4))
    if sub not in COMMUTATOR_WORDS:
        raise PatternError(f"no commutator pattern at {pos} of {render(word)}")
    x, y = sub.letters[0], sub.letters[1]
    repl = (-y, x)
    if pos + 4 <= n:
        return BraidWord(word.letters[:pos] + repl + word.letters[pos + 4:])
    rot = transform(word, Symmetry.rotate(pos))
    return BraidWord(repl + rot.letters[4:])


# -- crossing surgery --------------------------------------------------------


def switch(word: BraidWord, i: int) -> BraidWord:
    if not 0 <= i < len(word):
        raise IndexError(f"letter {i} out of range")
    letters = list(word.letters)
    letters[i] = -letters[i]
    return BraidWord(letters)


def smooth(word: BraidWord, i: int) -> BraidWord:
    if not 0 <= i < len(word):
        raise IndexError(f"letter {i} out of range")
    return BraidWord(word.letters[:i] + word.letters[i + 1:])


def delete_range(word: BraidWord, start: int, stop: int) -> BraidWord:
    """Remove letters start..stop inclusive."""
    if not 0 <= start <= stop < len(word):
        raise IndexError(f"range {start}..{stop} out of bounds")
    return BraidWord(word.letters[:start] + word.letters[stop + 1:])


def all_words(length: int, positive: bool = False) -> Iterable[BraidWord]:
    """Every word of the given length in canonical letter order."""
    import itertools

    alphabet = (1, 2) if positive else CODE_LETTER
    for t in itertools.product(alphabet, repeat=length):
        yield BraidWord(t)
