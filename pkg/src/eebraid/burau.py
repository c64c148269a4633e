"""The reduced Burau representation of B_3 and exact evaluations of it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from . import kernels
from .algebra import LaurentPolynomial, RationalFunction
from .braidword import BraidWord, _runs

Entry = Union[LaurentPolynomial, Fraction, RationalFunction]

T = LaurentPolynomial.monomial(1)
ONE = LaurentPolynomial.one()
ZERO = LaurentPolynomial.zero()


class InconsistentMatrix(ValueError):
    """A matrix claimed to be a Burau image violates a structural property."""


@dataclass(frozen=True)
class BurauMatrix:
    """2x2 matrix [[a, b], [c, d]] over a commutative coefficient ring."""

    a: Entry
    b: Entry
    c: Entry
    d: Entry

    @classmethod
    def identity(cls, ring: str = "laurent") -> "BurauMatrix":
        if ring == "laurent":
            return cls(ONE, ZERO, ZERO, ONE)
        if ring == "rational":
            return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))
        raise ValueError(f"unknown ring {ring!r}")

    @classmethod
    def scalar(cls, x: Entry) -> "BurauMatrix":
        zero = x * 0
        return cls(x, zero, zero, x)

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, o: "BurauMatrix") -> "BurauMatrix":
        return BurauMatrix(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __add__(self, o: "BurauMatrix") -> "BurauMatrix":
        return BurauMatrix(*(x + y for x, y in zip(self.entries(), o.entries())))

    def __sub__(self, o: "BurauMatrix") -> "BurauMatrix":
        return BurauMatrix(*(x - y for x, y in zip(self.entries(), o.entries())))

    def scale(self, x: Entry) -> "BurauMatrix":
        return BurauMatrix(self.a * x, self.b * x, self.c * x, self.d * x)

    def det(self) -> Entry:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Entry:
        return self.a + self.d

    def inverse(self) -> "BurauMatrix":
        """Inverse over the coefficient ring; for Laurent entries det must be a monomial."""
        det = self.det()
        if isinstance(det, LaurentPolynomial):
            if not det.is_monomial():
                raise InconsistentMatrix("determinant is not a unit")
            inv = det ** -1
        else:
            inv = 1 / det
        return BurauMatrix(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def eval(self, t0) -> "BurauMatrix":
        return BurauMatrix(*(Fraction(x.eval(t0)) for x in self.entries()))

    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0 and self.c == 0 and self.d == 1

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    def to_json(self) -> list:
        def ser(x):
            if isinstance(x, (LaurentPolynomial, RationalFunction)):
                return x.to_json()
            return str(x)

        return [[ser(self.a), ser(self.b)], [ser(self.c), ser(self.d)]]


def _u_power(k: int) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(k, (-1) ** (k % 2))


def _geometric(k: int) -> LaurentPolynomial:
    """S_k = 1 + u + ... + u^(k-1) for k > 0, and -(u^k + ... + u^-1) for k < 0, with u = -t."""
    if k > 0:
        return sum((_u_power(j) for j in range(k)), ZERO)
    return -sum((_u_power(j) for j in range(k, 0)), ZERO)


def burau_syllable(index: int, k: int) -> BurauMatrix:
    """Closed form for psi(sigma_index^k)."""
    if index not in (1, 2):
        raise ValueError(f"bad generator index {index}")
    if k == 0:
        return BurauMatrix.identity()
    uk, s = _u_power(k), _geometric(k)
    if index == 1:
        return BurauMatrix(uk, s, ZERO, ONE)
    return BurauMatrix(ONE, ZERO, T * s, uk)


GENERATORS = {x: burau_syllable(abs(x), 1 if x > 0 else -1) for x in (1, 2, -1, -2)}


def burau(word: BraidWord) -> BurauMatrix:
    m = BurauMatrix.identity()
    for idx, e in _runs(word.letters):
        m = m @ burau_syllable(idx, e)
    return m


def burau_lettered(word: BraidWord) -> BurauMatrix:
    """Letter-by-letter product; an independent route to :func:`burau`."""
    m = BurauMatrix.identity()
    for x in word.letters:
        m = m @ GENERATORS[x]
    return m


def _check_t0(t0) -> Fraction:
    t0 = Fraction(t0)
    if t0 == 0 or t0 == -1:
        raise ValueError(f"t0 = {t0} is not allowed")
    return t0


def generator_at(x: int, t0) -> BurauMatrix:
    return GENERATORS[x].eval(_check_t0(t0))


def burau_at(word: BraidWord, t0) -> BurauMatrix:
    t0 = _check_t0(t0)
    gens = {x: m.eval(t0) for x, m in GENERATORS.items()}
    m = BurauMatrix.identity("rational")
    for x in word.letters:
        m = m @ gens[x]
    return m


DELTA = BraidWord((1, 2, 1))
DELTA_INV = DELTA.inverse()


def scalar_central(m: BurauMatrix) -> int | None:
    """k if m == t^(3k) * I, i.e. m is psi of Delta^(2k); None if m is not scalar."""
    if not (m.b == 0 and m.c == 0 and m.a == m.d):
        return None
    a = m.a
    if not isinstance(a, LaurentPolynomial) or not a.is_monomial() or a.coeffs[0] != 1 or a.low % 3:
        raise InconsistentMatrix(f"scalar matrix {a} is not a power of t^3")
    return a.low // 3


def trace_poly(word: BraidWord) -> LaurentPolynomial:
    return burau(word).trace()


def array_to_poly(row, offset: int, var: str = "t") -> LaurentPolynomial:
    return LaurentPolynomial.from_coeffs(-offset, [int(x) for x in row], var)


def traces_batch(words: list[BraidWord]) -> list[LaurentPolynomial]:
    """Traces of many words through the batch kernel."""
    if not words:
        return []
    arr, lengths = kernels.as_code_array([w.codes() for w in words])
    width = arr.shape[1]
    tr = kernels.trace_batch(arr, lengths, width)
    return [array_to_poly(r, width) for r in tr]


def burau_batch(words: list[BraidWord]) -> list[BurauMatrix]:
    if not words:
        return []
    arr, lengths = kernels.as_code_array([w.codes() for w in words])
    width = arr.shape[1]
    out = kernels.burau_batch(arr, lengths, width)
    return [BurauMatrix(*(array_to_poly(r, width) for r in m)) for m in out]


# -- preimages ------------------------------------------------------------------

_EVAL_POINT = 1_000_003


def _mod_eval(p: LaurentPolynomial, t: int, prime: int) -> int:
    acc = 0
    for e, c in p.terms():
        acc = (acc + int(c) * pow(t, e, prime)) % prime
    return acc


def determinant_exponent(m: BurauMatrix) -> int | None:
    """e with det m == (-t)^e, or None."""
    det = m.det()
    if not isinstance(det, LaurentPolynomial) or not det.is_monomial():
        return None
    e = det.low
    return e if det.coeffs[0] == (-1) ** (e % 2) else None


def preimage_search(m: BurauMatrix, max_len: int = 12) -> BraidWord | None:
    """Shortest, then lexicographically first, reduced word w with psi(w) == m.

    Candidates are screened by evaluating at a fixed integer point modulo a
    prime and then verified exactly, so a hit is always genuine.  Returns
    None when no word of length <= max_len has this image.
    """
    if max_len > 16:
        raise ValueError("max_len must be at most 16")
    entries = m.entries()
    if not all(isinstance(x, LaurentPolynomial) and x.has_integer_coefficients() for x in entries):
        return None
    e = determinant_exponent(m)
    if e is None:
        return None
    target = np.array([_mod_eval(x, _EVAL_POINT, kernels.MERSENNE) for x in entries], dtype=np.int64)
    for length in range(abs(e), max_len + 1, 2):
        max_hits = 64
        while True:
            cands = kernels.preimage_candidates(target, length, e, _EVAL_POINT, max_hits=max_hits)
            for row in cands:
                w = BraidWord.from_codes(row)
                if burau(w) == m:
                    return w
            if len(cands) < max_hits:
                break
            max_hits *= 8
    return None

