"""Exact one-variable arithmetic: Laurent polynomials, rational functions,
squarefree decomposition and small affine solving over the function field.

Coefficients are Python ints or :class:`fractions.Fraction`; nothing here
ever touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

VARIABLES = ("t", "u", "A", "q")

Coeff = Union[int, Fraction]


class VariableMismatch(ValueError):
    pass


def _norm_coeff(c) -> Coeff:
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class LaurentPolynomial:
    """Immutable Laurent polynomial  sum_k coeffs[k] * var^(low + k)."""

    __slots__ = ("low", "coeffs", "var", "_hash")

    def __init__(self, terms: Mapping[int, Rational] | None = None, var: str = "t"):
        if var not in VARIABLES:
            raise ValueError(f"unknown variable {var!r}")
        terms = {e: _norm_coeff(c) for e, c in (terms or {}).items() if c != 0}
        if terms:
            low, high = min(terms), max(terms)
            coeffs = tuple(terms.get(e, 0) for e in range(low, high + 1))
        else:
            low, coeffs = 0, ()
        self._set(low, coeffs, var)

    def _set(self, low, coeffs, var):
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    @classmethod
    def from_coeffs(cls, low: int, coeffs: Iterable, var: str = "t") -> "LaurentPolynomial":
        cs = [_norm_coeff(c) for c in coeffs]
        i, j = 0, len(cs)
        while i < j and cs[i] == 0:
            i += 1
        while j > i and cs[j - 1] == 0:
            j -= 1
        p = cls.__new__(cls)
        if i == j:
            p._set(0, (), var)
        else:
            p._set(low + i, tuple(cs[i:j]), var)
        return p

    @classmethod
    def monomial(cls, exp: int, coeff: Rational = 1, var: str = "t") -> "LaurentPolynomial":
        return cls.from_coeffs(exp, [coeff], var)

    @classmethod
    def constant(cls, c: Rational, var: str = "t") -> "LaurentPolynomial":
        return cls.from_coeffs(0, [c], var)

    @classmethod
    def zero(cls, var: str = "t") -> "LaurentPolynomial":
        return cls.from_coeffs(0, [], var)

    @classmethod
    def one(cls, var: str = "t") -> "LaurentPolynomial":
        return cls.from_coeffs(0, [1], var)

    # -- accessors ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.low + len(self.coeffs) - 1

    def min_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.low

    def max_degree(self) -> int:
        return self.high

    def span(self) -> int:
        return self.high - self.low

    def coefficient(self, e: int) -> Coeff:
        k = e - self.low
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def terms(self) -> list[tuple[int, Coeff]]:
        return [(self.low + k, c) for k, c in enumerate(self.coeffs) if c != 0]

    def trailing_coefficient(self) -> Coeff:
        return self.coeffs[0]

    def leading_coefficient(self) -> Coeff:
        return self.coeffs[-1]

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def is_constant(self) -> bool:
        return not self.coeffs or (self.low == 0 and len(self.coeffs) == 1)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else 0

    def has_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "LaurentPolynomial"):
        if self.var != other.var:
            raise VariableMismatch(f"{self.var} vs {other.var}")

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [0] * (high - low + 1)
        for k, c in enumerate(self.coeffs):
            out[self.low - low + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.low - low + k] += c
        return LaurentPolynomial.from_coeffs(low, out, self.var)

    __radd__ = __add__

    def __neg__(self):
        p = LaurentPolynomial.__new__(LaurentPolynomial)
        p._set(self.low, tuple(-c for c in self.coeffs), self.var)
        return p

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return LaurentPolynomial.zero(self.var)
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return LaurentPolynomial.from_coeffs(self.low + other.low, out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            c = Fraction(1, 1) / self.coeffs[0]
            return LaurentPolynomial.monomial(-self.low, c, self.var) ** (-n)
        result = LaurentPolynomial.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Rational) -> "LaurentPolynomial":
        return LaurentPolynomial.from_coeffs(self.low, [x * c for x in self.coeffs], self.var)

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by var^k."""
        if not self.coeffs:
            return self
        p = LaurentPolynomial.__new__(LaurentPolynomial)
        p._set(self.low + k, self.coeffs, self.var)
        return p

    def eval(self, x: Rational) -> Coeff:
        x = _norm_coeff(x)
        if x == 0 and self.coeffs and self.low < 0:
            raise ZeroDivisionError("evaluation of negative powers at 0")
        acc: Coeff = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.low >= 0:
            return _norm_coeff(acc * Fraction(x) ** self.low) if self.low else _norm_coeff(acc)
        return _norm_coeff(Fraction(acc) / Fraction(x) ** (-self.low))

    def substitute(self, var: str, scale: int = 1, negate: bool = False) -> "LaurentPolynomial":
        """Map x^e to (+-1)^e * var^(scale*e).

        ``u = -t`` is ``substitute('t', negate=True)``; ``t = q^2`` is
        ``substitute('q', scale=2)``.
        """
        terms = {}
        for e, c in self.terms():
            terms[scale * e] = -c if (negate and e % 2) else c
        return LaurentPolynomial(terms, var)

    def contract(self, var: str, factor: int) -> "LaurentPolynomial":
        """Inverse of ``substitute(var, scale=factor)``; exponents must divide."""
        terms = {}
        for e, c in self.terms():
            if e % factor:
                raise ValueError(f"exponent {e} not divisible by {factor}")
            terms[e // factor] = c
        return LaurentPolynomial(terms, var)

    def reflect(self) -> "LaurentPolynomial":
        """x -> 1/x."""
        return LaurentPolynomial({-e: c for e, c in self.terms()}, self.var)

    def derivative(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e - 1: e * c for e, c in self.terms() if e}, self.var)

    # -- comparisons / serialization ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.var == other.var and self.low == other.low and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.var, self.low, self.coeffs)))
        return self._hash

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            parts.append(str(c) if e == 0 else f"{c}*{self.var}^{e}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPolynomial({str(self)!r}, var={self.var!r})"

    def to_json(self) -> list:
        return [[e, str(c)] for e, c in self.terms()]

    @classmethod
    def from_json(cls, data: Sequence, var: str = "t") -> "LaurentPolynomial":
        return cls({int(e): Fraction(c) for e, c in data}, var)

    @classmethod
    def parse(cls, text: str, var: str = "t") -> "LaurentPolynomial":
        """Parse the canonical text form produced by ``str``."""
        text = text.strip()
        if text == "0":
            return cls.zero(var)
        terms: dict[int, Fraction] = {}
        for part in text.split(" + "):
            if "*" in part:
                c, rest = part.split("*", 1)
                v, e = rest.split("^", 1)
                if v != var:
                    raise VariableMismatch(f"expected {var}, got {v}")
                terms[int(e)] = terms.get(int(e), 0) + Fraction(c)
            else:
                terms[0] = terms.get(0, 0) + Fraction(part)
        return cls(terms, var)

    # -- ordinary-polynomial helpers -----------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive over Z."""
        if not self.coeffs:
            return Fraction(0)
        nums = [Fraction(c).numerator for c in self.coeffs if c]
        dens = [Fraction(c).denominator for c in self.coeffs if c]
        g = 0
        for n in nums:
            g = math.gcd(g, n)
        lcm = 1
        for d in dens:
            lcm = lcm * d // math.gcd(lcm, d)
        return Fraction(g, lcm)

    def primitive(self) -> "LaurentPolynomial":
        """Primitive integer polynomial with positive trailing coefficient."""
        c = self.content()
        if self.coeffs[0] < 0:
            c = -c
        return self.scale(1 / c)


def poly_divmod(a: LaurentPolynomial, b: LaurentPolynomial) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Division of ordinary polynomials (both with low >= 0) over Q."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    a._check(b)
    var = a.var
    # work on dense descending lists of Fractions
    num = [Fraction(0)] * a.low + [Fraction(c) for c in a.coeffs] if a.coeffs else []
    den = [Fraction(0)] * b.low + [Fraction(c) for c in b.coeffs]
    if len(num) < len(den):
        return LaurentPolynomial.zero(var), a
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    db = len(den) - 1
    for k in range(len(num) - 1, db - 1, -1):
        c = num[k]
        if c == 0:
            continue
        f = c / lead
        q[k - db] = f
        for j in range(db + 1):
            num[k - db + j] -= f * den[j]
    return LaurentPolynomial.from_coeffs(0, q, var), LaurentPolynomial.from_coeffs(0, num[:db], var)


def _strip_monomial(p: LaurentPolynomial) -> LaurentPolynomial:
    """Remove the var^low factor (a unit in the Laurent ring)."""
    return p.shift(-p.low) if p.coeffs else p


def poly_gcd(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Monic gcd over Q of the ordinary parts (monomial factors ignored)."""
    a._check(b)
    a, b = _strip_monomial(a), _strip_monomial(b)
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero():
        return a
    return a.scale(Fraction(1) / Fraction(a.leading_coefficient()))


def exact_div(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """a / b for Laurent polynomials when the division is exact."""
    sa, sb = _strip_monomial(a), _strip_monomial(b)
    q, r = poly_divmod(sa, sb)
    if not r.is_zero():
        raise ValueError(f"{a} is not divisible by {b}")
    return q.shift(a.low - b.low) if a.coeffs else a


# -- squarefree decomposition ------------------------------------------------


@dataclass(frozen=True)
class SquarefreeDecomposition:
    content: Fraction
    square: LaurentPolynomial
    squarefree: LaurentPolynomial

    def recompose(self) -> LaurentPolynomial:
        return (self.square * self.square * self.squarefree).scale(self.content)


def _yun(f: LaurentPolynomial) -> list[LaurentPolynomial]:
    """Yun's algorithm; returns monic a_1, a_2, ... with f ~ prod a_i^i."""
    fp = f.derivative()
    a0 = poly_gcd(f, fp)
    b = exact_div(f, a0)
    c = exact_div(fp, a0)
    d = c - b.derivative()
    factors = []
    while not b.is_constant():
        a = poly_gcd(b, d)
        factors.append(a)
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - b.derivative()
    return factors


def squarefree_decompose(p: LaurentPolynomial) -> SquarefreeDecomposition:
    """p == content * square**2 * squarefree, squarefree without repeated roots.

    ``square`` is primitive over Z with positive trailing coefficient; the sign
    of p ends up in ``squarefree``; ``content`` is a positive rational.
    """
    if p.is_zero():
        raise ValueError("squarefree decomposition of zero")
    var = p.var
    k = p.low
    f = p.shift(-k)
    square = LaurentPolynomial.monomial(k // 2, 1, var)
    sqf = LaurentPolynomial.monomial(k % 2, 1, var)
    if not f.is_constant():
        for i, a in enumerate(_yun(f), start=1):
            if a.is_constant():
                continue
            a = a.primitive()
            if i // 2:
                square = square * a ** (i // 2)
            if i % 2:
                sqf = sqf * a
    square = square.primitive()
    sqf = sqf.primitive()
    base = square * square * sqf
    ratio = Fraction(p.coeffs[0]) / Fraction(base.coeffs[0])
    if ratio < 0:
        sqf, ratio = -sqf, -ratio
    return SquarefreeDecomposition(ratio, square, sqf)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def is_square(p: LaurentPolynomial) -> LaurentPolynomial | None:
    """r with r*r == p (rational coefficients, positive trailing coefficient), or None."""
    if p.is_zero():
        return p
    dec = squarefree_decompose(p)
    if dec.squarefree != 1:
        return None
    root = _rational_sqrt(dec.content)
    if root is None:
        return None
    r = dec.square.scale(root)
    return -r if r.coeffs[0] < 0 else r


# -- rational functions ------------------------------------------------------


class RationalFunction:
    """num/den in lowest terms; den has min exponent 0 and is a primitive
    integer polynomial with positive constant term."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str | None = None):
        if not isinstance(num, LaurentPolynomial):
            num = LaurentPolynomial.constant(num, var or (den.var if isinstance(den, LaurentPolynomial) else "t"))
        if den is None:
            den = LaurentPolynomial.one(num.var)
        elif not isinstance(den, LaurentPolynomial):
            den = LaurentPolynomial.constant(den, num.var)
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = num, LaurentPolynomial.one(num.var)
        else:
            if not (den.is_monomial()):
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num, den = exact_div(num, g), exact_div(den, g)
            # move monomial part of den into num
            k = den.low
            num, den = num.shift(-k), den.shift(-k)
            c = den.content()
            if den.coeffs[0] < 0:
                c = -c
            num, den = num.scale(1 / c), den.scale(1 / c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def var(self) -> str:
        return self.num.var

    @classmethod
    def coerce(cls, x, var: str = "t") -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, LaurentPolynomial):
            return cls(x)
        return cls(LaurentPolynomial.constant(x, var))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_monomial()

    def as_laurent(self) -> LaurentPolynomial:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num.scale(Fraction(1) / Fraction(self.den.coeffs[0])).shift(-self.den.low)

    def __add__(self, other):
        o = RationalFunction.coerce(other, self.var)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other, self.var))

    def __rsub__(self, other):
        return RationalFunction.coerce(other, self.var) - self

    def __mul__(self, other):
        o = RationalFunction.coerce(other, self.var)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * RationalFunction.coerce(other, self.var).inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other, self.var) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def eval(self, x: Rational) -> Coeff:
        d = self.den.eval(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        return _norm_coeff(Fraction(self.num.eval(x)) / Fraction(d))

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, LaurentPolynomial, int, Fraction)):
            o = RationalFunction.coerce(other, self.var)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


# -- affine solving over the function field ----------------------------------


@dataclass(frozen=True)
class AffineLine:
    base: tuple[RationalFunction, ...]
    direction: tuple[RationalFunction, ...]
    free_coordinate: int

    def point(self, s) -> tuple[RationalFunction, ...]:
        return tuple(b + d * s for b, d in zip(self.base, self.direction))


@dataclass(frozen=True)
class FullSolution:
    point: tuple[RationalFunction, ...]


@dataclass(frozen=True)
class NoSolution:
    pass


@dataclass(frozen=True)
class DegenerateSolution:
    """Solution space of dimension >= 2."""
    dimension: int


def solve_affine(rows: Sequence[tuple[Sequence, object]], nvars: int = 4):
    """Gaussian elimination over Q(t) for rows (coefficients, rhs).

    Pivots are taken left to right, so the last coordinate (matrix entry d)
    stays free whenever the system allows it.
    """
    if len(rows) > nvars:
        raise ValueError(f"at most {nvars} rows supported")
    rc = RationalFunction.coerce
    var = "t"
    for coeffs, rhs in rows:
        for x in list(coeffs) + [rhs]:
            if isinstance(x, (RationalFunction, LaurentPolynomial)):
                var = x.var
    m = [[rc(x, var) for x in coeffs] + [rc(rhs, var)] for coeffs, rhs in rows]
    pivots: list[int] = []
    r = 0
    for col in range(nvars):
        piv = next((i for i in range(r, len(m)) if not m[i][col].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][col].is_zero():
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(m)):
        if not m[i][nvars].is_zero():
            return NoSolution()
    free = [c for c in range(nvars) if c not in pivots]
    zero, one = rc(0, var), rc(1, var)
    if not free:
        point = [zero] * nvars
        for i, col in enumerate(pivots):
            point[col] = m[i][nvars]
        return FullSolution(tuple(point))
    if len(free) > 1:
        return DegenerateSolution(len(free))
    f = free[0]
    base = [zero] * nvars
    direction = [zero] * nvars
    direction[f] = one
    for i, col in enumerate(pivots):
        base[col] = m[i][nvars]
        direction[col] = -m[i][f]
    return AffineLine(tuple(base), tuple(direction), f)
