"""Symbolic analysis of the three neighbouring-syllable cases.

For a word beta = alpha * v with visible part v = s1^(+-1) s2^n s1^(+-1), the
matrix M = psi(alpha) = [[a, b], [c, d]] is unknown.  Each crossing switch
inside v must produce an unknot closure, which by the trace criterion is a
linear condition tr(M X) = (-t)^(+-1) on M.  Three such conditions cut out a
line; the determinant condition det M = (-t)^[alpha] turns into a quadratic
along it.  Squareness of its discriminant decides whether M can be a Laurent
matrix at all, and a bounded preimage search identifies the braid alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    AffineLine,
    DegenerateSolution,
    FullSolution,
    LaurentPolynomial,
    NoSolution,
    RationalFunction,
    is_square,
    squarefree_decompose,
    solve_affine,
)
from .braidword import BraidWord
from .burau import BurauMatrix, burau, preimage_search

T = LaurentPolynomial.monomial(1)
MINUS_T = -T
MINUS_T_INV = LaurentPolynomial.monomial(-1, -1)

COORDINATES = ("a", "b", "c", "d")


def _neg_t_power(k: int) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(k, (-1) ** (k % 2))


def _power2(n: int) -> tuple[int, ...]:
    return (2,) * n if n >= 0 else (-2,) * (-n)


@dataclass(frozen=True)
class CaseSpec:
    case: int
    n: int
    visible: BraidWord
    det_rhs: LaurentPolynomial
    constraints: tuple[tuple[BraidWord, LaurentPolynomial], ...]

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "n": self.n,
            "visible": str(self.visible),
            "detRHS": self.det_rhs.to_json(),
            "constraints": [{"word": str(w), "trace": rhs.to_json()} for w, rhs in self.constraints],
        }


def build_case(case: int, n: int) -> CaseSpec:
    """Visible word, determinant target and the three switched-trace conditions."""
    if n < 1:
        raise ValueError("n must be at least 1")
    first, last = {1: (1, 1), 2: (-1, 1), 3: (-1, -1)}[case]
    mid = _power2(n)
    visible = BraidWord((first,) + mid + (last,))

    def rhs_for(letter: int) -> LaurentPolynomial:
        # switching a positive letter drops the exponent sum to -2, a negative one raises it to +2
        return MINUS_T_INV if letter > 0 else MINUS_T

    constraints = (
        (BraidWord((-first,) + mid + (last,)), rhs_for(first)),
        (BraidWord((first,) + _power2(n - 2) + (last,)), rhs_for(2)),
        (BraidWord((first,) + mid + (-last,)), rhs_for(last)),
    )
    alpha_sum = -visible.exponent_sum
    return CaseSpec(case, n, visible, _neg_t_power(alpha_sum), constraints)


@dataclass
class RootReport:
    label: str
    d: RationalFunction
    laurent: bool
    matrix: BurauMatrix | None = None
    matched: BraidWord | None = None

    def to_json(self) -> dict:
        out = {"label": self.label, "d": self.d.to_json(), "dText": str(self.d), "laurent": self.laurent}
        if self.matrix is not None:
            out["matrix"] = self.matrix.to_json()
        out["matchedBraid"] = None if self.matched is None else str(self.matched)
        return out


@dataclass
class CaseReport:
    spec: CaseSpec
    solution: object
    quadratic: tuple[RationalFunction, RationalFunction, RationalFunction] | None = None
    discriminant: RationalFunction | None = None
    squarefree_part: LaurentPolynomial | None = None
    is_square: bool = False
    roots: list[RootReport] = field(default_factory=list)
    search_bound: int = 0
    note: str | None = None

    @property
    def line(self) -> AffineLine | None:
        return self.solution if isinstance(self.solution, AffineLine) else None

    @property
    def laurent_roots(self) -> list[RootReport]:
        return [r for r in self.roots if r.laurent]

    @property
    def matched_braids(self) -> list[BraidWord]:
        return [r.matched for r in self.roots if r.matched is not None]

    def to_json(self) -> dict:
        out: dict = {"spec": self.spec.to_json()}
        line = self.line
        if line is not None:
            out["line"] = {
                "freeCoordinate": COORDINATES[line.free_coordinate],
                "base": [x.to_json() for x in line.base],
                "direction": [x.to_json() for x in line.direction],
            }
        else:
            out["solution"] = type(self.solution).__name__
        if self.quadratic is not None:
            out["quadratic"] = [str(x) for x in self.quadratic]
        if self.discriminant is not None:
            out["discriminant"] = str(self.discriminant)
        if self.squarefree_part is not None:
            out["squarefreePart"] = str(self.squarefree_part)
        out["isSquare"] = self.is_square
        out["roots"] = [r.to_json() for r in self.roots]
        out["searchBound"] = self.search_bound
        if self.note:
            out["note"] = self.note
        return out


def trace_row(x: BurauMatrix) -> tuple:
    """Coefficients of (a, b, c, d) in tr(M X)."""
    return (x.a, x.c, x.b, x.d)


def matrix_on_line(line: AffineLine, s) -> BurauMatrix:
    return BurauMatrix(*line.point(s))


def determinant_quadratic(line: AffineLine, det_rhs) -> tuple[RationalFunction, RationalFunction, RationalFunction]:
    """(A, B, C) with det(M(s)) - det_rhs == A s^2 + B s + C."""
    a0, b0, c0, d0 = line.base
    a1, b1, c1, d1 = line.direction
    qa = a1 * d1 - b1 * c1
    qb = a0 * d1 + a1 * d0 - b0 * c1 - b1 * c0
    qc = a0 * d0 - b0 * c0 - det_rhs
    return qa, qb, qc


def sqrt_rational_function(x: RationalFunction) -> RationalFunction | None:
    """A square root of x in Q(t), or None.  num/den in lowest terms is a square iff num*den is."""
    if x.is_zero():
        return x
    r = is_square(x.num * x.den)
    if r is None:
        return None
    return RationalFunction(r, x.den)


def solve_case(case: int, n: int, search_len: int = 12) -> CaseReport:
    spec = build_case(case, n)
    rows = [(trace_row(burau(w)), rhs) for w, rhs in spec.constraints]
    sol = solve_affine(rows)
    report = CaseReport(spec, sol, search_bound=search_len)
    if isinstance(sol, (NoSolution, DegenerateSolution)):
        report.note = f"trace conditions give {type(sol).__name__}"
        return report
    if isinstance(sol, FullSolution):
        report.note = "trace conditions determine M uniquely"
        m = BurauMatrix(*sol.point)
        ok = m.det() == spec.det_rhs
        report.is_square = ok
        if ok:
            report.roots.append(_root_report("unique", sol.point[3], m, search_len))
        return report
    qa, qb, qc = determinant_quadratic(sol, spec.det_rhs)
    report.quadratic = (qa, qb, qc)
    if qa.is_zero():
        report.note = "determinant condition is linear along the line"
        if qb.is_zero():
            return report
        s = -qc / qb
        report.is_square = True
        report.roots.append(_root_report("linear", s, matrix_on_line(sol, s), search_len))
        return report
    disc = qb * qb - 4 * qa * qc
    report.discriminant = disc
    if disc.is_zero():
        report.squarefree_part = LaurentPolynomial.one()
    else:
        report.squarefree_part = squarefree_decompose(disc.num * disc.den).squarefree
    root = sqrt_rational_function(disc)
    report.is_square = root is not None
    if root is None:
        return report
    for label, sgn in (("+", 1), ("-", -1)):
        s = (-qb + root * sgn) / (qa * 2)
        report.roots.append(_root_report(label, s, matrix_on_line(sol, s), search_len))
        if disc.is_zero():
            break
    return report


def _root_report(label: str, s: RationalFunction, m: BurauMatrix, search_len: int) -> RootReport:
    entries = [RationalFunction.coerce(x) for x in m.entries()]
    laurent = all(x.is_laurent() for x in entries)
    rep = RootReport(label, RationalFunction.coerce(s), laurent)
    if laurent:
        lm = BurauMatrix(*(x.as_laurent() for x in entries))
        rep.matrix = lm
        rep.matched = preimage_search(lm, search_len)
    return rep


def sweep(case: int, max_n: int, search_len: int = 12) -> list[CaseReport]:
    return [solve_case(case, n, search_len) for n in range(1, max_n + 1)]


def expected_alpha(case: int, n: int) -> list[BraidWord] | None:
    """Braids alpha reported for the square instances, written as words."""
    d2inv = BraidWord((-1, -2) * 3)
    table = {
        (1, 3): [d2inv + BraidWord((1,)), d2inv + BraidWord((2,))],
        (2, 1): [BraidWord((-2,)), BraidWord((-2, -1, 2, 1, -2))],
        (2, 2): [BraidWord((-2, -1)), BraidWord((-1, -2))],
        (3, 1): [BraidWord((1,)), BraidWord((2,))],
    }
    return table.get((case, n))
