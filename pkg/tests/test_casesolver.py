from __future__ import annotations

from fractions import Fraction

import pytest

from eebraid.algebra import LaurentPolynomial, RationalFunction
from eebraid.braidword import BraidWord, parse_bracket_notation
from eebraid.burau import BurauMatrix, burau
from eebraid.casesolver import build_case, expected_alpha, solve_case, sweep

T = LaurentPolynomial.monomial(1)


def P(text: str) -> BraidWord:
    return parse_bracket_notation(text)


def mono(e: int, c: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(e, c)


def same_braids(found, expected) -> bool:
    return len(found) == len(expected) and {burau(w) for w in found} == {burau(w) for w in expected}


def test_build_case():
    spec = build_case(1, 3)
    assert spec.visible == P("12221")
    assert [w for w, _ in spec.constraints] == [P("-12221"), P("121"), P("1222-1")]
    assert all(rhs == mono(-1, -1) for _, rhs in spec.constraints)
    spec = build_case(2, 1)
    assert [rhs for _, rhs in spec.constraints] == [-T, mono(-1, -1), mono(-1, -1)]
    assert build_case(3, 1).det_rhs == -T
    with pytest.raises(ValueError):
        build_case(1, 0)


def test_case_one_n1():
    rep = solve_case(1, 1)
    assert rep.is_square
    plus = next(r for r in rep.roots if r.label == "+")
    minus = next(r for r in rep.roots if r.label == "-")
    assert plus.d == RationalFunction.coerce(mono(-1, -1))
    assert plus.matrix == BurauMatrix(mono(-2), LaurentPolynomial.zero(), mono(-1), mono(-1, -1))
    assert plus.matched is None
    assert not minus.laurent
    num = 1 + T ** 2 + T ** 4
    den = T - T ** 2 + 3 * T ** 3 - T ** 4 + T ** 5
    assert minus.d == RationalFunction(num, den)
    assert minus.d.eval(Fraction(1, 2)) == Fraction(42, 19)


def test_case_one_n3():
    rep = solve_case(1, 3)
    assert rep.is_square
    assert {r.d for r in rep.roots} == {RationalFunction.coerce(mono(-3)), RationalFunction.coerce(mono(-2, -1))}
    assert same_braids(rep.matched_braids, expected_alpha(1, 3))


@pytest.mark.parametrize("n", [2, 4, 5, 6, 7, 8, 9, 10])
def test_case_one_not_square(n):
    assert not solve_case(1, n).is_square


@pytest.mark.parametrize("case,n", [(2, 1), (2, 2), (3, 1)])
def test_square_cases_match_braids(case, n):
    rep = solve_case(case, n)
    assert rep.is_square
    assert same_braids(rep.matched_braids, expected_alpha(case, n))


@pytest.mark.parametrize("case", [2, 3])
def test_other_cases_not_square(case):
    start = 3 if case == 2 else 2
    assert all(not r.is_square for r in sweep(case, 10)[start - 1:])


def test_matched_braids_satisfy_constraints():
    for case, n in [(1, 3), (2, 1), (2, 2), (3, 1)]:
        spec = build_case(case, n)
        for alpha in expected_alpha(case, n):
            m = burau(alpha)
            assert m.det() == spec.det_rhs
            for w, rhs in spec.constraints:
                assert (m @ burau(w)).trace() == rhs


def test_report_json():
    js = solve_case(1, 3).to_json()
    assert js["isSquare"] and js["line"]["freeCoordinate"] in "abcd"
    assert all(r["matchedBraid"] for r in js["roots"])
