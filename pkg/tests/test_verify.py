from __future__ import annotations

import pytest

from eebraid import verify


@pytest.mark.parametrize(
    "run",
    [
        lambda: verify.theorem1(6),
        verify.everywhere_trivial_family,
        lambda: verify.cross_check(5, random_count=300, random_max=10),
        lambda: verify.algebra(5, fuzz=20),
        lambda: verify.garside(count=2000, max_len=14, soundness_len=8),
        lambda: verify.lemmas(8, 7, 6),
        lambda: verify.bae_morton(8),
    ],
    ids=["theorem1", "everywhere-trivial", "cross-check", "algebra", "garside", "lemmas", "bae-morton"],
)
def test_small_suites_pass(run):
    res = run()
    assert res.passed, res.counterexamples
    assert res.checked > 0 and res.counterexamples == []


def test_everywhere_different_small_counterexamples():
    # the only offenders are words that are not cyclically reduced or too short for a same-sign pair
    res = verify.prop_p2(6)
    assert not res.passed
    assert res.details["everywhereDifferent"] == ["1-1", "12-1"]
    assert res.details["noSameSignPair"] == ["1-1", "1-2", "12-1"]


def test_classification_suite_details():
    res = verify.theorem1(4)
    assert res.details["undetermined"] == 0
    assert res.details["vEECount"] == res.details["familyCount"]


def test_bae_morton_reports_span_laws():
    d = verify.bae_morton(8).details
    assert d["halfWeightSpanLaw"]["agree"] == d["halfWeightSpanLaw"]["total"] > 0


def test_run_suite_dispatch():
    assert verify.run_suite("everywhere-trivial").name == "everywhere-trivial"
    with pytest.raises(ValueError):
        verify.run_suite("nope")


def test_counterexamples_are_capped():
    res = verify.SuiteResult("x", True)
    for i in range(100):
        res.fail(str(i))
    assert not res.passed and len(res.counterexamples) == verify.MAX_COUNTEREXAMPLES
