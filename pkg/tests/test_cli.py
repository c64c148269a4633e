from __future__ import annotations

import json
import subprocess
import sys

import pytest

from eebraid import cli


def run(capsys, *argv) -> tuple[int, list[dict], str]:
    code = cli.main(["--format", "json", *argv])
    captured = capsys.readouterr()
    records = [json.loads(line) for line in captured.out.splitlines() if line.strip()]
    return code, records, captured.err


def test_classify_central(capsys):
    code, recs, _ = run(capsys, "classify", "121212")
    assert code == cli.EXIT_OK
    (rec,) = recs
    assert rec["schemaVersion"] == 1 and rec["command"] == "classify"
    p = rec["payload"]
    assert p["family"] == "Central" and p["k"] == 1 and p["vEE"]


def test_analyze_figure_eight(capsys):
    code, recs, _ = run(capsys, "analyze", "1-21-2")
    p = recs[0]["payload"]
    assert code == 0 and p["everywhereTrivial"] and p["jonesPipelinesAgree"]
    assert p["jonesText"] == "1*q^-4 + -1*q^-2 + 1 + -1*q^2 + 1*q^4"
    assert p["cyclicExponentVector"] == [1, -1, 1, -1] and p["weight"] == 4


def test_analyze_long_word_uses_transfer_route(capsys):
    code, recs, _ = run(capsys, "analyze", "(12)^{14}")
    assert code == 0 and recs[0]["payload"]["length"] == 28


def test_enumerate_streams_words_then_summary(capsys):
    code, recs, _ = run(capsys, "enumerate", "--max-length", "2", "--only-ee")
    assert code == 0
    assert [r["command"] for r in recs[:-1]] == ["enumerate.word"] * 5
    assert recs[-1]["command"] == "enumerate.summary"
    assert sorted(recs[-1]["payload"]["vEE"]) == sorted(["", "1", "11", "12", "1-2"])


def test_verify_pass_and_fail(capsys):
    code, recs, _ = run(capsys, "verify", "--suite", "everywhere-trivial")
    assert code == cli.EXIT_OK and recs[0]["payload"]["passed"]
    code, recs, _ = run(capsys, "verify", "--suite", "prop-p2", "--max-length", "4")
    assert code == cli.EXIT_SUITE_FAILED and not recs[0]["payload"]["passed"]


def test_search(capsys):
    code, recs, _ = run(capsys, "search", "--t", "4/5", "--max-length", "8")
    p = recs[0]["payload"]
    assert code == 0 and p["t"] == "4/5"
    assert p["candidates"] == ["12-1-2", "1-21-2", "112-1-2-2", "12-1-212-1-2"]


def test_case_solve(capsys):
    code, recs, _ = run(capsys, "case-solve", "--case", "3", "--n", "1")
    p = recs[0]["payload"]
    assert code == 0 and p["isSquare"]
    assert sorted(r["matchedBraid"] for r in p["roots"]) == ["1", "2"]


def test_case_sweep(capsys):
    code, recs, _ = run(capsys, "case-solve", "--case", "3", "--sweep", "3")
    assert code == 0 and [r["payload"]["isSquare"] for r in recs] == [True, False, False]


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["classify", "1(2"], cli.EXIT_PARSE),
        (["bogus"], cli.EXIT_USAGE),
        (["search", "--t", "x", "--max-length", "4"], cli.EXIT_USAGE),
        (["search", "--t", "1", "--max-length", "4"], cli.EXIT_USAGE),
        (["enumerate", "--max-length", "15"], cli.EXIT_USAGE),
        (["--threads", "0", "classify", "1"], cli.EXIT_USAGE),
    ],
)
def test_exit_codes(capsys, argv, expected):
    code, _, err = run(capsys, *argv)
    assert code == expected and err


def test_text_output(capsys):
    assert cli.main(["classify", "1122"]) == 0
    out = capsys.readouterr().out
    assert "family: Symmetric" in out


def test_global_flags_after_subcommand(capsys):
    assert cli.main(["classify", "12", "--format", "json", "--threads", "2", "--seed-order", "fixed"]) == 0
    assert json.loads(capsys.readouterr().out)["payload"]["vEE"]


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "eebraid.cli", "--format", "json", "classify", "111"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["payload"]["family"] == "Split"
