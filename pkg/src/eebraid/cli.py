"""Command-line interface: ``eebraid <command> ...``.

Exit codes: 0 ok, 1 usage error, 2 word parse error, 3 two independent
computations disagree, 4 a verification suite found counterexamples.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable

from . import search as search_mod
from . import verify as verify_mod
from .bracket import BRACKET_CAP, adequacy, jones_via_bracket, jones_via_transfer
from .braidword import BraidWord, ParseError, canonicalize, is_reduced, parse_bracket_notation, render, syllables
from .burau import burau, scalar_central
from .casesolver import solve_case, sweep
from .classify import classify_ee, enumerate_words
from .jones import CrossCheckError, is_unknot_closure, jones_via_burau

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CROSS_CHECK = 3
EXIT_SUITE_FAILED = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


class Output:
    """Writes records to stdout as JSON lines or as plain text."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def record(self, command: str, payload: dict, text: Callable[[dict], str] | None = None) -> None:
        if self.fmt == "json":
            rec = {"schemaVersion": SCHEMA_VERSION, "command": command, "payload": payload}
            self.stream.write(json.dumps(rec) + "\n")
        else:
            self.stream.write((text or _generic_text)(payload) + "\n")
        self.stream.flush()


def _generic_text(payload: dict) -> str:
    lines = []
    for k, v in payload.items():
        if isinstance(v, (dict, list)):
            v = json.dumps(v)
        lines.append(f"{k}: {v}")
    return "\n".join(lines)


def _word_arg(text: str) -> BraidWord:
    return parse_bracket_notation(text)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


# -- commands -----------------------------------------------------------------------


def cmd_analyze(args, out: Output) -> int:
    w = _word_arg(args.word)
    v_burau = jones_via_burau(w)
    v_bracket = jones_via_bracket(w) if len(w) <= BRACKET_CAP else jones_via_transfer(w)
    if v_burau != v_bracket:
        raise CrossCheckError(f"Jones pipelines disagree on {render(w)}")
    payload: dict = {
        "word": render(w),
        "canonical": render(canonicalize(w)),
        "length": len(w),
        "exponentSum": w.exponent_sum,
    }
    if is_reduced(w):
        ev = syllables(w)
        payload["exponentVector"] = list(ev.entries)
    if is_reduced(w, cyclic=True):
        cev = syllables(w, cyclic=True)
        payload["cyclicExponentVector"] = list(cev.entries)
        payload["weight"] = cev.weight
    report = classify_ee(w)
    payload.update({
        "adequacy": adequacy(w).to_json(),
        "jones": v_burau.to_json(),
        "jonesText": str(v_burau),
        "jonesPipelinesAgree": True,
        "unknot": is_unknot_closure(w),
        "central": scalar_central(burau(w)) is not None,
        "everywhereTrivial": report.everywhere_trivial,
        "vEE": report.v_ee,
    })
    out.record("analyze", payload)
    return EXIT_OK


def cmd_classify(args, out: Output) -> int:
    w = _word_arg(args.word)
    payload = {"word": render(w), "canonical": render(canonicalize(w)), **classify_ee(w).to_json()}
    out.record("classify", payload)
    return EXIT_OK


def cmd_enumerate(args, out: Output) -> int:
    if args.max_length > 14:
        raise UsageError("--max-length must be at most 14")

    def emit(w, r):
        if args.only_ee and not r.v_ee:
            return
        out.record("enumerate.word", {"word": render(w), **r.to_json()},
                   lambda p: f"{p['word'] or '()'}\tvEE={p['vEE']}\tfamily={p['family']}")

    summary = enumerate_words(args.max_length, emit)
    out.record("enumerate.summary", summary.to_json())
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    res = verify_mod.run_suite(args.suite, args.max_length)
    payload = res.to_json()

    def text(p):
        head = f"{p['suite']}: {'PASS' if p['passed'] else 'FAIL'} ({p['checked']} checked, {p['seconds']} s)"
        return "\n".join([head] + [f"  counterexample: {c}" for c in p["counterexamples"]])

    out.record("verify", payload, text)
    if res.passed:
        return EXIT_OK
    return EXIT_CROSS_CHECK if args.suite == "cross-check" else EXIT_SUITE_FAILED


def cmd_search(args, out: Output) -> int:
    t0 = _fraction(args.t)
    try:
        result = search_mod.run(t0, args.max_length, prune_commutator=args.prune_commutator)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    def text(p):
        lines = [f"t = {p['t']}, max length {p['maxLength']}, {p['seconds']} s"]
        lines.append("extendable words per length: " + ", ".join(f"{k}:{v}" for k, v in p["extendablePerLength"].items()))
        lines += [f"EE candidate: {c}" for c in p["candidates"]]
        lines += [f"rejected emission: {e['word']}" for e in p["rejectedEmissions"]]
        return "\n".join(lines)

    out.record("search", result.to_json(), text)
    return EXIT_OK


def cmd_case_solve(args, out: Output) -> int:
    if args.sweep is not None:
        reports = sweep(args.case, args.sweep)
    else:
        reports = [solve_case(args.case, args.n)]
    for rep in reports:
        def text(p):
            s = p["spec"]
            lines = [f"case {s['case']} n={s['n']} visible {s['visible']}: square={p['isSquare']}"]
            for r in p["roots"]:
                lines.append(f"  root {r['label']}: d = {r['dText']}, laurent={r['laurent']}, braid={r['matchedBraid']}")
            if p.get("note"):
                lines.append(f"  note: {p['note']}")
            return "\n".join(lines)

        out.record("case-solve", rep.to_json(), text)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------


def _globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json"), default=d("text"), help="output format")
    parser.add_argument("--threads", type=int, default=d(1), help="worker threads (results do not depend on it)")
    parser.add_argument("--seed-order", choices=("fixed",), default=d("fixed"), help="seed processing order")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eebraid", description="Everywhere-equivalent 3-braid toolkit")
    _globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        _globals(p, suppress=True)
        return p

    p = add("analyze", "invariants of one word")
    p.add_argument("word")
    p.set_defaults(func=cmd_analyze)

    p = add("classify", "everywhere-equivalence verdict and family of one word")
    p.add_argument("word")
    p.set_defaults(func=cmd_classify)

    p = add("enumerate", "classify every canonical word up to a length")
    p.add_argument("--max-length", type=int, required=True)
    p.add_argument("--only-ee", action="store_true", help="stream only vEE words")
    p.set_defaults(func=cmd_enumerate)

    p = add("verify", "run a verification suite")
    p.add_argument("--suite", choices=verify_mod.SUITES, required=True)
    p.add_argument("--max-length", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = add("search", "seed-and-extend search at a rational t")
    p.add_argument("--t", required=True, help="rational value such as 2 or 4/5")
    p.add_argument("--max-length", type=int, required=True)
    p.add_argument("--prune-commutator", action="store_true")
    p.set_defaults(func=cmd_search)

    p = add("case-solve", "symbolic analysis of one neighbouring-syllable case")
    p.add_argument("--case", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--sweep", type=int, default=None, metavar="MAX_N", help="solve n = 1..MAX_N")
    p.set_defaults(func=cmd_case_solve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be positive")
        return args.func(args, Output(args.format))
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CrossCheckError as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return EXIT_CROSS_CHECK


if __name__ == "__main__":
    sys.exit(main())
