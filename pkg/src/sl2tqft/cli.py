"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from .operators import InvariantError, operators, verify_operator_identities
from .oracle import _is_prime, count_solutions, cross_check
from .ring import Scalar
from .surface import (
    FormulaVariant,
    PunctureKind,
    SurfaceSpec,
    adjudicate,
    closed_form,
    enumerate_specs,
    evaluate_tqft,
    parse_punctures,
)
from .words import WordStructureError, WordSyntaxError, evaluate_word, parse_word, word_to_spec

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

PUNCTURE_GRAMMAR = "SPEC := '' | item (',' item)*, item := kind ':' count, kind in {jp, jm, mi}"
WORD_GRAMMAR = "word := 'Dt' sep (factor sep)* 'D'; factor := (L|JP|JM|MI) ('^' n)?; sep := '.' | '∘' | spaces"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return v


def _spec_from(genus: int, punctures: str) -> SurfaceSpec:
    try:
        counts = parse_punctures(punctures)
    except ValueError as exc:
        raise UsageError(f"--punctures: {exc}\n  grammar: {PUNCTURE_GRAMMAR}") from None
    return SurfaceSpec(genus, counts[PunctureKind.JPLUS], counts[PunctureKind.JMINUS],
                       counts[PunctureKind.MINUS_ID])


def _primes(text: str) -> list[int]:
    try:
        ps = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--primes: expected comma-separated odd primes, got {text!r}") from None
    bad = [p for p in ps if p < 3 or not _is_prime(p)]
    if bad:
        raise UsageError(f"--primes: not odd primes: {bad}")
    return ps


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sl2tqft", description="Motivic classes of parabolic SL(2,C)-representation varieties.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("class", help="virtual class of a punctured closed surface")
    c.add_argument("--genus", type=_nonneg, required=True)
    c.add_argument("--punctures", default="", help=PUNCTURE_GRAMMAR)
    c.add_argument("--method", choices=["tqft", "closed", "both"], default="tqft")
    c.add_argument("--variant", choices=["section5", "intro"], default="section5")
    c.add_argument("--format", choices=["text", "latex", "json"], default="text")

    m = sub.add_parser("matrix", help="dump an operator matrix")
    m.add_argument("--op", required=True,
                   choices=["l", "jp", "jm", "mi", "eta", "eta-inv", "sigma", "zg-l"])
    m.add_argument("--format", choices=["text", "latex", "json"], default="text")

    n = sub.add_parser("count", help="count F_p-points of the representation variety")
    n.add_argument("--genus", type=_nonneg, required=True)
    n.add_argument("--punctures", default="", help=PUNCTURE_GRAMMAR)
    n.add_argument("--prime", required=True)

    v = sub.add_parser("verify", help="operator identities, closed forms and point counts over a grid")
    v.add_argument("--max-genus", type=_nonneg, default=2)
    v.add_argument("--max-punctures", type=_nonneg, default=2)
    v.add_argument("--primes", default="5,13")
    v.add_argument("--format", choices=["text", "json"], default="text")

    a = sub.add_parser("adjudicate", help="compare closed-form conventions with the operator pipeline")
    a.add_argument("--genus", type=_nonneg, required=True)
    a.add_argument("--punctures", default="", help=PUNCTURE_GRAMMAR)
    a.add_argument("--format", choices=["text", "json"], default="text")

    e = sub.add_parser("eval", help="evaluate a bordism word")
    e.add_argument("--word", required=True, help=WORD_GRAMMAR)
    e.add_argument("--format", choices=["text", "latex", "json"], default="text")
    return p


# -- reports ------------------------------------------------------------------

def _render_value(v, fmt: str):
    if v is None:
        return None if fmt == "json" else "undefined"
    if isinstance(v, Scalar):
        return v.to_json() if fmt == "json" else v.render("text")
    if fmt == "json":
        return v if isinstance(v, int) else {"num": v.numerator, "den": v.denominator}
    return str(v)


def _sort_key(rec: dict):
    s = rec["spec"]
    prime = rec.get("prime")
    return (s["genus"], s["r_plus"], s["r_minus"], s["t"], -1 if prime is None else prime,
            rec["method_a"], rec["method_b"])


def emit_report(records: Sequence[dict], fmt: str = "text") -> str:
    """One line (text) or one object (json) per record, in (genus, r+, r-, t, prime) order."""
    records = sorted(records, key=_sort_key)
    if fmt == "json":
        out = []
        for rec in records:
            item = {
                "spec": rec["spec"], "method_a": rec["method_a"], "method_b": rec["method_b"],
                "value_a": _render_value(rec["value_a"], "json"),
                "value_b": _render_value(rec["value_b"], "json"),
                "pass": rec["pass"],
            }
            if rec.get("prime") is not None:
                item["prime"] = rec["prime"]
            out.append(item)
        return json.dumps(out, indent=1)
    lines = []
    for rec in records:
        s = rec["spec"]
        tag = {True: "PASS", False: "FAIL", None: "N/A "}[rec["pass"]]
        where = f"g={s['genus']} r+={s['r_plus']} r-={s['r_minus']} t={s['t']}"
        if rec.get("prime") is not None:
            where += f" p={rec['prime']}"
        lines.append(
            f"{tag} {where} {rec['method_a']} vs {rec['method_b']}: "
            f"{_render_value(rec['value_a'], 'text')} | {_render_value(rec['value_b'], 'text')}"
        )
    return "\n".join(lines)


def _report_exit(records) -> int:
    return EXIT_MISMATCH if any(r["pass"] is False for r in records) else EXIT_OK


# -- commands -----------------------------------------------------------------

def _cmd_class(args) -> int:
    spec = _spec_from(args.genus, args.punctures)
    variant = FormulaVariant(args.variant)
    if args.method == "tqft":
        print(evaluate_tqft(spec).render(args.format))
        return EXIT_OK
    try:
        closed = closed_form(spec, variant)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.method == "closed":
        print(closed.render(args.format))
        return EXIT_OK
    tqft = evaluate_tqft(spec)
    ok = tqft == closed
    if args.format == "json":
        print(json.dumps({"spec": spec.to_json(), "tqft": tqft.to_json(),
                          "closed": closed.to_json(), "variant": variant.value, "pass": ok}))
    else:
        print(tqft.render(args.format))
        if not ok:
            print(f"MISMATCH closed[{variant.value}] = {closed.render(args.format)}")
    return EXIT_OK if ok else EXIT_MISMATCH


def _cmd_matrix(args) -> int:
    print(operators().by_name(args.op).render(args.format))
    return EXIT_OK


def _cmd_count(args) -> int:
    spec = _spec_from(args.genus, args.punctures)
    try:
        (p,) = _primes(args.prime)
    except ValueError:
        raise UsageError(f"--prime: expected one odd prime, got {args.prime!r}") from None
    print(count_solutions(spec, p))
    return EXIT_OK


def _verify_cell(spec: SurfaceSpec, primes: list[int]) -> list[dict]:
    tqft = evaluate_tqft(spec)
    closed = closed_form(spec)
    recs = [{"spec": spec.to_json(), "method_a": "tqft", "method_b": "closed:section5",
             "value_a": tqft, "value_b": closed, "pass": tqft == closed}]
    for p in primes:
        c = cross_check(spec, p)
        value = c.polynomial_value
        recs.append({"spec": spec.to_json(), "prime": p, "method_a": "count", "method_b": "tqft@q=p",
                     "value_a": c.count, "value_b": value.numerator if value.denominator == 1 else value,
                     "pass": c.passed})
    return recs


def _cmd_verify(args) -> int:
    primes = _primes(args.primes)
    report = verify_operator_identities(operators())
    if not report.passed:
        for line in report.lines():
            print(line, file=sys.stderr)
        return EXIT_INTERNAL
    specs = enumerate_specs(args.max_genus, args.max_punctures)
    with ThreadPoolExecutor() as pool:
        cells = list(pool.map(lambda s: _verify_cell(s, primes), specs))
    records = [r for cell in cells for r in cell]
    text = emit_report(records, args.format)
    if text:
        print(text)
    return _report_exit(records)


def _cmd_adjudicate(args) -> int:
    spec = _spec_from(args.genus, args.punctures)
    records = adjudicate(spec).records()
    print(emit_report(records, args.format))
    # Only the sign-based formulas are required to agree; other readings are informational.
    return EXIT_OK if records[0]["pass"] else EXIT_MISMATCH


def _cmd_eval(args) -> int:
    try:
        word = parse_word(args.word)
    except (WordSyntaxError, WordStructureError) as exc:
        raise UsageError(f"--word: {exc}\n  grammar: {WORD_GRAMMAR}") from None
    value = evaluate_word(word)
    if value != evaluate_tqft(word_to_spec(word)):
        raise InvariantError(f"word order changes the class for {word}")
    print(value.render(args.format))
    return EXIT_OK


_COMMANDS = {
    "class": _cmd_class, "matrix": _cmd_matrix, "count": _cmd_count,
    "verify": _cmd_verify, "adjudicate": _cmd_adjudicate, "eval": _cmd_eval,
}


def execute(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(execute())
