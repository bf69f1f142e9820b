"""Command line interface.

Every command emits schema-stable records, one per line, as JSON
(default) or CSV (``--format csv``).  Reruns over the same inputs are
byte-identical.

Exit codes: 0 success, 1 a verified claim failed where it was expected
to hold, 2 usage error, 3 malformed number spec.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .bounds import BOUND_KINDS, BoundSpec, Outcome
from .cf import convergents
from .exact import RadicalSum
from .specparse import DecPrefix, NumberSpec, SpecParseError, parse_number, render
from .verify import (
    LEMMA_IDS,
    _LEMMA_MIN_K,
    LemmaInstance,
    check_lemma,
    classify_equality,
    classical_window_check,
    coerce_number,
    nathanson_applicable,
    verify_bound_scan,
)

__all__ = ["main"]

_K_BOUNDS = ("nathanson", "refined_f")

_FIELDS = {
    "expand": ["input", "command", "cf", "exact"],
    "convergents": ["input", "command", "n", "p", "q"],
    "verify": [
        "input", "command", "bound", "k", "n", "p", "q",
        "outcome", "margin_sign", "margin_decimal_50",
    ],
    "classify-equality": [
        "input", "command", "type", "k", "n", "p", "q", "outcome",
        "margin_sign", "margin_decimal_50", "equality_class", "equal_indices",
    ],
    "lemmas": ["command", "lemma", "k", "depth", "holds", "margin_sign", "margin_decimal_50"],
    "classical": ["input", "command", "rule", "n", "holds"],
    "report": [
        "input", "command", "type", "bound", "k", "n",
        "applicable", "holds_strict", "holds_equal", "fails",
    ],
}


def _margin_fields(margin: RadicalSum) -> tuple[int, str]:
    return margin.sign(), margin.decimal(50)


def _exact_text(spec: NumberSpec) -> str:
    value, _ = _coerced(spec)
    if isinstance(value, Fraction):
        return f"rat:{value.numerator}/{value.denominator}"
    return f"surd:({value.a}{value.b:+d}*sqrt({value.d}))/{value.c}"


def _coerced(spec: NumberSpec):
    v = spec.parsed
    if isinstance(v, DecPrefix):
        v = v.value
    return coerce_number(v)


def _require_exact(spec: NumberSpec, command: str) -> None:
    if not spec.is_exact:
        raise SpecParseError(f"dec: inputs carry finite precision; {command} needs an exact value")


def _parse_arg_spec(text: str) -> NumberSpec:
    return parse_number(text)


# ---------------------------------------------------------------------------
# command implementations; each returns (rows, ok)


def _cmd_expand(args) -> tuple[list[dict], bool]:
    spec = _parse_arg_spec(args.number)
    _, cf = _coerced(spec)
    row = {
        "input": render(spec),
        "command": "expand",
        "cf": cf.render(),
        "exact": _exact_text(spec),
    }
    return [row], True


def _cmd_convergents(args) -> tuple[list[dict], bool]:
    spec = _parse_arg_spec(args.number)
    _, cf = _coerced(spec)
    rows = [
        {"input": render(spec), "command": "convergents", "n": c.n, "p": c.p, "q": c.q}
        for c in convergents(cf, args.n)
    ]
    return rows, True


def _cmd_verify(args) -> tuple[list[dict], bool]:
    spec = _parse_arg_spec(args.number)
    _require_exact(spec, "verify")
    bspec = BoundSpec(args.bound, args.k)
    value, cf = _coerced(spec)
    records = verify_bound_scan(value, bspec, args.n)
    rows = []
    for r in records:
        sign, dec = r.margin_sign, r.margin.decimal(50)
        rows.append({
            "input": render(spec),
            "command": "verify",
            "bound": args.bound,
            "k": args.k,
            "n": r.n,
            "p": r.p,
            "q": r.q,
            "outcome": r.outcome.value,
            "margin_sign": sign,
            "margin_decimal_50": dec,
        })
    ok = True
    if not cf.is_finite and (
        args.bound not in _K_BOUNDS or nathanson_applicable(value, args.k)
    ):
        ok = any(r.outcome is not Outcome.FAILS for r in records)
    return rows, ok


def _cmd_classify(args) -> tuple[list[dict], bool]:
    spec = _parse_arg_spec(args.number)
    _require_exact(spec, "classify-equality")
    value, cf = _coerced(spec)
    if cf.is_finite:
        raise SpecParseError("classify-equality needs an irrational input")
    records = verify_bound_scan(value, BoundSpec("refined_f", args.k), args.n)
    base = {"input": render(spec), "command": "classify-equality", "k": args.k}
    rows = []
    for r in records:
        rows.append({
            **base, "type": "detail", "n": r.n, "p": r.p, "q": r.q,
            "outcome": r.outcome.value, "margin_sign": r.margin_sign,
            "margin_decimal_50": r.margin.decimal(50),
            "equality_class": None, "equal_indices": None,
        })
    equal_ns = [r.n for r in records if r.outcome is Outcome.HOLDS_EQUAL]
    rows.append({
        **base, "type": "summary", "n": None, "p": None, "q": None,
        "outcome": None, "margin_sign": None, "margin_decimal_50": None,
        "equality_class": classify_equality(value, args.k),
        "equal_indices": equal_ns,
    })
    return rows, True


def _parse_k_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit() or int(lo) < 1 or int(hi) < int(lo):
        raise argparse.ArgumentTypeError("expected A..B with 1 <= A <= B")
    return range(int(lo), int(hi) + 1)


def _cmd_lemmas(args) -> tuple[list[dict], bool]:
    rows = []
    ok = True
    for k in args.k_range:
        for lemma in LEMMA_IDS:
            if k < _LEMMA_MIN_K.get(lemma, 1):
                continue
            params = {"depth": args.depth} if lemma.startswith("R") else {}
            holds, margin = check_lemma(LemmaInstance(lemma, k, params))
            sign, dec = _margin_fields(margin)
            rows.append({
                "command": "lemmas",
                "lemma": lemma,
                "k": k,
                "depth": args.depth if lemma.startswith("R") else None,
                "holds": holds,
                "margin_sign": sign,
                "margin_decimal_50": dec,
            })
            ok = ok and holds
    return rows, ok


def _cmd_classical(args) -> tuple[list[dict], bool]:
    spec = _parse_arg_spec(args.number)
    _require_exact(spec, "classical")
    value, cf = _coerced(spec)
    if cf.is_finite:
        raise SpecParseError("classical window rules need an irrational input")
    holds = classical_window_check(value, args.rule, args.n)
    row = {
        "input": render(spec), "command": "classical",
        "rule": args.rule, "n": args.n, "holds": holds,
    }
    return [row], holds


def _cmd_report(args) -> tuple[list[dict], bool]:
    try:
        with open(args.corpus, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise SpecParseError(f"cannot read corpus: {exc}")
    rows = []
    ok = True
    bspec = BoundSpec(args.bound, args.k)
    for raw in lines:
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        spec = parse_number(text)
        value, cf = _coerced(spec)
        depth = min(args.n, len(cf) - 1) if cf.is_finite else args.n
        records = verify_bound_scan(value, bspec, depth)
        applicable = not cf.is_finite and (
            args.bound not in _K_BOUNDS or nathanson_applicable(value, args.k)
        )
        counts = {o: 0 for o in Outcome}
        for r in records:
            counts[r.outcome] += 1
        if applicable and counts[Outcome.FAILS] == len(records):
            ok = False
        rows.append({
            "input": render(spec),
            "command": "report",
            "type": "summary",
            "bound": args.bound,
            "k": args.k,
            "n": args.n,
            "applicable": applicable,
            "holds_strict": counts[Outcome.HOLDS_STRICT],
            "holds_equal": counts[Outcome.HOLDS_EQUAL],
            "fails": counts[Outcome.FAILS],
        })
    return rows, ok


# ---------------------------------------------------------------------------


def _emit(rows: list[dict], command: str, fmt: str, out) -> None:
    fields = _FIELDS[command]
    if fmt == "jsonl":
        for row in rows:
            out.write(json.dumps({f: row.get(f) for f in fields}) + "\n")
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_csv_cell(row.get(f)) for f in fields])
    out.write(buf.getvalue())


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return ";".join(str(x) for x in v)
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfbounds",
        description="Exact continued-fraction expansion and approximation-bound checks.",
    )
    parser.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="canonical continued fraction of a number")
    p.add_argument("number")

    p = sub.add_parser("convergents", help="convergents p_n/q_n up to index n")
    p.add_argument("number")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", help="exact outcome of |x - p/q| against a bound")
    p.add_argument("number")
    p.add_argument("--bound", choices=BOUND_KINDS, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("classify-equality", help="equality indices and extremal class")
    p.add_argument("number")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("lemmas", help="exact certificates for the proof-case inequalities")
    p.add_argument("--k-range", type=_parse_k_range, required=True, metavar="A..B")
    p.add_argument("--depth", type=int, default=1)

    p = sub.add_parser("classical", help="window checks for the classical refinements")
    p.add_argument("number")
    p.add_argument("--rule", choices=("vahlen_pairs", "borel_triples", "hancl_nair_triples"),
                   required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("report", help="summary scan over a corpus file of number specs")
    p.add_argument("--corpus", required=True)
    p.add_argument("--bound", choices=BOUND_KINDS, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, required=True)

    return parser


_HANDLERS = {
    "expand": _cmd_expand,
    "convergents": _cmd_convergents,
    "verify": _cmd_verify,
    "classify-equality": _cmd_classify,
    "lemmas": _cmd_lemmas,
    "classical": _cmd_classical,
    "report": _cmd_report,
}


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    if args.command in ("verify", "report") and args.bound in _K_BOUNDS and args.k is None:
        parser.error(f"--bound {args.bound} requires --k")
    try:
        rows, ok = _HANDLERS[args.command](args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    _emit(rows, args.command, args.format, out)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
