"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import measure, metrics, shifts
from .errors import ChaconError, EmptyRangeError
from .formatting import decimal_str, ratio_str
from .report import Report
from .words import DEFAULT_CAP, ChaconHierarchy, level_length

FORMATS = ("table", "csv", "json")
PROFILE_COLUMNS = ("shift", "d0_num", "d0_den", "d_num", "d_den", "d0_decimal", "d_decimal")
MEASURE_COLUMNS = ("level", "fr_num", "fr_den", "fr_decimal")
TARGETS = ("structure", "lemma0", "lemma1", "lemma2", "lemma3", "prop1", "prop2", "all")
DISPLAY_LIMIT = 64
MIN_CAP = 4


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    materialization_cap: int = DEFAULT_CAP
    output_format: str = "table"
    output_path: str | None = None

    def __post_init__(self):
        if self.materialization_cap < MIN_CAP:
            raise UsageError(f"materialization cap must be at least {MIN_CAP}")
        if self.output_format not in FORMATS:
            raise UsageError(f"unknown output format {self.output_format!r}")


def resolve_cap(flag: int | None, environ=os.environ) -> int:
    if flag is not None:
        return flag
    raw = environ.get("CHACON_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"CHACON_CAP must be an integer, got {raw!r}") from None
    return DEFAULT_CAP


def parse_span(text: str) -> tuple[int, int]:
    try:
        a, b = text.split(":")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b with integers, got {text!r}") from None


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _fraction_fields(prefix: str, value: Fraction) -> dict:
    return {f"{prefix}_num": value.numerator, f"{prefix}_den": value.denominator}


def _csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _table(columns, rows) -> str:
    cells = [list(columns)] + [[str(row[c]) for c in columns] for row in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(columns))]
    lines = ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"


def _json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _render_rows(fmt: str, columns, rows) -> str:
    if fmt == "csv":
        return _csv(columns, rows)
    if fmt == "json":
        return _json(rows)
    return _table(columns, rows)


def _display(word) -> str:
    text = str(word)
    if len(text) > DISPLAY_LIMIT:
        return f"{text[:DISPLAY_LIMIT]}... ({len(text)} symbols)"
    return text


def _pair(value: Fraction) -> str:
    return f"{ratio_str(value)} ({decimal_str(value)})"


# -- commands ----------------------------------------------------------------

def cmd_generate(args, config: RunConfig, h: ChaconHierarchy) -> tuple[str, int]:
    if args.range is not None:
        a, b = args.range
        if a < 0 or b < a:
            raise UsageError(f"invalid range {a}:{b}")
        word = h.segment(a, b - a)
    else:
        word = h.build_level(args.level)
    return str(word) + "\n", 0


def cmd_distance(args, config: RunConfig, h: ChaconHierarchy) -> tuple[str, int]:
    i = args.shift
    dist = shifts.limit_distance(i, h)
    dec = dist.decomposition
    if args.k is not None:
        d0 = shifts.finite_level_d0(i, args.k, decomposition=dec)
        d = shifts.finite_level_d(i, args.k, decomposition=dec)
    else:
        d0, d = dist.d0_limit, dist.d_limit
    record = {"shift": i, "anchor": dec.n, "k": args.k, "beta1": str(dec.beta1),
              "beta2": str(dec.beta2)}
    record.update(_fraction_fields("d0_beta1", dec.d0_beta1))
    record.update(_fraction_fields("d0_beta2", dec.d0_beta2))
    record.update(_fraction_fields("d0", d0))
    record.update(_fraction_fields("d", d))
    record["d0_decimal"] = decimal_str(d0)
    record["d_decimal"] = decimal_str(d)
    if config.output_format == "json":
        return _json(record), 0
    if config.output_format == "csv":
        columns = ["shift", "anchor", "k", "d0_num", "d0_den", "d_num", "d_den",
                   "d0_decimal", "d_decimal"]
        row = {c: ("" if record[c] is None else record[c]) for c in columns}
        return _csv(columns, [row]), 0
    scope = "limit" if args.k is None else f"level {dec.n + args.k} (k={args.k})"
    lines = [
        f"shift: {i}",
        f"anchor n: {dec.n}",
        f"beta1: {_display(dec.beta1)}",
        f"beta2: {_display(dec.beta2)}",
        f"d0(W_n, beta1): {_pair(dec.d0_beta1)}",
        f"d0(W_n, beta2): {_pair(dec.d0_beta2)}",
        f"scope: {scope}",
        f"d0 = {_pair(d0)}",
        f"d = {_pair(d)}",
    ]
    return "\n".join(lines) + "\n", 0


def cmd_profile(args, config: RunConfig, h: ChaconHierarchy) -> tuple[str, int]:
    a, b = args.shifts
    if b < a:
        raise EmptyRangeError(f"empty shift range {a}:{b}")
    if a < 1:
        raise UsageError("shifts must be positive")
    rows = [r.as_dict() for r in shifts.profile(range(a, b + 1), h)]
    return _render_rows(config.output_format, PROFILE_COLUMNS, rows), 0


def cmd_measure(args, config: RunConfig, h: ChaconHierarchy) -> tuple[str, int]:
    pattern = args.pattern
    if not pattern or pattern.strip("01"):
        raise UsageError(f"pattern must be a nonempty 0/1 string, got {pattern!r}")
    a, b = args.levels
    if b < a or a < 0:
        raise EmptyRangeError(f"empty level range {a}:{b}")
    seq = measure.measure_estimate(pattern, range(a, b + 1), h)
    rows = [{"level": n, "fr_num": v.numerator, "fr_den": v.denominator,
             "fr_decimal": decimal_str(v)} for n, v in seq.values]
    last = seq.last_difference
    if config.output_format == "json":
        payload = {"pattern": pattern, "values": rows,
                   "final_num": seq.final.numerator, "final_den": seq.final.denominator,
                   "last_difference_num": None if last is None else last.numerator,
                   "last_difference_den": None if last is None else last.denominator}
        return _json(payload), 0
    text = _render_rows(config.output_format, MEASURE_COLUMNS, rows)
    if config.output_format == "table":
        text += f"final: {_pair(seq.final)}\n"
        text += "last difference: " + ("n/a" if last is None else _pair(last)) + "\n"
        text += "(the measure of a cylinder set does not depend on its position)\n"
    return text, 0


def _verify_reports(target: str, args, h: ChaconHierarchy) -> list[Report]:
    cap = h.cap

    def bound(value, default):
        return default if value is None else value

    reports: list[Report] = []
    if target in ("structure", "all"):
        top = bound(args.max_n, min(12, cap))
        merged = Report(f"structure of W_0..W_{top}")
        for n in range(top + 1):
            merged.extend(h.check_structure(n))
        reports.append(merged)
    if target in ("lemma0", "all"):
        reports.append(h.verify_occurrences(bound(args.max_n, min(10, cap)), max_n=5, max_k=5))
    if target in ("lemma1", "all"):
        top = bound(args.max_n, min(12, cap - 1))
        merged = Report(f"Lemma-1 closed form for n = 0..{top}")
        for n in range(top + 1):
            merged.extend(metrics.verify_lemma1(n, h))
        reports.append(merged)
    if target in ("lemma2", "all"):
        if args.n is not None:
            levels = [args.n]
        else:
            levels = range(1, bound(args.max_n, min(7, cap - 3)) + 1)
        merged = Report("factors of W stay above 1/6 from W_n")
        for n in levels:
            search = args.search_level if args.search_level is not None else n + 3
            merged.extend(metrics.verify_lemma2(n, search, h))
        reports.append(merged)
    if target in ("lemma3", "all"):
        upper = min(bound(args.max_shift, 10**6), level_length(cap) - 1)
        sample = shifts.sample_shifts(min(bound(args.samples, 200), upper), upper, args.seed)
        reports.append(shifts.verify_lemma3(sample, hierarchy=h))
    if target in ("prop1", "all"):
        rep = shifts.verify_prop1(bound(args.max_level, min(6, cap)), h)
        reports.append(rep)
    if target in ("prop2", "all"):
        reports.append(shifts.verify_prop2(bound(args.max_n, min(10, cap)), h))
    return reports


def cmd_verify(args, config: RunConfig, h: ChaconHierarchy) -> tuple[str, int]:
    reports = _verify_reports(args.target, args, h)
    ok = all(r.passed for r in reports)
    if config.output_format == "json":
        payload = {"passed": ok, "reports": [_report_dict(r) for r in reports]}
        text = _json(payload)
    elif config.output_format == "csv":
        rows = [{"report": r.title, "check": c.name, "passed": c.passed,
                 "computed": _plain(c.computed), "predicted": _plain(c.predicted),
                 "detail": c.detail} for r in reports for c in r.checks]
        text = _csv(("report", "check", "passed", "computed", "predicted", "detail"), rows)
    else:
        text = "\n".join(r.render() for r in reports) + "\n"
        text += f"OVERALL: {'PASS' if ok else 'FAIL'}\n"
    if not ok:
        first = next(c for r in reports for c in r.checks if not c.passed)
        print(f"verification failed: {first.line()}", file=sys.stderr)
    return text, 0 if ok else 1


def _plain(value):
    if value is None:
        return ""
    if isinstance(value, Fraction):
        return ratio_str(value)
    return str(value)


def _report_dict(report: Report) -> dict:
    summary = {}
    for key, value in report.summary.items():
        if key == "minima_by_level":
            value = {str(m): {"d0": ratio_str(v), "argmins": a} for m, (v, a) in value.items()}
        elif isinstance(value, Fraction):
            value = ratio_str(value)
        summary[key] = value
    return {
        "title": report.title,
        "passed": report.passed,
        "checks": [{"name": c.name, "passed": c.passed, "computed": _plain(c.computed),
                    "predicted": _plain(c.predicted), "detail": c.detail}
                   for c in report.checks],
        "summary": summary,
    }


# -- parsing -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None,
                        help=f"materialization cap (default: $CHACON_CAP or {DEFAULT_CAP})")
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--output", default=None, help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="chacon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="print W_n or a window of W")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--level", type=int)
    group.add_argument("--range", type=parse_span, help="half-open window a:b of W")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("distance", parents=[common], help="distance between W and a shift")
    p.add_argument("--shift", type=positive_int, required=True)
    p.add_argument("--k", type=int, default=None, help="finite level n+k instead of the limit")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("profile", parents=[common], help="limit distances over shifts a:b")
    p.add_argument("--shifts", type=parse_span, required=True, help="inclusive range a:b")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("measure", parents=[common], help="pattern frequencies in W_n")
    p.add_argument("--pattern", required=True)
    p.add_argument("--levels", type=parse_span, required=True, help="inclusive range a:b")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("verify", parents=[common], help="check the combinatorial claims")
    p.add_argument("target", choices=TARGETS)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--search-level", type=int, default=None)
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--max-shift", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(resolve_cap(args.cap), args.format, args.output)
        hierarchy = ChaconHierarchy(config.materialization_cap)
        command: Callable = args.func
        text, code = command(args, config, hierarchy)
    except (ChaconError, UsageError) as exc:
        print(f"chacon: error: {exc}", file=sys.stderr)
        return 2
    if config.output_path:
        try:
            with open(config.output_path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"chacon: error: cannot write {config.output_path}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
