"""Command-line front end.

Subcommands: sigma, convolve, reps, check, scan, euler.  Output formats:
plain (default, human-readable, byte-stable), json (one document per
invocation), csv.  Exit codes: 0 computed/verified, 1 a verification
found a counterexample or mismatch, 2 usage or domain error.

Sieve and table limits are derived from the requested n range; there is
no separate limit flag.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Any, Optional

from .arith import build_partition_table, build_sigma_table
from .convolution import (
    WeightMode,
    convolve_sigma_odd,
    euler_partition_residual,
    euler_sigma_residual,
)
from .errors import PolysigmaError
from .representations import count_representations
from .verify import (
    CongruenceCase,
    CongruenceReport,
    Conjecture,
    check_congruence,
    holds_set,
    scan_iff,
)

SCHEMA_VERSION = "1"

_WEIGHTS = {
    "unsigned": WeightMode.UNSIGNED,
    "alternating": WeightMode.ALTERNATING,
    "triangular-sign": WeightMode.TRIANGULAR_SIGN,
}


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _emit_json(
    command: str, parameters: dict[str, Any], results: dict[str, Any], started: float
) -> None:
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "results": results,
        "timing_ms": max(0, int((time.perf_counter() - started) * 1000)),
    }
    print(json.dumps(record))


def _csv_writer() -> Any:
    return csv.writer(sys.stdout, lineterminator="\n")


def _format_pairs(pairs: list[tuple[int, int]]) -> str:
    return " ".join(f"({l},{k})" for l, k in pairs)


def _report_fields(report: CongruenceReport) -> list[Any]:
    ce = report.minimal_counterexample
    if ce is None:
        return ["", "", "", ""]
    return [ce.n, ce.lhs_value, ce.required_residue, ce.modulus]


def _report_json(report: CongruenceReport) -> dict[str, Any]:
    ce = report.minimal_counterexample
    return {
        "m": report.case.m,
        "holds": report.holds,
        "trivial_modulus": report.trivial_modulus,
        "counterexample": None
        if ce is None
        else {
            "n": ce.n,
            "lhs_value": ce.lhs_value,
            "required_residue": ce.required_residue,
            "modulus": ce.modulus,
        },
    }


def _report_plain_tail(report: CongruenceReport) -> str:
    if report.trivial_modulus:
        return "trivially-holds modulus=1"
    if report.holds:
        return "holds"
    ce = report.minimal_counterexample
    return (
        f"counterexample n={ce.n} lhs={ce.lhs_value} "
        f"required={ce.required_residue} modulus={ce.modulus}"
    )


def cmd_sigma(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    table = build_sigma_table(args.n_max)
    ns = range(1, args.n_max + 1)
    if args.which == "odd":
        rows = [[n, int(table.sigma_odd[n])] for n in ns]
        header = ["n", "sigma_odd"]
    elif args.which == "full":
        rows = [[n, int(table.sigma[n])] for n in ns]
        header = ["n", "sigma"]
    else:
        rows = [[n, int(table.sigma_odd[n]), int(table.sigma[n])] for n in ns]
        header = ["n", "sigma_odd", "sigma"]
    if args.format == "json":
        _emit_json(
            "sigma",
            {"n_max": args.n_max, "which": args.which},
            {"rows": rows},
            started,
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(header)
        writer.writerows(rows)
    else:
        for row in rows:
            print(" ".join(str(x) for x in row))
    return 0


def cmd_convolve(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    table = build_sigma_table(args.n)
    result = convolve_sigma_odd(table, args.m, args.n, _WEIGHTS[args.weight])
    if args.format == "json":
        _emit_json(
            "convolve",
            {"m": args.m, "n": args.n, "weight": args.weight},
            {"value": result.value, "support_size": result.support_size},
            started,
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["m", "n", "weight", "value", "support_size"])
        writer.writerow([args.m, args.n, args.weight, result.value, result.support_size])
    else:
        print(f"value {result.value}")
        print(f"support {result.support_size}")
    return 0


def cmd_reps(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    wit = count_representations(args.m, args.n)
    if args.format == "json":
        results: dict[str, Any] = {"a_count": wit.a_count, "b_count": wit.b_count}
        if args.witnesses:
            results["a_witnesses"] = [list(p) for p in wit.a_witnesses]
            results["b_witnesses"] = [list(p) for p in wit.b_witnesses]
        _emit_json(
            "reps",
            {"m": args.m, "n": args.n, "witnesses": args.witnesses},
            results,
            started,
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["m", "n", "a_count", "b_count"])
        writer.writerow([args.m, args.n, wit.a_count, wit.b_count])
    else:
        print(f"a {wit.a_count}")
        print(f"b {wit.b_count}")
        if args.witnesses:
            print(f"A {_format_pairs(wit.a_witnesses)}".rstrip())
            print(f"B {_format_pairs(wit.b_witnesses)}".rstrip())
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    case = CongruenceCase(Conjecture(args.conjecture), args.m)
    table = build_sigma_table(args.n_max)
    report = check_congruence(case, args.n_max, table)
    if args.format == "json":
        _emit_json(
            "check",
            {"conjecture": args.conjecture, "m": args.m, "n_max": args.n_max},
            _report_json(report),
            started,
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(
            ["conjecture", "m", "n_max", "holds", "trivial_modulus",
             "ce_n", "ce_lhs", "ce_required", "ce_modulus"]
        )
        writer.writerow(
            [args.conjecture, args.m, args.n_max, report.holds,
             report.trivial_modulus, *_report_fields(report)]
        )
    else:
        print(
            f"conjecture={args.conjecture} m={args.m} n_max={args.n_max} "
            + _report_plain_tail(report)
        )
    return 0 if report.holds else 1


def cmd_scan(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    table = build_sigma_table(args.n_max)
    reports = scan_iff(
        Conjecture(args.conjecture),
        (args.m_min, args.m_max),
        args.n_max,
        table,
        threads=args.threads,
    )
    held = sorted(holds_set(reports))
    if args.format == "json":
        _emit_json(
            "scan",
            {
                "conjecture": args.conjecture,
                "m_min": args.m_min,
                "m_max": args.m_max,
                "n_max": args.n_max,
                "threads": args.threads,
            },
            {"reports": [_report_json(r) for r in reports], "holds_set": held},
            started,
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(
            ["m", "holds", "trivial_modulus", "ce_n", "ce_lhs", "ce_required", "ce_modulus"]
        )
        for report in reports:
            writer.writerow(
                [report.case.m, report.holds, report.trivial_modulus,
                 *_report_fields(report)]
            )
    else:
        for report in reports:
            print(f"m={report.case.m} " + _report_plain_tail(report))
        print("holds_set {" + ", ".join(str(m) for m in held) + "}")
    return 0


def cmd_euler(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    mismatch: Optional[dict[str, int]] = None
    if args.which == "partition":
        ptable = build_partition_table(args.n_max)
        checked = args.n_max + 1
        for n in range(0, args.n_max + 1):
            residual = euler_partition_residual(ptable, n)
            expected = 1 if n == 0 else 0
            if residual != expected:
                mismatch = {"n": n, "residual": residual, "expected": expected}
                break
    else:
        table = build_sigma_table(args.n_max)
        checked = args.n_max
        for n in range(1, args.n_max + 1):
            residual = euler_sigma_residual(table, n)
            if residual != 0:
                mismatch = {"n": n, "residual": residual, "expected": 0}
                break
    if args.format == "json":
        _emit_json(
            "euler",
            {"which": args.which, "n_max": args.n_max},
            {"checked": checked, "all_match": mismatch is None, "first_mismatch": mismatch},
            started,
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["which", "n_max", "checked", "all_match", "first_mismatch_n"])
        writer.writerow(
            [args.which, args.n_max, checked, mismatch is None,
             "" if mismatch is None else mismatch["n"]]
        )
    else:
        if mismatch is None:
            print(f"which={args.which} n_max={args.n_max} all-match checked={checked}")
        else:
            print(
                f"which={args.which} n_max={args.n_max} mismatch "
                f"n={mismatch['n']} residual={mismatch['residual']} "
                f"expected={mismatch['expected']}"
            )
    return 0 if mismatch is None else 1


def _add_format(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format", choices=["plain", "json", "csv"], default="plain",
        help="output format (default: plain)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polysigma",
        description="Odd-divisor-sum convolutions over generalized polygonal "
        "numbers, with congruence verification scans.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("sigma", help="tabulate sigma_odd and sigma")
    p.add_argument("--n-max", dest="n_max", type=_positive_int, required=True)
    p.add_argument("--which", choices=["odd", "full", "both"], default="odd")
    _add_format(p)
    p.set_defaults(func=cmd_sigma)

    p = subs.add_parser("convolve", help="evaluate one weighted offset sum")
    p.add_argument("--m", type=int, required=True, help="polygonal order of the offsets")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--weight", choices=sorted(_WEIGHTS), default="unsigned")
    _add_format(p)
    p.set_defaults(func=cmd_convolve)

    p = subs.add_parser("reps", help="count square-plus-polygonal representations")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--witnesses", action="store_true", help="print witness pairs")
    _add_format(p)
    p.set_defaults(func=cmd_reps)

    p = subs.add_parser("check", help="check one congruence family for one m")
    p.add_argument("--conjecture", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=_positive_int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_check)

    p = subs.add_parser("scan", help="scan a congruence family over a range of m")
    p.add_argument("--conjecture", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--m-min", dest="m_min", type=_positive_int, required=True)
    p.add_argument("--m-max", dest="m_max", type=_positive_int, required=True)
    p.add_argument("--n-max", dest="n_max", type=_positive_int, required=True)
    p.add_argument(
        "--threads", type=_positive_int, default=None,
        help="worker threads (default: number of processors)",
    )
    _add_format(p)
    p.set_defaults(func=cmd_scan)

    p = subs.add_parser("euler", help="verify the pentagonal-offset recurrences")
    p.add_argument("--which", choices=["partition", "sigma"], required=True)
    p.add_argument("--n-max", dest="n_max", type=_positive_int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_euler)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "reps" and args.witnesses and args.format == "csv":
        parser.error("witness lists are not representable in csv; use plain or json")
    try:
        return args.func(args)
    except (PolysigmaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
