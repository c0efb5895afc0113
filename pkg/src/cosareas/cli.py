"""Command-line front end.

    cosareas exact --n 3
    cosareas exact --max-n 8 --format csv
    cosareas converge --n 3 --ks 11,101,1001
    cosareas converge --n 3 --k-start 11 --k-factor 10 --k-count 4
    cosareas verify --suite cross-method
    cosareas egf --which a372324 --max-n 8 --bfile b372324.txt

Exit status: 0 success, 1 a verification or b-file comparison failed,
2 bad usage. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from cosareas import egf, verify
from cosareas.areas import AreaMethod, area_table
from cosareas.piecewise_quad import convergence_study

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def fmt_float(x: float) -> str:
    return format(x, ".12g")


@dataclass
class RunReport:
    command: str
    params: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def render(self, fmt: str, plain_lines: Sequence[str]) -> str:
        if fmt == "json":
            doc = {
                "command": self.command,
                "params": self.params,
                "rows": [{k: _json_value(v) for k, v in row.items()} for row in self.rows],
                "elapsed_ms": round(self.elapsed_ms, 3),
            }
            return json.dumps(doc, indent=2) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            if self.rows:
                writer = csv.DictWriter(buf, fieldnames=list(self.rows[0]), lineterminator="\n")
                writer.writeheader()
                for row in self.rows:
                    writer.writerow({k: _csv_value(v) for k, v in row.items()})
            return buf.getvalue()
        return "".join(line + "\n" for line in plain_lines)


def _json_value(v: Any) -> Any:
    if isinstance(v, float):
        return float(fmt_float(v))
    return v


def _csv_value(v: Any) -> Any:
    if isinstance(v, bool):
        return "pass" if v else "fail"
    if isinstance(v, float):
        return fmt_float(v)
    return v


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _k_list(text: str) -> list[int]:
    try:
        ks = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k list: {text!r}") from None
    if not ks or any(k < 2 for k in ks):
        raise argparse.ArgumentTypeError("every k must be >= 2")
    return ks


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosareas", description="Areas between cos^n x and cos^n kx."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    common.add_argument(
        "--no-timing", action="store_true", help="report all timings as 0 for byte-identical output"
    )

    p = sub.add_parser("exact", parents=[common], help="exact limiting areas A_n")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--n", type=_positive_int)
    which.add_argument("--max-n", type=_positive_int)
    p.add_argument("--method", choices=[m.value for m in AreaMethod], default=AreaMethod.CLOSED_FORM.value)

    p = sub.add_parser("converge", parents=[common], help="finite-k areas against A_n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--ks", type=_k_list)
    p.add_argument("--k-start", type=int)
    p.add_argument("--k-factor", type=int, default=10)
    p.add_argument("--k-count", type=_positive_int, default=3)

    p = sub.add_parser("verify", parents=[common], help="run a self-check suite")
    p.add_argument("--suite", choices=[*verify.SUITES, "all"], required=True)

    p = sub.add_parser("egf", parents=[common], help="exact EGF terms, optionally diffed against a b-file")
    p.add_argument("--which", choices=["arcsin", "a296726", "a372324"], required=True)
    p.add_argument("--max-n", type=_nonneg_int, required=True)
    p.add_argument("--bfile", type=Path)
    p.add_argument(
        "--all-indices",
        action="store_true",
        help="diff every index, not only the parity that carries the area numerators",
    )
    return parser


def _cmd_exact(args: argparse.Namespace) -> tuple[RunReport, list[str], int]:
    max_n = args.n if args.n is not None else args.max_n
    table = area_table(max_n, AreaMethod(args.method))
    rows = table.rows if args.n is None else table.rows[-1:]
    params = {"n": args.n, "max_n": args.max_n, "method": args.method}
    report = RunReport("exact", params)
    lines = []
    for row in rows:
        value = float(row.value)
        report.rows.append(
            {"n": row.n, "exact": str(row.value.coeff), "float": value, "numerator": row.numerator}
        )
        lines.append(f"A_{row.n} = {row.value} ≈ {fmt_float(value)}  numerator {row.numerator}")
    return report, lines, EXIT_OK


def _cmd_converge(args: argparse.Namespace, parser: argparse.ArgumentParser) -> tuple[RunReport, list[str], int]:
    if args.ks is not None:
        if args.k_start is not None:
            parser.error("use either --ks or --k-start, not both")
        ks = args.ks
    elif args.k_start is not None:
        if args.k_start < 2 or args.k_factor < 2:
            parser.error("--k-start must be >= 2 and --k-factor >= 2")
        ks = [args.k_start * args.k_factor**i for i in range(args.k_count)]
    else:
        parser.error("one of --ks or --k-start is required")
    params = {"n": args.n, "ks": ks}
    report = RunReport("converge", params)
    lines = [f"{'k':>10} {'area':>20} {'limit':>20} {'error':>20} {'ms':>10}"]
    for r in convergence_study(args.n, ks):
        ms = 0.0 if args.no_timing else r.ms
        report.rows.append({"k": r.k, "area": r.area, "limit": r.limit, "error": r.error, "ms": ms})
        lines.append(
            f"{r.k:>10} {fmt_float(r.area):>20} {fmt_float(r.limit):>20} {fmt_float(r.error):>20} {ms:>10.3f}"
        )
    return report, lines, EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> tuple[RunReport, list[str], int]:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    report = RunReport("verify", {"suite": args.suite})
    lines = []
    for name in names:
        for check in verify.SUITES[name]():
            report.rows.append(
                {
                    "suite": name,
                    "check": check.name,
                    "passed": check.passed,
                    "max_error": check.max_error,
                    "detail": check.detail,
                }
            )
            status = "PASS" if check.passed else "FAIL"
            extra = f"  ({check.detail})" if check.detail else ""
            lines.append(f"{status}  [{name}] {check.name}  max error {check.max_error:.3e}{extra}")
    failed = sum(not row["passed"] for row in report.rows)
    lines.append(f"{len(report.rows) - failed} passed, {failed} failed")
    return report, lines, EXIT_FAILED if failed else EXIT_OK


def _cmd_egf(args: argparse.Namespace, parser: argparse.ArgumentParser) -> tuple[RunReport, list[str], int]:
    params = {"which": args.which, "max_n": args.max_n, "bfile": str(args.bfile) if args.bfile else None}
    report = RunReport("egf", params)
    if args.which == "arcsin":
        series = egf.arcsin_series(args.max_n)
        terms = series.egf_terms()
        parity = None
        for n, t in enumerate(terms):
            report.rows.append({"n": n, "coeff": str(series[n]), "egf_term": str(t)})
        lines = [f"{n} {t}" for n, t in enumerate(terms)]
        computed = [int(t) if t.denominator == 1 else None for t in terms]
    else:
        fn, parity = egf.SEQUENCES[args.which.upper()]
        computed = fn(args.max_n)
        for n, t in enumerate(computed):
            report.rows.append({"n": n, "egf_term": t})
        lines = [f"{n} {t}" for n, t in enumerate(computed)]
    if args.bfile is None:
        return report, lines, EXIT_OK

    try:
        b = egf.parse_bfile(args.bfile.read_text())
    except OSError as exc:
        parser.error(f"cannot read b-file: {exc}")
    except egf.BFileParseError as exc:
        parser.error(f"{args.bfile}: {exc}")
    diffs = egf.diff_bfile(b, computed, None if args.all_indices else parity)
    report.rows = [{"index": d.index, "expected": d.expected, "got": d.got} for d in diffs]
    lines = [f"diff {d.index}: expected {d.expected}, got {d.got}" for d in diffs]
    lines.append(f"{len(diffs)} mismatches against {args.bfile}")
    return report, lines, EXIT_FAILED if diffs else EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "exact":
            report, lines, code = _cmd_exact(args)
        elif args.command == "converge":
            report, lines, code = _cmd_converge(args, parser)
        elif args.command == "verify":
            report, lines, code = _cmd_verify(args)
        else:
            report, lines, code = _cmd_egf(args, parser)
    except ValueError as exc:
        print(f"cosareas: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.elapsed_ms = 0.0 if args.no_timing else (time.perf_counter() - start) * 1e3
    sys.stdout.write(report.render(args.format, lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
