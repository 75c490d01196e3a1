"""Command-line front end.

Subcommands: ``compute`` (polynomial tables), ``verify`` (the identity
suite), ``stirling`` (triangles), ``eval`` (the expression language).
Rationals cross this boundary only as exact "p/q" strings.  Exit codes:
0 success / all pass, 1 verification failure, 2 usage, parse or
singular-parameter errors.  Identical invocations produce byte-identical
output, including under ``--jobs`` parallelism.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .apostol import UnifiedParams, unified_polynomials
from .combinatorics import StirlingTable
from .errors import EngineError
from .exprlang import (
    ExprEvaluationError,
    ExprSyntaxError,
    ExprTypeError,
    evaluate_text,
)
from .identities import (
    ALL_CHECK_IDS,
    CheckReport,
    SuiteGrid,
    default_grid,
    run_suite,
    summarize,
)
from .polynomial import Polynomial, format_rational, parse_rational

FORMATS = ("text", "json", "csv", "latex")


def _rational_flag(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rational_list_flag(text: str) -> tuple[Fraction, ...]:
    return tuple(_rational_flag(part) for part in text.split(","))


def _int_list_flag(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def format_rational_latex(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def format_polynomial_latex(poly: Polynomial) -> str:
    if poly.is_zero:
        return "0"
    parts: list[str] = []
    for i in range(len(poly.coefficients) - 1, -1, -1):
        c = poly.coefficient(i)
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if i == 0:
            body = format_rational_latex(mag)
        else:
            var = "x" if i == 1 else f"x^{{{i}}}"
            body = var if mag == 1 else f"{format_rational_latex(mag)} {var}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# compute


def _cmd_compute(args: argparse.Namespace) -> int:
    try:
        params = UnifiedParams(args.k, args.v, args.lam, args.alpha)
        table = unified_polynomials(params, args.n_max, min_precision=args.precision)
    except (EngineError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    at = args.at
    if args.format == "text":
        for poly in table:
            print(format_rational(poly.evaluate(at)) if at is not None else str(poly))
    elif args.format == "csv":
        print("n,value" if at is not None else "n,polynomial")
        for n, poly in enumerate(table):
            cell = format_rational(poly.evaluate(at)) if at is not None else str(poly)
            print(f"{n},{cell}")
    elif args.format == "latex":
        for n, poly in enumerate(table):
            cell = (
                format_rational_latex(poly.evaluate(at))
                if at is not None
                else format_polynomial_latex(poly)
            )
            print(f"{n} & {cell} \\\\")
    else:
        rows = []
        for n, poly in enumerate(table):
            if at is not None:
                rows.append({"n": n, "value": format_rational(poly.evaluate(at))})
            else:
                rows.append({"n": n, "polynomial": str(poly)})
        payload = {
            "k": params.k,
            "v": params.v,
            "lambda": str(params.lam),
            "alpha": str(params.alpha),
            "n_max": args.n_max,
            "at": format_rational(at) if at is not None else None,
            "rows": rows,
        }
        print(json.dumps(payload, indent=2))
    return 0


# ---------------------------------------------------------------------------
# verify


def _report_line(report: CheckReport) -> str:
    bits = [report.check_id]
    bits.extend(f"{key}={value}" for key, value in report.params.items())
    bits.append(report.status)
    line = " ".join(bits)
    if report.skip_reason:
        line += f" skip: {report.skip_reason}"
    if report.first_counterexample:
        ce = report.first_counterexample
        extras = " ".join(f"{k}={v}" for k, v in ce.items())
        line += f" counterexample: {extras}"
    if report.paper_discrepancy:
        line += f" discrepancy: {report.paper_discrepancy}"
    return line


def _cmd_verify(args: argparse.Namespace) -> int:
    base = default_grid()
    grid = SuiteGrid(
        lambdas=args.lambdas if args.lambdas is not None else base.lambdas,
        alphas=args.alphas if args.alphas is not None else base.alphas,
        ks=args.ks if args.ks is not None else base.ks,
        vs=args.vs if args.vs is not None else base.vs,
        n_max=args.n_max if args.n_max is not None else base.n_max,
        js=args.js if args.js is not None else base.js,
        ms=args.ms if args.ms is not None else base.ms,
        cs=args.cs if args.cs is not None else base.cs,
    )
    if args.suite == "all":
        selection = list(ALL_CHECK_IDS)
    else:
        selection = [s.strip() for s in args.suite.split(",") if s.strip()]
        unknown = [s for s in selection if s not in ALL_CHECK_IDS]
        if unknown:
            print(f"error: unknown check id: {', '.join(unknown)}", file=sys.stderr)
            return 2
    reports = run_suite(grid, selection, jobs=args.jobs)
    stats = summarize(reports)
    if args.format == "json":
        payload = {
            "suite": selection,
            "reports": [r.to_record() for r in reports],
            "summary": stats,
        }
        print(json.dumps(payload, indent=2))
    else:
        for report in reports:
            print(_report_line(report))
        print(
            "summary: total={total} pass={pass} fail={fail} skipped={skipped} "
            "discrepancy_notes={discrepancy_notes}".format(**stats)
        )
    return 1 if stats["fail"] else 0


# ---------------------------------------------------------------------------
# stirling


def _cmd_stirling(args: argparse.Namespace) -> int:
    kind = "first-signed" if args.kind == 1 else "second"
    try:
        table = StirlingTable(kind, args.n_max)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rows = table.rows()
    if args.format == "text":
        width = max(len(str(v)) for row in rows for v in row)
        for row in rows:
            print(" ".join(str(v).rjust(width) for v in row))
    elif args.format == "latex":
        for row in rows:
            print(" & ".join(str(v) for v in row) + " \\\\")
    elif args.format == "json":
        payload = {"kind": args.kind, "n_max": args.n_max, "rows": [list(r) for r in rows]}
        print(json.dumps(payload, indent=2))
    else:
        for row in rows:
            print(",".join(str(v) for v in row))
    return 0


# ---------------------------------------------------------------------------
# eval


def _diagnose(text: str, message: str, offset: int) -> None:
    print(f"error: {message} at offset {offset}", file=sys.stderr)
    print(f"  {text}", file=sys.stderr)
    print(f"  {' ' * offset}^", file=sys.stderr)


def _cmd_eval(args: argparse.Namespace) -> int:
    text = args.expression
    try:
        result = evaluate_text(text, precision=args.precision)
    except ExprSyntaxError as exc:
        expected = f" (expected: {', '.join(exc.expected)})" if exc.expected else ""
        _diagnose(text, f"{exc}{expected}", exc.offset)
        return 2
    except (ExprTypeError, ExprEvaluationError) as exc:
        _diagnose(text, str(exc), exc.offset)
        return 2
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps({"result": str(result)}))
    elif args.format == "latex":
        if isinstance(result, Polynomial):
            print(format_polynomial_latex(result))
        elif isinstance(result, Fraction):
            print(format_rational_latex(result))
        else:
            print(str(result))
    else:
        print(str(result))
    return 0


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umbralcalc",
        description=(
            "Exact tables, identity verification and expression evaluation "
            "for the unified Apostol-type polynomial family."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="print a polynomial table")
    compute.add_argument("--k", type=int, required=True)
    compute.add_argument("--v", type=int, required=True)
    compute.add_argument("--lambda", dest="lam", type=_rational_flag, required=True)
    compute.add_argument("--alpha", type=_rational_flag, required=True)
    compute.add_argument("--n-max", type=int, required=True)
    compute.add_argument("--at", type=_rational_flag, default=None)
    compute.add_argument("--format", choices=FORMATS, default="text")
    compute.add_argument(
        "--precision",
        type=int,
        default=None,
        help="raise the internal truncation order (results are exact either way)",
    )
    compute.set_defaults(func=_cmd_compute)

    verify = sub.add_parser("verify", help="run the identity suite")
    verify.add_argument("--suite", default="all", help="all or comma-separated check ids")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--lambda", dest="lambdas", type=_rational_list_flag, default=None)
    verify.add_argument("--alpha", dest="alphas", type=_rational_list_flag, default=None)
    verify.add_argument("--k", dest="ks", type=_int_list_flag, default=None)
    verify.add_argument("--v", dest="vs", type=_int_list_flag, default=None)
    verify.add_argument("--n-max", type=int, default=None)
    verify.add_argument("--j", dest="js", type=_int_list_flag, default=None)
    verify.add_argument("--m", dest="ms", type=_int_list_flag, default=None)
    verify.add_argument("--c", dest="cs", type=_rational_list_flag, default=None)
    verify.set_defaults(func=_cmd_verify)

    stirling = sub.add_parser("stirling", help="print a Stirling triangle")
    stirling.add_argument("--kind", type=int, choices=(1, 2), required=True)
    stirling.add_argument("--n-max", type=int, required=True)
    stirling.add_argument("--format", choices=FORMATS, default="csv")
    stirling.set_defaults(func=_cmd_stirling)

    evaluate = sub.add_parser("eval", help="evaluate an expression")
    evaluate.add_argument("expression")
    evaluate.add_argument("--precision", type=int, default=32)
    evaluate.add_argument("--format", choices=("text", "json", "latex"), default="text")
    evaluate.set_defaults(func=_cmd_eval)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
