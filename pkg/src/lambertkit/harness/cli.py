"""Command line entry point: ``lambertkit {coeff,series,verify,report,bench}``.

Exit status: 0 success, 1 some record's status differs from its expected
status, 2 parse, evaluation or IO error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..fps import DomainError, format_exact
from . import plots
from .bench import STRATEGIES, bench
from .catalog import CatalogError, load_catalog
from .dsl import ParseError, evaluate, evaluate_value, parse
from .report import FORMATS, render, render_bench
from .values import EvalError, as_fn
from .verify import verify_all

EXIT_OK, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2
SUFFIX = {"table": "txt", "json": "json", "md": "md", "csv": "csv"}


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _sizes(text: str) -> list[int]:
    try:
        out = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}") from None
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lambertkit", description="Exact Lambert series and identity verification.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coeff", help="exact coefficient of q^n in an expression")
    c.add_argument("expr")
    c.add_argument("n", type=int)

    s = sub.add_parser("series", help="coefficients of an expression up to q^N")
    s.add_argument("expr")
    s.add_argument("--order", type=_positive, default=20)

    def catalog_args(sp):
        sp.add_argument("--catalog", type=Path, default=None, help="catalog file (default catalog/identities.cat)")
        sp.add_argument("--id", dest="ids", action="append", help="restrict to this record id (repeatable)")
        sp.add_argument("--order", type=_positive, default=None, help="override every record's order")

    v = sub.add_parser("verify", help="verify catalog records and print a table")
    catalog_args(v)

    r = sub.add_parser("report", help="render the verification report")
    catalog_args(r)
    r.add_argument("--format", choices=FORMATS, default="table")
    r.add_argument("--out", type=Path, default=None, help="directory for the report file, CSV and figures")
    r.add_argument("--no-timing", action="store_true", help="blank the ms field for byte-stable output")

    b = sub.add_parser("bench", help="time the (f*1) strategies")
    b.add_argument("--sizes", type=_sizes, default=[1000, 10000, 100000])
    b.add_argument("--function", default="id(1)", help="arithmetic function expression (default id(1))")
    b.add_argument("--full", action="store_true", help=f"run {', '.join(STRATEGIES)} at every size")
    b.add_argument("--out", type=Path, default=None, help="directory for the timing figure")
    return p


def _coeff(args, out) -> int:
    if args.n < 0:
        raise EvalError("n must be >= 0")
    s = evaluate(args.expr, max(args.n, 0))
    print(format_exact(s[args.n]), file=out)
    return EXIT_OK


def _series(args, out) -> int:
    s = evaluate(args.expr, args.order)
    for k in range(args.order + 1):
        print(f"{k}\t{format_exact(s[k])}", file=out)
    return EXIT_OK


def _report_obj(args):
    records = load_catalog(args.catalog)
    ids = set(args.ids) if args.ids else None
    try:
        return records, verify_all(records, args.order, ids)
    except KeyError as e:
        raise CatalogError(str(e.args[0])) from None


def _verify(args, out) -> int:
    _, rep = _report_obj(args)
    out.write(render(rep, "table"))
    return rep.exit_code


def _report(args, out) -> int:
    records, rep = _report_obj(args)
    text = render(rep, args.format, timing=not args.no_timing)
    out.write(text)
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / f"report.{SUFFIX[args.format]}").write_text(text)
        (args.out / "report.csv").write_text(render(rep, "csv", timing=not args.no_timing))
        figs = [
            plots.status_counts(rep, args.out / "status_counts.png"),
            plots.erratum_panels(rep, records, args.out / "errata.png"),
        ]
        for f in figs:
            print(f"wrote {f}", file=sys.stderr)
    return rep.exit_code


def _bench(args, out) -> int:
    f = as_fn(evaluate_value(parse(args.function), 1), "function")
    rows = bench(args.sizes, f, full=args.full)
    out.write(render_bench(rows))
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        print(f"wrote {plots.bench_timings(rows, args.out / 'bench.png')}", file=sys.stderr)
    return EXIT_OK


COMMANDS = {"coeff": _coeff, "series": _series, "verify": _verify, "report": _report, "bench": _bench}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (ParseError, CatalogError, EvalError, DomainError, OSError, ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
