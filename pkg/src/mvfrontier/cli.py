"""Command line: ``mvfrontier {stats,solve,frontier}``.

Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import frontier as fr
from .errors import BadRange, DataError, DimensionMismatch, NumericalError
from .market_data import align, read_price_csv
from .modelfile import dumps_model, load_model
from .returns import DIVISORS, SOURCES, build_model

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NUMERICAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def g10(x: float) -> str:
    """10 significant digits."""
    return format(float(x), ".10g")


def _num10(x: float) -> float:
    return float(g10(x))


def _write(text: str, out):
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)


def cmd_stats(args) -> int:
    files = args.files
    if args.ids:
        ids = [s.strip() for s in args.ids.split(",")]
        if len(ids) != len(files):
            raise UsageError(f"--ids names {len(ids)} assets but {len(files)} files were given")
    else:
        ids = [Path(f).stem for f in files]

    series = []
    for path, aid in zip(files, ids):
        try:
            series.append(read_price_csv(path, aid))
        except DataError as exc:
            exc.args = (f"{path}: {exc}",)
            raise
    model = build_model(align(series), source=args.source, divisor=args.divisor)
    _write(dumps_model(model), args.out)
    print(f"observations: {model.observations}", file=sys.stderr)
    return EXIT_OK


def _capital(x) -> float:
    if not x > 0:
        raise UsageError(f"--capital must be positive, got {x}")
    return x


def solve_portfolio(model, args):
    c0 = _capital(args.capital)
    if args.min_variance:
        return fr.min_variance_portfolio(model, c0)
    if args.tangency:
        return fr.tangency_portfolio(model, c0)
    if args.gamma is not None:
        if not args.gamma > 0:
            raise UsageError(f"--gamma must be positive, got {args.gamma}")
        return fr.optimal_portfolio(model, c0, args.gamma)
    return fr.efficient_frontier_allocation(model, c0, args.target_mean)


def portfolio_record(p: fr.Portfolio, model, args) -> dict:
    """Machine-readable report; key order is part of the format."""
    return {
        "kind": p.kind,
        "capital": _num10(args.capital),
        "gamma": None if args.gamma is None else _num10(args.gamma),
        "target_mean": None if args.target_mean is None else _num10(args.target_mean),
        "asset_ids": list(model.asset_ids),
        "theta": [_num10(x) for x in p.theta],
        "mean": _num10(p.mean),
        "std": _num10(p.std),
        "variance": _num10(p.variance),
    }


def format_table(p: fr.Portfolio, model, capital: float) -> str:
    width = max(8, *(len(a) for a in model.asset_ids))
    lines = [f"{p.kind} portfolio, capital {capital:.4f}", ""]
    lines.append(f"{'asset':<{width}}  {'theta':>14}")
    for aid, x in zip(model.asset_ids, p.theta):
        lines.append(f"{aid:<{width}}  {x:>14.4f}")
    lines.append("")
    for label, val in (("mean", p.mean), ("std", p.std), ("variance", p.variance)):
        lines.append(f"{label:<{width}}  {val:>14.4f}")
    return "\n".join(lines) + "\n"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_solve(args) -> int:
    model = load_model(args.model)
    p = solve_portfolio(model, args)
    if args.format == "json":
        text = json.dumps(portfolio_record(p, model, args), indent=2) + "\n"
    elif args.format == "csv":
        header = ["kind", "mean", "variance", "std"] + [f"theta_{a}" for a in model.asset_ids]
        row = [p.kind, g10(p.mean), g10(p.variance), g10(p.std)] + [g10(x) for x in p.theta]
        text = _csv_text(header, [row])
    else:
        text = format_table(p, model, args.capital)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_frontier(args) -> int:
    c0 = _capital(args.capital)
    if args.points < 2:
        raise UsageError(f"--points must be at least 2, got {args.points}")
    model = load_model(args.model)
    lo = args.mean_from
    hi = args.mean_to
    if lo is None:
        lo = fr.min_variance_portfolio(model, c0).mean
    if hi is None:
        hi = fr.tangency_portfolio(model, c0).mean
    if not lo < hi:
        raise UsageError(f"need --from < --to, got {lo} and {hi}")
    sample = fr.frontier_sample(model, c0, lo, hi, args.points)
    header = ["target_mean", "variance", "std"] + [f"theta_{a}" for a in model.asset_ids]
    rows = [[g10(p.mean), g10(p.variance), g10(p.std)] + [g10(x) for x in p.theta] for p in sample]
    _write(_csv_text(header, rows), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mvfrontier", description="Closed-form mean-variance portfolios.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stats", help="estimate mean returns and covariances from price CSV files")
    p.add_argument("files", nargs="+", help="one CSV per asset (Date, Close, optional Adj Close)")
    p.add_argument("--ids", help="comma-separated asset ids, one per file (default: file stems)")
    p.add_argument("--source", choices=SOURCES, default="close", help="price column (default: close)")
    p.add_argument("--divisor", choices=DIVISORS, default="sample",
                   help="covariance divisor: sample = T-1, population = T (default: sample)")
    p.add_argument("--out", help="write the model file here instead of stdout")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("solve", help="compute one named portfolio from a model file")
    p.add_argument("model", help="model file (JSON)")
    p.add_argument("--capital", type=float, required=True, help="initial capital C0")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--min-variance", action="store_true", help="global minimum-variance portfolio")
    mode.add_argument("--tangency", action="store_true", help="maximum-Sharpe portfolio (zero risk-free rate)")
    mode.add_argument("--gamma", type=float, help="optimal portfolio for risk aversion G > 0")
    mode.add_argument("--target-mean", type=float, help="frontier portfolio with mean M")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("frontier", help="sample the efficient frontier to CSV")
    p.add_argument("model", help="model file (JSON)")
    p.add_argument("--capital", type=float, required=True, help="initial capital C0")
    p.add_argument("--from", dest="mean_from", type=float,
                   help="lowest target mean (default: minimum-variance mean)")
    p.add_argument("--to", dest="mean_to", type=float, help="highest target mean (default: tangency mean)")
    p.add_argument("--points", type=int, default=50, help="number of rows (default: 50)")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_frontier)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, BadRange) as exc:
        print(f"mvfrontier: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, DimensionMismatch, OSError) as exc:
        print(f"mvfrontier: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NumericalError as exc:
        print(f"mvfrontier: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"mvfrontier: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
