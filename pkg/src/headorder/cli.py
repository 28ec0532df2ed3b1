"""Command-line interface: reproduce, analyze, null-model, and ring commands.

Exit codes: 0 = success (reproduction targets: all values match the
published ones), 1 = reproduction mismatch, 2 = usage, parse, or resource
error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import reproduce
from .dataio import (
    TableSchema,
    export_plot_data,
    format_p_value,
    load_frequency_table,
    reports_to_csv,
    reports_to_text,
    _csv_block,
    _text_block,
)
from .nullmodel import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapError,
    check_three_sigma_assumptions,
    enumerate_D_distribution,
    null_moments,
)
from .rings import build_ring
from .stats import analyze
from .trees import parse_tree

REPRODUCE_TARGETS = ("table2", "table3", "fig2", "fig3", "fig4", "sov-footnote", "all")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="headorder",
        description="Head-placement statistics for linearized single-head phrases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_repro = sub.add_parser(
        "reproduce", help="recompute a published table or figure from embedded data"
    )
    p_repro.add_argument("target", choices=REPRODUCE_TARGETS)
    p_repro.add_argument("--format", choices=("table", "csv"), default="table")
    p_repro.add_argument("--out", help="write output here instead of stdout")
    p_repro.set_defaults(func=_cmd_reproduce)

    p_analyze = sub.add_parser(
        "analyze", help="analyze a frequency-table CSV of phrase orders"
    )
    p_analyze.add_argument("--input", required=True, help="CSV path, '-' for stdin")
    p_analyze.add_argument("--head", default="n", help="head symbol (default: n)")
    p_analyze.add_argument("--alpha", type=float, default=0.05)
    p_analyze.add_argument(
        "--p0", help="override the null head-end probability (e.g. 1/2 or 0.5)"
    )
    p_analyze.add_argument("--strict", action="store_true", help="require all n! orders")
    p_analyze.add_argument("--format", choices=("table", "csv"), default="table")
    p_analyze.add_argument("--out")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_null = sub.add_parser(
        "null-model", help="moments and exact distribution of D under shuffling"
    )
    p_null.add_argument(
        "--tree",
        required=True,
        help="tree form 'n=4; edges=1-2,1-3,1-4; head=1', or star:N / path:N",
    )
    p_null.add_argument(
        "--frequency", type=float, help="instance count F for sigma(<D>)"
    )
    p_null.add_argument(
        "--distribution", action="store_true", help="dump the exact enumerated pmf"
    )
    p_null.add_argument("--max-n", type=int, default=DEFAULT_ENUMERATION_CAP)
    p_null.add_argument("--out")
    p_null.set_defaults(func=_cmd_null_model)

    p_ring = sub.add_parser("ring", help="permutation ring of constituent orders")
    p_ring.add_argument("--symbols", default="SOV", help="e.g. SOV")
    p_ring.add_argument(
        "--freq",
        action="append",
        default=[],
        metavar="ORDER=COUNT",
        help="attach a frequency to an order (repeatable)",
    )
    p_ring.add_argument("--out")
    p_ring.set_defaults(func=_cmd_ring)
    return parser


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _render_rows(header, rows, fmt: str) -> str:
    if fmt == "csv":
        return _csv_block(header, rows)
    return _text_block(header, [[str(c) for c in row] for row in rows])


def _reproduce_one(target: str, fmt: str) -> tuple[str, list[str]]:
    if target == "table2":
        rows = reproduce.table2_rows()
        rendered = [
            (unit, f"{prop:.3f}", F, g, format_p_value(p))
            for unit, prop, F, g, p in rows
        ]
        return (
            _render_rows(("unit", "g/F", "F", "g", "p-value"), rendered, fmt),
            reproduce.check_table2(rows),
        )
    if target == "table3":
        rows = reproduce.table3_rows()
        rendered = [
            (
                unit,
                f"{float(F):g}",
                d_lo,
                f"{float(mu):g}",
                f"{sigma:.3f}",
                f"{mean:.3f}",
                d_hi,
                f"{k:.2f}",
            )
            for unit, F, d_lo, mu, sigma, mean, d_hi, k in rows
        ]
        return (
            _render_rows(
                ("unit", "F", "D_min", "mu(<D>)", "sigma(<D>)", "<D>", "D_max", "k"),
                rendered,
                fmt,
            ),
            reproduce.check_table3(rows),
        )
    if target == "fig2":
        return reproduce.fig2_csv(), reproduce.check_fig2()
    if target == "fig3":
        return reproduce.fig3_csv(), reproduce.check_fig3()
    if target == "fig4":
        return reproduce.fig4_csv(), reproduce.check_fig4()
    if target == "sov-footnote":
        rows = reproduce.sov_footnote_rows()
        rendered = [
            (unit, F, g, str(p0), format_p_value(p)) for unit, F, g, p0, p in rows
        ]
        body = _render_rows(("unit", "F", "g", "p0", "p-value"), rendered, fmt)
        matches = reproduce.sov_reproducing_p0()
        lines = []
        for unit, p0s in matches.items():
            if p0s:
                names = ", ".join(f"p0 = {p0}" for p0 in p0s)
                lines.append(f"# {unit}: published value reproduced by {names}")
            else:
                lines.append(f"# {unit}: published value not reproduced")
        return body + "\n".join(lines) + "\n", reproduce.check_sov_footnote()
    raise ValueError(f"unknown reproduction target {target!r}")


def _cmd_reproduce(args) -> int:
    targets = REPRODUCE_TARGETS[:-1] if args.target == "all" else (args.target,)
    chunks = []
    problems: list[str] = []
    for target in targets:
        body, target_problems = _reproduce_one(target, args.format)
        if len(targets) > 1:
            chunks.append(f"== {target} ==")
        chunks.append(body)
        problems.extend(f"{target}: {p}" for p in target_problems)
    _write(args, "\n".join(chunks))
    if problems:
        for problem in problems:
            print(f"reproduction mismatch: {problem}", file=sys.stderr)
        return 1
    print("reproduction check: all values match the published ones", file=sys.stderr)
    return 0


def _cmd_analyze(args) -> int:
    if not 0 < args.alpha < 1:
        raise ValueError(f"--alpha must be in (0, 1), got {args.alpha}")
    if args.input == "-":
        source = sys.stdin.read()
    else:
        with open(args.input, "rb") as handle:
            source = handle.read()
    schema = TableSchema(head=args.head, strict=args.strict)
    table = load_frequency_table(source, schema)
    p0 = Fraction(args.p0) if args.p0 else None
    reports = analyze(table, alpha=args.alpha, p0=p0)
    if args.format == "csv":
        _write(args, reports_to_csv(reports))
    else:
        _write(args, reports_to_text(reports))
    return 0


def _cmd_null_model(args) -> int:
    if args.max_n < 2:
        raise ValueError(f"--max-n must be >= 2, got {args.max_n}")
    spec = args.tree.strip()
    if spec.startswith(("star:", "path:")):
        from .trees import path, star

        kind, _, count = spec.partition(":")
        n = int(count)
        tree = star(n) if kind == "star" else path(n)
    else:
        tree = parse_tree(spec)
    moments = null_moments(tree, args.frequency)
    lines = [
        f"n = {tree.n}",
        f"mean D (shuffling) = {moments.mean} = {float(moments.mean):.12g}",
        f"variance of D = {moments.variance} = {float(moments.variance):.12g}",
    ]
    if moments.sigma_mean_D is not None:
        lines.append(
            f"sigma(<D>) at F = {args.frequency:g}: {moments.sigma_mean_D:.12g}"
        )
    output = "\n".join(lines) + "\n"
    if args.distribution:
        dist = enumerate_D_distribution(tree, max_n=args.max_n)
        assumptions = check_three_sigma_assumptions(dist)
        agrees = dist.mean() == moments.mean and dist.variance() == moments.variance
        output += (
            "\n"
            + dist.to_csv()
            + f"unimodal: {'yes' if assumptions.unimodal else 'no'}\n"
            + f"oracle agrees with closed forms: {'yes' if agrees else 'NO'}\n"
        )
    _write(args, output)
    return 0


def _cmd_ring(args) -> int:
    frequencies = {}
    for item in args.freq:
        order, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"--freq expects ORDER=COUNT, got {item!r}")
        frequencies[order.strip()] = Fraction(value.strip())
    ring = build_ring(args.symbols, frequencies or None)
    _write(args, export_plot_data(ring, "fig4"))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
