"""Command-line front end.

Subcommands:
  table   emit the full surviving-count table (csv/json/markdown)
  fk      exact N, 2^k and F(k) at one or more checkpoints
  verify  run the brute-force sieve against the table column by column
  traj    print a trajectory, its parity word and stopping status
  solve   print the Diophantine family of a parity word

Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .core import DyadicWord, MapParams, stopping_time, trajectory
from .diophantine import solve_word
from .render import (
    OutputSpec,
    family_to_text,
    fk_rows_to_text,
    render_table,
    write_output,
)
from .sieve import sieve_slice
from .table import chi_table, n_chi_report

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3

DEFAULT_SIEVE_CEILING = 22


def _sieve_ceiling() -> int:
    raw = os.environ.get("MX1_SIEVE_CEILING")
    if raw is None:
        return DEFAULT_SIEVE_CEILING
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_SIEVE_CEILING


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mx1", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json", "markdown"), default="csv")
        p.add_argument("--precision", type=int, default=8,
                       help="significant digits for decimal renderings")
        p.add_argument("--out", default=None, help="output file (default stdout)")

    p_table = sub.add_parser("table", help="emit the surviving-count table")
    p_table.add_argument("--m", type=int, choices=(3, 5), required=True)
    p_table.add_argument("--kmax", type=int, required=True)
    add_output_flags(p_table)

    p_fk = sub.add_parser("fk", help="N, 2^k and F(k) at checkpoints")
    p_fk.add_argument("--m", type=int, choices=(3, 5), required=True)
    p_fk.add_argument("--k", type=int, nargs="+", required=True)
    add_output_flags(p_fk)

    p_verify = sub.add_parser("verify", help="sieve the slice [2, 2^k+1] vs the table")
    p_verify.add_argument("--m", type=int, choices=(3, 5), required=True)
    p_verify.add_argument("--kmax", type=int, required=True)
    add_output_flags(p_verify)

    p_traj = sub.add_parser("traj", help="print a trajectory")
    p_traj.add_argument("--n", type=int, required=True)
    p_traj.add_argument("--m", type=int, choices=(3, 5), required=True)
    p_traj.add_argument("--k", type=int, required=True)

    p_solve = sub.add_parser("solve", help="Diophantine family of a word")
    p_solve.add_argument("--word", required=True, help="bitstring, t_0 first")
    p_solve.add_argument("--m", type=int, choices=(3, 5), required=True)

    return parser


def _spec_from_args(args: argparse.Namespace) -> OutputSpec:
    return OutputSpec(format=args.format, precision=args.precision, destination=args.out)


def cmd_table(args: argparse.Namespace) -> int:
    if args.kmax < 0:
        print("kmax must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    spec = _spec_from_args(args)
    table = chi_table(args.kmax, MapParams(args.m))
    write_output(render_table(table, spec), spec)
    return EXIT_OK


def cmd_fk(args: argparse.Namespace) -> int:
    if any(k < 0 for k in args.k):
        print("k must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    spec = _spec_from_args(args)
    table = chi_table(max(args.k), MapParams(args.m))
    rows = n_chi_report(table, args.k, digits=spec.precision)
    write_output(fk_rows_to_text(rows, spec), spec)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    ceiling = _sieve_ceiling()
    if args.kmax < 1 or args.kmax > ceiling:
        print(f"kmax must be in 1..{ceiling} (MX1_SIEVE_CEILING overrides)",
              file=sys.stderr)
        return EXIT_USAGE
    spec = _spec_from_args(args)
    params = MapParams(args.m)
    table = chi_table(args.kmax, params)
    lines = ["k,brute,table,verdict,surplus"]
    mismatch = False
    for k in range(1, args.kmax + 1):
        report = sieve_slice(k, params, table=table)
        lines.append(f"{k},{report.count_chi_gt_k},{report.table_total},"
                     f"{report.verdict},{report.surplus}")
        if params.m == 3 and report.verdict != "equal":
            mismatch = True
        last = report
    lines.append(f"# final: {last.count_chi_gt_k} "
                 f"{'==' if last.verdict == 'equal' else '>='} {last.table_total}")
    write_output("\n".join(lines) + "\n", spec)
    return EXIT_MISMATCH if mismatch else EXIT_OK


def cmd_traj(args: argparse.Namespace) -> int:
    if args.n < 1 or args.k < 0:
        print("need n >= 1 and k >= 0", file=sys.stderr)
        return EXIT_USAGE
    params = MapParams(args.m)
    rec = trajectory(args.n, params, args.k)
    if args.n >= 2 and args.k >= 1:
        chi = stopping_time(args.n, params, args.k)
        status = f"chi = {chi}" if chi is not None else f"chi > {args.k}"
    else:
        status = "chi n/a"
    iterates = " ".join(str(v) for v in rec.iterates)
    print(f"{iterates} | word {rec.word} | {status}")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        word = DyadicWord.from_string(args.word)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    if len(word) < 1:
        print("word must have length >= 1", file=sys.stderr)
        return EXIT_USAGE
    family = solve_word(word, MapParams(args.m))
    print(family_to_text(family))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "table": cmd_table,
        "fk": cmd_fk,
        "verify": cmd_verify,
        "traj": cmd_traj,
        "solve": cmd_solve,
    }
    try:
        return handlers[args.command](args)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
