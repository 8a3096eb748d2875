"""Bit-exact output formats for tables, sieve reports and solution families.

Big integers serialize as decimal strings so exactness survives JSON; CSV
is flat and diff-friendly with per-column footer rows.
"""

from __future__ import annotations

import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .core import MapParams
from .diophantine import SolutionFamily
from .table import StoppingTable, TableColumn, format_fraction

FORMATS = ("csv", "json", "markdown")


@dataclass(frozen=True)
class OutputSpec:
    format: str = "csv"
    precision: int = 8  # significant digits for decimal renderings
    destination: Optional[str] = None  # file path, or None for stdout

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")


def write_output(text: str, spec: OutputSpec) -> None:
    if spec.destination is None:
        sys.stdout.write(text)
    else:
        with open(spec.destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def table_to_json_obj(table: StoppingTable, precision: int = 8) -> dict[str, Any]:
    return {
        "m": table.params.m,
        "kmax": table.kmax,
        "columns": [
            {
                "k": col.k,
                "threshold_row": col.threshold_row,
                "counts": {str(k2): str(col.counts[k2]) for k2 in sorted(col.counts)},
                "gray": str(col.gray),
                "total": str(col.total),
                "f_exact": f"{col.f.numerator}/{col.f.denominator}",
                "f_decimal": format_fraction(col.f, precision),
            }
            for col in table.columns
        ],
    }


def table_from_json_obj(obj: dict[str, Any]) -> StoppingTable:
    columns = []
    for c in obj["columns"]:
        counts = {int(k2): int(v) for k2, v in c["counts"].items()}
        num, den = c["f_exact"].split("/") if "/" in c["f_exact"] else (c["f_exact"], "1")
        gray = int(c["gray"])
        gray_row = None
        if gray and counts:
            gray_row = min(counts) - 1
        elif gray:
            gray_row = c["threshold_row"] - 1
        columns.append(
            TableColumn(
                k=c["k"],
                threshold_row=c["threshold_row"],
                counts=counts,
                gray=gray,
                gray_row=gray_row,
                total=int(c["total"]),
                f=Fraction(int(num), int(den)),
            )
        )
    return StoppingTable(params=MapParams(obj["m"]), columns=tuple(columns))


def table_to_json(table: StoppingTable, precision: int = 8) -> str:
    return json.dumps(table_to_json_obj(table, precision), indent=2) + "\n"


def table_to_csv(table: StoppingTable, precision: int = 8) -> str:
    out = io.StringIO()
    out.write("k2,k,count\n")
    for col in table.columns:
        for k2 in sorted(col.counts):
            out.write(f"{k2},{col.k},{col.counts[k2]}\n")
        out.write(f"#threshold,{col.k},{col.threshold_row}\n")
        out.write(f"#gray,{col.k},{col.gray}\n")
        out.write(f"#total,{col.k},{col.total}\n")
        out.write(f"#F,{col.k},{format_fraction(col.f, precision)}\n")
    return out.getvalue()


def table_to_markdown(table: StoppingTable, precision: int = 8) -> str:
    """Matrix view: rows k2, columns k, footer rows for totals and F."""
    ks = [col.k for col in table.columns]
    rows = range(0, max(max(col.counts, default=0) for col in table.columns) + 1)
    out = io.StringIO()
    out.write("| k2 \\ k | " + " | ".join(str(k) for k in ks) + " |\n")
    out.write("|---" * (len(ks) + 1) + "|\n")
    for i in rows:
        cells = [str(col.counts.get(i, "")) for col in table.columns]
        out.write(f"| {i} | " + " | ".join(cells) + " |\n")
    out.write("| total | " + " | ".join(str(col.total) for col in table.columns) + " |\n")
    out.write("| F(k) | "
              + " | ".join(format_fraction(col.f, precision) for col in table.columns)
              + " |\n")
    return out.getvalue()


def render_table(table: StoppingTable, spec: OutputSpec) -> str:
    if spec.format == "json":
        return table_to_json(table, spec.precision)
    if spec.format == "csv":
        return table_to_csv(table, spec.precision)
    return table_to_markdown(table, spec.precision)


def fk_rows_to_text(rows: list[tuple[int, int, int, str]], spec: OutputSpec) -> str:
    if spec.format == "json":
        obj = [{"k": k, "n": str(n), "pow2": str(p), "f": f} for k, n, p, f in rows]
        return json.dumps(obj, indent=2) + "\n"
    if spec.format == "csv":
        lines = ["k,n,pow2,f"]
        lines += [f"{k},{n},{p},{f}" for k, n, p, f in rows]
        return "\n".join(lines) + "\n"
    lines = ["| k | N | 2^k | F(k) |", "|---|---|---|---|"]
    lines += [f"| {k} | {n} | {p} | {f} |" for k, n, p, f in rows]
    return "\n".join(lines) + "\n"


def family_to_text(family: SolutionFamily) -> str:
    a, b, c = family.coeffs.a, family.coeffs.b, family.coeffs.c
    return (f"{c} = {b}y - {a}x; "
            f"x = {family.x_start} + {b}q, y = {family.y_start} + {a}q")
