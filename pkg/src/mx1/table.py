"""Recursive count tables of residue classes with stopping time > k.

Column k holds n(k2, k): the number of residue classes mod 2^k whose
length-k parity word has k2 odd steps and whose stopping time exceeds k.
Each column is derived from the previous one by appending an even step
(count carries to the same row) and an odd step (count carries one row
down); rows whose m^k2 no longer exceeds 2^k stop exactly at k, are
recorded in the gray count and removed.  Totals give N_{chi>k} and the
exact rational distribution value F(k) = N / 2^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Optional, Sequence

from .core import MapParams


@dataclass(frozen=True)
class TableColumn:
    k: int
    threshold_row: int  # smallest surviving k2 (0 only for the seed column)
    counts: dict[int, int]  # k2 -> n(k2, k), threshold_row..k
    gray: int  # classes stopping exactly at k
    gray_row: Optional[int]  # row the gray count was removed from
    total: int  # N_{chi>k}
    f: Fraction  # total / 2^k, lowest terms


@dataclass(frozen=True)
class StoppingTable:
    params: MapParams
    columns: tuple[TableColumn, ...]

    @property
    def kmax(self) -> int:
        return len(self.columns) - 1

    def column(self, k: int) -> TableColumn:
        return self.columns[k]

    def total(self, k: int) -> int:
        return self.columns[k].total

    def gray(self, k: int) -> int:
        return self.columns[k].gray


def binomial_table(kmax: int) -> list[list[int]]:
    """Columns of binomial coefficients: result[j][i] = C(j, i), by the
    Pascal recursion n(i,j) = n(i-1,j-1) + n(i,j-1)."""
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    cols = [[1]]
    for j in range(1, kmax + 1):
        prev = cols[-1]
        col = [1]
        for i in range(1, j):
            col.append(prev[i - 1] + prev[i])
        col.append(1)
        cols.append(col)
    return cols


def threshold_row(k: int, params: MapParams) -> int:
    """Smallest k2 >= 1 with m^k2 > 2^k (equality never occurs for k2 >= 1).

    k = 0 returns 1 by that convention; the table's seed column is special
    and keeps its single count at row 0.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    m = params.m
    i, p = 1, m
    bound = 1 << k
    while p <= bound:
        p *= m
        i += 1
    return i


def chi_table(kmax: int, params: MapParams) -> StoppingTable:
    """Build the surviving-count table for k = 0..kmax."""
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    columns = [
        TableColumn(k=0, threshold_row=0, counts={0: 1}, gray=0, gray_row=None,
                    total=1, f=Fraction(1))
    ]
    counts = {0: 1}
    lo = 0  # lowest surviving row
    m = params.m
    m_pow_lo = 1  # m^lo
    pow2 = 1  # 2^k
    for k in range(1, kmax + 1):
        pow2 *= 2
        new: dict[int, int] = {}
        for i in range(k, lo, -1):
            new[i] = counts.get(i - 1, 0) + counts.get(i, 0)
        new[lo] = counts.get(lo, 0)  # even step only; no row lo-1 survives
        gray = 0
        gray_row: Optional[int] = None
        while m_pow_lo <= pow2:  # row lo fell below threshold: chi = k exactly
            gray += new.pop(lo)
            gray_row = lo
            lo += 1
            m_pow_lo *= m
        total = sum(new.values())
        columns.append(
            TableColumn(k=k, threshold_row=lo, counts=dict(new), gray=gray,
                        gray_row=gray_row, total=total, f=Fraction(total, pow2))
        )
        counts = new
    return StoppingTable(params=params, columns=tuple(columns))


def format_fraction(value: Fraction, digits: int = 8) -> str:
    """Decimal rendering at a given number of significant digits, half-even."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        d = Decimal(value.numerator) / Decimal(value.denominator)
    return str(d)


def f_of_k(table: StoppingTable, k: int, digits: int = 8) -> tuple[Fraction, str]:
    """Exact F(k) = N_{chi>k} / 2^k and its decimal rendering."""
    if not 0 <= k <= table.kmax:
        raise ValueError(f"k={k} outside table range 0..{table.kmax}")
    f = table.columns[k].f
    return f, format_fraction(f, digits)


def n_chi_report(table: StoppingTable, checkpoints: Sequence[int],
                 digits: int = 8) -> list[tuple[int, int, int, str]]:
    """Rows (k, N_{chi>k}, 2^k, F decimal) for golden comparison."""
    rows = []
    for k in checkpoints:
        if not 0 <= k <= table.kmax:
            raise ValueError(f"checkpoint k={k} outside table range 0..{table.kmax}")
        col = table.columns[k]
        rows.append((k, col.total, 1 << k, format_fraction(col.f, digits)))
    return rows
