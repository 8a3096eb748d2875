"""Brute-force sieve oracle over slices of 2^k consecutive integers.

Iterates every n in [2, 2^k + 1] at most k steps, classifying each as
chi(n) = j <= k or chi(n) > k, and compares against the recursive table:
total, per-k2 cell counts, and the chi histogram vs gray counts.  The table
is a lower bound in general; equality is expected (and asserted by the
test suite) only for m = 3.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import MapParams
from .table import StoppingTable, chi_table


@dataclass(frozen=True)
class ChunkCounts:
    """Partial counts over a contiguous range of starts; merging is exact
    addition and order-independent."""

    count_chi_gt_k: int
    chi_histogram: Counter
    k2_histogram: Counter

    @staticmethod
    def empty() -> "ChunkCounts":
        return ChunkCounts(0, Counter(), Counter())

    def merge(self, other: "ChunkCounts") -> "ChunkCounts":
        return ChunkCounts(
            self.count_chi_gt_k + other.count_chi_gt_k,
            self.chi_histogram + other.chi_histogram,
            self.k2_histogram + other.k2_histogram,
        )


@dataclass(frozen=True)
class SieveReport:
    params: MapParams
    k: int
    slice_lo: int  # 2
    slice_hi: int  # 2^k + 1 inclusive
    count_chi_gt_k: int
    chi_histogram: dict[int, int]  # chi value -> count, chi <= k
    k2_histogram: dict[int, int]  # k2 of surviving words -> count
    table_total: int
    verdict: str  # "equal" or "lower-bound"
    surplus: int  # brute count - table total, >= 0

    @property
    def f(self):
        from fractions import Fraction

        return Fraction(self.count_chi_gt_k, 1 << self.k)


def sieve_chunk(lo: int, hi: int, k: int, params: MapParams) -> ChunkCounts:
    """Classify starts n in [lo, hi] (inclusive), capping iteration at k."""
    m = params.m
    count = 0
    chi_hist: Counter = Counter()
    k2_hist: Counter = Counter()
    for n in range(lo, hi + 1):
        v = n
        k2 = 0
        chi = None
        for j in range(1, k + 1):
            if v & 1:
                k2 += 1
                v = (m * v + 1) // 2
            else:
                v //= 2
            if v < n:
                chi = j
                break
        if chi is None:
            count += 1
            k2_hist[k2] += 1
        else:
            chi_hist[chi] += 1
    return ChunkCounts(count, chi_hist, k2_hist)


def merge_chunks(parts: Iterable[ChunkCounts]) -> ChunkCounts:
    acc = ChunkCounts.empty()
    for p in parts:
        acc = acc.merge(p)
    return acc


def sieve_slice(k: int, params: MapParams, table: Optional[StoppingTable] = None,
                chunks: int = 1) -> SieveReport:
    """Brute-force report over [2, 2^k + 1], cross-checked against the table."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if chunks < 1:
        raise ValueError("chunks must be >= 1")
    lo, hi = 2, (1 << k) + 1
    if chunks == 1:
        counts = sieve_chunk(lo, hi, k, params)
    else:
        span = hi - lo + 1
        bounds = [lo + span * i // chunks for i in range(chunks + 1)]
        parts = [sieve_chunk(bounds[i], bounds[i + 1] - 1, k, params)
                 for i in range(chunks)]
        counts = merge_chunks(parts)
    if table is None:
        table = chi_table(k, params)
    table_total = table.total(k)
    surplus = counts.count_chi_gt_k - table_total
    if surplus < 0:
        raise AssertionError(
            f"table total {table_total} exceeds brute count {counts.count_chi_gt_k} "
            f"at k={k}, m={params.m}: lower-bound law broken"
        )
    return SieveReport(
        params=params,
        k=k,
        slice_lo=lo,
        slice_hi=hi,
        count_chi_gt_k=counts.count_chi_gt_k,
        chi_histogram=dict(sorted(counts.chi_histogram.items())),
        k2_histogram=dict(sorted(counts.k2_histogram.items())),
        table_total=table_total,
        verdict="equal" if surplus == 0 else "lower-bound",
        surplus=surplus,
    )


def histogram_vs_gray(k: int, params: MapParams,
                      report: Optional[SieveReport] = None,
                      table: Optional[StoppingTable] = None) -> list[tuple[int, int, int, int]]:
    """Rows (j, brute count of chi = j, gray(j), expected count) for j = 1..k.

    Integers with chi = j form gray(j) residue classes mod 2^j, so a slice
    of 2^k consecutive integers holds gray(j) * 2^(k-j) of them.
    """
    if table is None:
        table = chi_table(k, params)
    if report is None:
        report = sieve_slice(k, params, table=table)
    return [(j, report.chi_histogram.get(j, 0), table.gray(j),
             table.gray(j) << (k - j)) for j in range(1, k + 1)]


def per_cell_histogram(k: int, params: MapParams,
                       report: Optional[SieveReport] = None) -> dict[int, int]:
    """Survivors of the slice grouped by the 1-count of their length-k word."""
    if report is None:
        report = sieve_slice(k, params)
    return dict(report.k2_histogram)
