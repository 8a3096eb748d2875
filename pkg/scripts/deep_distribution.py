#!/usr/bin/env python3
"""Build the count tables to k = 900 and print F(k) at decade checkpoints.

F_3 decays toward 0 while F_5 flattens out near 0.176; the numerators
N_{chi>k} grow without bound for both maps.

Usage: python3 scripts/deep_distribution.py [kmax]
"""

import sys
import time

from mx1 import MapParams, chi_table, format_fraction


def main():
    kmax = int(sys.argv[1]) if len(sys.argv) > 1 else 900
    checkpoints = [k for k in range(10, kmax + 1, 10) if k <= 100 or k % 100 == 0]
    tables = {}
    for m in (3, 5):
        start = time.perf_counter()
        tables[m] = chi_table(kmax, MapParams(m))
        print(f"m={m}: built to k={kmax} in {time.perf_counter() - start:.2f}s")
    print(f"{'k':>5} {'F_3':>14} {'F_5':>14}")
    for k in checkpoints:
        f3 = format_fraction(tables[3].column(k).f, 5)
        f5 = format_fraction(tables[5].column(k).f, 8)
        print(f"{k:>5} {f3:>14} {f5:>14}")


if __name__ == "__main__":
    main()
