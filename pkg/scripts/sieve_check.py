#!/usr/bin/env python3
"""Brute-force cross-check of the recursive tables over [2, 2^k + 1].

For m = 3 the brute counts match the table exactly; for m = 5 the table is
a lower bound and any surplus is printed as data.

Usage: python3 scripts/sieve_check.py [kmax] [m]
"""

import sys
import time

from mx1 import MapParams, chi_table, sieve_slice


def main():
    kmax = int(sys.argv[1]) if len(sys.argv) > 1 else 16
    ms = [int(sys.argv[2])] if len(sys.argv) > 2 else [3, 5]
    for m in ms:
        params = MapParams(m)
        table = chi_table(kmax, params)
        print(f"m={m}:")
        for k in range(1, kmax + 1):
            start = time.perf_counter()
            rep = sieve_slice(k, params, table=table)
            dt = time.perf_counter() - start
            print(f"  k={k:>2}: brute {rep.count_chi_gt_k:>8}  "
                  f"table {rep.table_total:>8}  {rep.verdict}"
                  f"{'' if not rep.surplus else f' (+{rep.surplus})'}  [{dt:.2f}s]")


if __name__ == "__main__":
    main()
