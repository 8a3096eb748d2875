#!/usr/bin/env python3
"""Write the golden count tables for both maps (k <= 20) as CSV and JSON.

Usage: python3 scripts/reproduce_tables.py [outdir]
"""

import sys
from pathlib import Path

from mx1 import MapParams, chi_table
from mx1.render import table_to_csv, table_to_json


def main():
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out")
    outdir.mkdir(parents=True, exist_ok=True)
    for m in (3, 5):
        table = chi_table(20, MapParams(m))
        (outdir / f"table_m{m}_k20.csv").write_text(table_to_csv(table))
        (outdir / f"table_m{m}_k20.json").write_text(table_to_json(table))
        print(f"m={m}: total(20) = {table.total(20)}")
    print(f"wrote tables to {outdir}/")


if __name__ == "__main__":
    main()
