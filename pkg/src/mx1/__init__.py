"""Exact-arithmetic stopping-time distribution analysis for the 3x+1 and
5x+1 maps: parity words, Diophantine solution families, recursive count
tables with the distribution function F(k), and a brute-force sieve oracle.
"""

from .core import (
    AffineCoefficients,
    DyadicWord,
    InvariantViolation,
    MapParams,
    TrajectoryRecord,
    affine_coefficients,
    detect_cycle,
    dyadic_word,
    step,
    stopping_time,
    trajectory,
)
from .diophantine import (
    PeriodicityVerdict,
    SolutionFamily,
    WordClass,
    classify_word,
    descending_dominance_bound,
    periodicity_check,
    solve_word,
    word_to_residue,
)
from .sieve import (
    ChunkCounts,
    SieveReport,
    histogram_vs_gray,
    merge_chunks,
    per_cell_histogram,
    sieve_chunk,
    sieve_slice,
)
from .table import (
    StoppingTable,
    TableColumn,
    binomial_table,
    chi_table,
    f_of_k,
    format_fraction,
    n_chi_report,
    threshold_row,
)

__all__ = [
    "AffineCoefficients",
    "ChunkCounts",
    "DyadicWord",
    "InvariantViolation",
    "MapParams",
    "PeriodicityVerdict",
    "SieveReport",
    "SolutionFamily",
    "StoppingTable",
    "TableColumn",
    "TrajectoryRecord",
    "WordClass",
    "affine_coefficients",
    "binomial_table",
    "chi_table",
    "classify_word",
    "descending_dominance_bound",
    "detect_cycle",
    "dyadic_word",
    "f_of_k",
    "format_fraction",
    "histogram_vs_gray",
    "merge_chunks",
    "n_chi_report",
    "per_cell_histogram",
    "periodicity_check",
    "sieve_chunk",
    "sieve_slice",
    "solve_word",
    "step",
    "stopping_time",
    "threshold_row",
    "trajectory",
    "word_to_residue",
]
