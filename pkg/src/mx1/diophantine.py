"""Solution families of c = b*y - a*x for parity words.

Every length-k word is realized by exactly one residue class x0 + 2^k q,
and the trajectory endpoints advance by a = m^k2 per period.  The particular
solution is canonicalized to the least nonnegative residue 0 <= x0 < 2^k.
No extended gcd is needed: x0 is built constructively from the parity
constraints and y0 follows by exact division, which doubles as a check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .core import (
    AffineCoefficients,
    DyadicWord,
    InvariantViolation,
    MapParams,
    affine_coefficients,
    trajectory,
)


class WordClass(enum.Enum):
    """Ascending: a > b, every positive realization ends above its start.
    Descending: a < b; a = b is impossible (coprime powers)."""

    ASCENDING = "ascending"
    DESCENDING = "descending"


@dataclass(frozen=True)
class SolutionFamily:
    """All starts realizing a word: x = x0 + b*q, ending at y = y0 + a*q."""

    coeffs: AffineCoefficients
    x0: int
    y0: int

    @property
    def x_start(self) -> int:
        """First positive family member (x0 itself unless x0 = 0)."""
        return self.x0 if self.x0 >= 1 else self.x0 + self.coeffs.b

    @property
    def y_start(self) -> int:
        return self.y0 if self.x0 >= 1 else self.y0 + self.coeffs.a

    def member(self, q: int) -> tuple[int, int]:
        return (self.x0 + self.coeffs.b * q, self.y0 + self.coeffs.a * q)


@dataclass(frozen=True)
class PeriodicityVerdict:
    ok: bool
    counterexample: Optional[int] = None  # first failing q, if any


def word_to_residue(word: DyadicWord, params: MapParams) -> int:
    """The unique residue x0 mod 2^k whose trajectory realizes the word.

    Built bit by bit: after fixing x0 mod 2^j, the j-th iterate of any
    candidate is (a*x0 + c) / 2^j with (a, c) the prefix coefficients;
    adding 2^j to x0 shifts that iterate by the odd number a, flipping its
    parity, so each binary digit of x0 is forced.
    """
    if len(word) < 1:
        raise ValueError("word length must be >= 1")
    m = params.m
    a, c = 1, 0
    x0 = 0
    for j, bit in enumerate(word):
        v = (a * x0 + c) >> j
        if (v & 1) != bit:
            x0 += 1 << j
        if bit:
            c = m * c + (1 << j)
            a *= m
    return x0


def solve_word(word: DyadicWord, params: MapParams) -> SolutionFamily:
    """Particular solution and periodic family for a word's Diophantine equation."""
    coeffs = affine_coefficients(word, params)
    x0 = word_to_residue(word, params)
    num = coeffs.a * x0 + coeffs.c
    y0, rem = divmod(num, coeffs.b)
    if rem != 0:
        raise InvariantViolation(
            f"non-exact division solving word {word}: {num} not divisible by {coeffs.b}"
        )
    if coeffs.c != coeffs.b * y0 - coeffs.a * x0:
        raise InvariantViolation(f"solution identity failed for word {word}")
    return SolutionFamily(coeffs=coeffs, x0=x0, y0=y0)


def classify_word(word: DyadicWord, params: MapParams) -> WordClass:
    """Ascending iff m^k2 > 2^k, decided with exact integers only."""
    if len(word) < 1:
        raise ValueError("word length must be >= 1")
    if params.m ** word.k2 > 2 ** len(word):
        return WordClass.ASCENDING
    return WordClass.DESCENDING


def descending_dominance_bound(family: SolutionFamily) -> int:
    """Smallest q >= 0 past which x > y for a descending family.

    Solves y0 + a*q < x0 + b*q, i.e. q > (y0 - x0) / (b - a).
    """
    a, b = family.coeffs.a, family.coeffs.b
    if a >= b:
        raise ValueError("dominance bound only applies to descending families")
    diff = family.y0 - family.x0
    if diff < 0:
        return 0
    return diff // (b - a) + 1


def periodicity_check(n: int, k: int, qmax: int, params: MapParams) -> PeriodicityVerdict:
    """Confirm word(n + 2^k q) = word(n) and end values advance by a per period."""
    if n < 1 or k < 1 or qmax < 0:
        raise ValueError("need n >= 1, k >= 1, qmax >= 0")
    base = trajectory(n, params, k)
    a = params.m ** base.word.k2
    period = 1 << k
    for q in range(1, qmax + 1):
        nq = n + period * q
        rec = trajectory(nq, params, k)
        if rec.word != base.word:
            return PeriodicityVerdict(ok=False, counterexample=q)
        if rec.iterates[-1] != base.iterates[-1] + a * q:
            return PeriodicityVerdict(ok=False, counterexample=q)
    return PeriodicityVerdict(ok=True)
