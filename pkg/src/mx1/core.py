"""Generalized mx+1 map: trajectories, parity words, stopping times.

The map sends even n to n/2 and odd n to (m*n+1)/2, with m = 3 (the 3x+1
problem) or m = 5 (the 5x+1 problem).  Everything here is exact: iterates,
affine coefficients and counts are plain Python ints, which never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

SUPPORTED_MULTIPLIERS = (3, 5)


class InvariantViolation(Exception):
    """An internal exact-arithmetic identity failed; indicates a bug."""


@dataclass(frozen=True)
class MapParams:
    """Which mx+1 problem is being studied (m = 3 or m = 5)."""

    m: int = 3

    def __post_init__(self) -> None:
        if self.m not in SUPPORTED_MULTIPLIERS:
            raise ValueError(
                f"unsupported multiplier m={self.m}; expected one of {SUPPORTED_MULTIPLIERS}"
            )


@dataclass(frozen=True)
class DyadicWord:
    """A finite parity word: bit j is the parity of the j-th iterate (t_0 first)."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("word bits must be 0 or 1")

    @classmethod
    def from_string(cls, s: str) -> "DyadicWord":
        if any(ch not in "01" for ch in s):
            raise ValueError(f"invalid word {s!r}: bits must be 0 or 1")
        return cls(tuple(int(ch) for ch in s))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, j: int) -> int:
        return self.bits[j]

    def __iter__(self):
        return iter(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    @property
    def k2(self) -> int:
        """Number of odd (1) steps."""
        return sum(self.bits)

    @property
    def k1(self) -> int:
        """Number of even (0) steps."""
        return len(self.bits) - self.k2


@dataclass(frozen=True)
class TrajectoryRecord:
    """k+1 exact iterates of a start value together with its parity word."""

    start: int
    iterates: tuple[int, ...]
    word: DyadicWord

    @property
    def length(self) -> int:
        return len(self.iterates)


@dataclass(frozen=True)
class AffineCoefficients:
    """Exact (a, b, c) with b * T^(k)(n) = a*n + c for every n realizing the word.

    a = m^k2, b = 2^k; c depends on the order of the steps.
    """

    a: int
    b: int
    c: int


def step(n: int, params: MapParams) -> int:
    """One application of the map; n must be a positive integer."""
    if n < 1:
        raise ValueError(f"map domain is positive integers, got n={n}")
    if n % 2 == 0:
        return n // 2
    return (params.m * n + 1) // 2


def trajectory(n: int, params: MapParams, k: int) -> TrajectoryRecord:
    """The first k+1 iterates of n and the length-k parity word."""
    if n < 1:
        raise ValueError(f"map domain is positive integers, got n={n}")
    if k < 0:
        raise ValueError("iteration count must be >= 0")
    iterates = [n]
    bits = []
    v = n
    for _ in range(k):
        bits.append(v & 1)
        v = v // 2 if v % 2 == 0 else (params.m * v + 1) // 2
        iterates.append(v)
    return TrajectoryRecord(start=n, iterates=tuple(iterates), word=DyadicWord(tuple(bits)))


def dyadic_word(n: int, params: MapParams, k: int) -> DyadicWord:
    """The length-k parity word of n's trajectory."""
    if n < 1:
        raise ValueError(f"map domain is positive integers, got n={n}")
    if k < 0:
        raise ValueError("word length must be >= 0")
    bits = []
    v = n
    m = params.m
    for _ in range(k):
        b = v & 1
        bits.append(b)
        v = (m * v + 1) // 2 if b else v // 2
    return DyadicWord(tuple(bits))


def stopping_time(n: int, params: MapParams, budget: int) -> Optional[int]:
    """Smallest k <= budget with T^(k)(n) < n, or None.

    None is a normal outcome certifying chi(n) > budget, not an error.
    n = 1 is rejected: it cycles and never drops below itself.
    """
    if n < 2:
        raise ValueError("stopping time is defined for n >= 2")
    if budget < 1:
        raise ValueError("budget must be >= 1")
    v = n
    m = params.m
    for j in range(1, budget + 1):
        v = (m * v + 1) // 2 if v & 1 else v // 2
        if v < n:
            return j
    return None


def affine_coefficients(word: DyadicWord, params: MapParams) -> AffineCoefficients:
    """Exact (a, b, c) for a word, by symbolic left-to-right application.

    Maintains iterate = (A*n + C) / denom; an even step doubles the
    denominator, an odd step maps (A, C) to (m*A, m*C + denom) and then
    doubles the denominator.
    """
    m = params.m
    a, c, denom = 1, 0, 1
    for bit in word:
        if bit:
            a *= m
            c = m * c + denom
        denom *= 2
    return AffineCoefficients(a=a, b=denom, c=c)


def detect_cycle(n: int, params: MapParams, budget: int) -> Optional[tuple[int, ...]]:
    """The cycle reached from n within budget iterations, or None.

    The cycle is normalized to start at its smallest element.
    """
    if n < 1:
        raise ValueError(f"map domain is positive integers, got n={n}")
    if budget < 1:
        raise ValueError("budget must be >= 1")
    seen: dict[int, int] = {}
    path = []
    v = n
    for _ in range(budget + 1):
        if v in seen:
            cycle = path[seen[v]:]
            pivot = cycle.index(min(cycle))
            return tuple(cycle[pivot:] + cycle[:pivot])
        seen[v] = len(path)
        path.append(v)
        v = step(v, params)
    return None
