"""Pair sets A(n), B(n) and their extremal statistics.

A(n) is the set of ordered pairs (r, s), r <= s, with r + s = n (r, s >= 0);
B(n) is the same with r * s = n (which forces r, s >= 1 once n >= 1).  The
extremal statistics over them are

    alpha(n) = max r*s over A(n)          (n >= 2)
    beta(n)  = min r*s over A(n), r >= 1  (n >= 2)
    gamma(n) = max r+s over B(n)          (n >= 1)
    delta(n) = min r+s over B(n)          (n >= 1)

and eps(n) is the greatest divisor of n whose square is at most n, so that
delta(n) = eps(n) + n // eps(n).

All arithmetic is exact; square-root comparisons go through math.isqrt and
integer squaring, never floats, so boundary cases such as n = 64 are safe.
Inputs above INPUT_CEILING are rejected outright instead of being allowed
to run for unbounded time.
"""

from __future__ import annotations

import math
from typing import NamedTuple

# Documented guard for all single-value queries.
INPUT_CEILING = 10**12


class SumPair(NamedTuple):
    """Element of A(n): r + s = n with 0 <= r <= s."""

    r: int
    s: int


class FactorPair(NamedTuple):
    """Element of B(n): r * s = n with 1 <= r <= s."""

    r: int
    s: int


def _check(n: int, minimum: int, what: str) -> None:
    if n < minimum:
        raise ValueError(f"{what} is defined for n >= {minimum}, got n={n}")
    if n > INPUT_CEILING:
        raise ValueError(f"n={n} exceeds the supported ceiling {INPUT_CEILING}")


def additive_pairs(n: int) -> list[SumPair]:
    """All (r, s) with r <= s and r + s = n, ascending in r."""
    _check(n, 0, "additive_pairs")
    if n > 10**7:
        raise ValueError("additive_pairs would materialise more than 5*10**6 pairs")
    return [SumPair(r, n - r) for r in range(n // 2 + 1)]


def multiplicative_pairs(n: int) -> list[FactorPair]:
    """All (r, s) with r <= s and r * s = n, ascending in r.

    n = 0 is rejected: every (0, s) works, so the set is infinite.
    """
    _check(n, 1, "multiplicative_pairs")
    return [FactorPair(d, n // d) for d in range(1, math.isqrt(n) + 1) if n % d == 0]


def alpha(n: int) -> int:
    """max r*s over A(n): n**2 // 4 for even n, (n**2 - 1) // 4 for odd."""
    _check(n, 2, "alpha")
    return n * n // 4 if n % 2 == 0 else (n * n - 1) // 4


def beta(n: int) -> int:
    """min r*s over the pairs of A(n) with r >= 1; equals n - 1."""
    _check(n, 2, "beta")
    return n - 1


def gamma(n: int) -> int:
    """max r+s over B(n); equals n + 1, witnessed by (1, n)."""
    _check(n, 1, "gamma")
    return n + 1


def eps(n: int) -> int:
    """Greatest divisor d of n with d*d <= n.

    Descending scan from isqrt(n); always terminates at d = 1.
    """
    _check(n, 1, "eps")
    for d in range(math.isqrt(n), 1, -1):
        if n % d == 0:
            return d
    return 1


def delta(n: int) -> int:
    """min r+s over B(n), attained at (eps(n), n // eps(n))."""
    e = eps(n)
    return e + n // e


def eps_range(limit: int) -> list[int]:
    """eps(n) for every n = 1..limit as a list indexed by n (index 0 unused).

    Sieve: for each d ascending, stamp d onto its multiples >= d*d; the last
    stamp wins, which is exactly the largest divisor below the square root.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    table = [1] * (limit + 1)
    for d in range(2, math.isqrt(limit) + 1):
        for m in range(d * d, limit + 1, d):
            table[m] = d
    table[0] = 0
    return table

def delta_range(limit: int) -> list[int]:
    """delta(n) for every n = 1..limit, indexed by n (index 0 unused)."""
    table = eps_range(limit)
    for m in range(1, limit + 1):
        table[m] += m // table[m]
    return table
