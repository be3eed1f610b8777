"""Square-interval classification and the minimum design size.

The intervals I_k = [k*k - k + 1, k*k] and J_k = [k*k + 1, k*k + k]
partition the positive integers.  The minimum number of blocks of a
two-replication staircase design on n symbols is

    phi(n) = 2k      if n lies in I_k,
    phi(n) = 2k + 1  if n lies in J_k,

and the same k is the one whose square is nearest to n.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import NamedTuple

from .arith import INPUT_CEILING, FactorPair, eps


class Side(Enum):
    LOWER = "lower"  # n in I_k, at or below k*k
    UPPER = "upper"  # n in J_k, above k*k


class SquareInterval(NamedTuple):
    k: int
    side: Side


def _check(n: int, what: str) -> None:
    if n < 1:
        raise ValueError(f"{what} is defined for n >= 1, got n={n}")
    if n > INPUT_CEILING:
        raise ValueError(f"n={n} exceeds the supported ceiling {INPUT_CEILING}")


def classify(n: int) -> SquareInterval:
    """The unique (k, side) with n in I_k (LOWER) or J_k (UPPER)."""
    _check(n, "classify")
    a = math.isqrt(n)
    if n == a * a:
        return SquareInterval(a, Side.LOWER)
    if n <= a * a + a:
        return SquareInterval(a, Side.UPPER)
    return SquareInterval(a + 1, Side.LOWER)


def nearest_square_k(n: int) -> int:
    """The k >= 1 minimising |n - k*k|.

    Computed from the two bracketing candidates isqrt(n) and isqrt(n) + 1.
    A tie between them would need 2n = 2a*a + 2a + 1, which is odd, so no
    tie can occur.
    """
    _check(n, "nearest_square_k")
    a = math.isqrt(n)
    if a == 0:
        return 1
    if n - a * a <= (a + 1) * (a + 1) - n:
        return a
    return a + 1


def phi(n: int) -> int:
    """Minimum weight of a staircase decomposition of n (block count)."""
    k, side = classify(n)
    return 2 * k if side is Side.LOWER else 2 * k + 1


def min_sum_factor_pair(n: int) -> FactorPair:
    """The unique divisor pair of n with the least sum, (eps(n), n/eps(n))."""
    e = eps(n)
    return FactorPair(e, n // e)


def delta_minimizers(k: int, side: Side) -> list[tuple[int, FactorPair]]:
    """All n in I_k (or J_k) whose delta attains the interval minimum.

    LOWER: delta(n) = 2k exactly for n = k*k - l*l with l*l <= k - 1,
    witnessed by the pair (k - l, k + l).
    UPPER: delta(n) = 2k + 1 exactly for n = k*k + k - l*l - l with
    l*l + l <= k - 1, witnessed by (k - l, k + l + 1).

    Results ascend in n; l ranges come from the exact inequalities above.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > 10**6:
        raise ValueError(f"k={k} exceeds the supported ceiling 10**6")
    out = []
    if side is Side.LOWER:
        l = math.isqrt(k - 1)
        while l >= 0:
            out.append((k * k - l * l, FactorPair(k - l, k + l)))
            l -= 1
    elif side is Side.UPPER:
        l = (math.isqrt(4 * k - 3) - 1) // 2  # largest l with l*l + l <= k - 1
        while l >= 0:
            out.append((k * k + k - l * l - l, FactorPair(k - l, k + l + 1)))
            l -= 1
    else:
        raise ValueError(f"side must be a Side, got {side!r}")
    return out
