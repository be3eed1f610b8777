"""Staircase decompositions n = r1*s1 + ... + rt*st with r1 > ... > rt.

The weight of a decomposition is r1 + s1 + ... + st, the number of blocks
of the design it induces.  This module provides validation, the proven
lower bound on the weight, explicit constructions that attain it, and an
exhaustive search oracle that recomputes the minimum weight from nothing
but the definition.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .arith import eps
from .classify import Side, classify, phi

# The exhaustive oracle is exponential in spirit; keep it on a short leash.
ORACLE_CEILING = 120


@dataclass(frozen=True)
class StaircasePartition:
    """Ordered steps ((r1, s1), ..., (rt, st)); construction does not validate."""

    steps: tuple[tuple[int, int], ...]

    @property
    def t(self) -> int:
        return len(self.steps)

    @property
    def total(self) -> int:
        """Sum r_i * s_i, the number of symbols covered."""
        return sum(r * s for r, s in self.steps)

    @property
    def weight(self) -> int:
        """r1 + sum of the s_i, the block count of the induced design."""
        if not self.steps:
            raise ValueError("weight of an empty decomposition is undefined")
        return self.steps[0][0] + sum(s for _, s in self.steps)

    def __str__(self) -> str:
        return ",".join(f"{r}x{s}" for r, s in self.steps)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    reasons: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def validate(p: StaircasePartition, n: int) -> ValidationResult:
    """Check the decomposition invariants and that the steps sum to n.

    Failure reasons: EMPTY, NONPOSITIVE, NOT_DECREASING, WRONG_SUM.
    """
    reasons = []
    if not p.steps:
        return ValidationResult(False, ("EMPTY",))
    if any(r < 1 or s < 1 for r, s in p.steps):
        reasons.append("NONPOSITIVE")
    if any(p.steps[i][0] <= p.steps[i + 1][0] for i in range(len(p.steps) - 1)):
        reasons.append("NOT_DECREASING")
    if p.total != n:
        reasons.append("WRONG_SUM")
    return ValidationResult(not reasons, tuple(reasons))


def weight_lower_bound(n: int) -> int:
    """Proven lower bound on the weight of any decomposition of n.

    Equals phi(n) = 2k on I_k and 2k + 1 on J_k; the constructions below
    attain it, so it is exact.
    """
    return phi(n)


def construct_minimal(n: int) -> StaircasePartition:
    """A decomposition of n with the minimum weight phi(n).

    Recipes: n = k*k uses the single step (k, k); other n in I_k use
    (k, k-1) + (l, 1) with l = n - k(k-1); n = k*k + k uses the single
    step (k+1, k); other n in J_k use (k, k) + (l, 1) with l = n - k*k.
    """
    k, side = classify(n)
    if side is Side.LOWER:
        if n == k * k:
            return StaircasePartition(((k, k),))
        l = n - k * k + k
        return StaircasePartition(((k, k - 1), (l, 1)))
    if n == k * k + k:
        # (k, k+1) would also be valid; r >= s matches the matrix convention.
        return StaircasePartition(((k + 1, k),))
    l = n - k * k
    return StaircasePartition(((k, k), (l, 1)))


def construct_multistep(n: int, j: int) -> StaircasePartition:
    """A many-step decomposition of n that still attains weight phi(n).

    On I_k (j >= 2, k >= (j*j + j + 2)/2, n <= k*k - (j*j + j)/2) the result
    has j + 1 steps: (k, k-j), then (k-1, 1) ... (k-j+1, 1), then (l, 1).
    On J_k (j >= 1, k >= (j*j + 3j + 4)/2, n <= k*k + k - (j*j + 3j + 2)/2)
    it has j + 2 steps: (k, k-j), then (k-1, 1) ... (k-j, 1), then (l, 1).
    """
    if j < 1:
        raise ValueError(f"j must be positive, got j={j}")
    k, side = classify(n)
    if side is Side.LOWER:
        if j < 2:
            raise ValueError("lower-interval construction needs j >= 2")
        k_min = (j * j + j + 2) // 2
        if k < k_min:
            raise ValueError(
                f"n={n} lies in the lower interval of k={k}, but j={j} needs k >= {k_min}"
            )
        n_max = k * k - (j * j + j) // 2
        if n > n_max:
            raise ValueError(f"j={j} at k={k} needs n <= {n_max}, got n={n}")
        l = n - k * k + k + (j - 1) * j // 2
        steps = [(k, k - j)]
        steps += [(k - i, 1) for i in range(1, j)]
        steps.append((l, 1))
    else:
        k_min = (j * j + 3 * j + 4) // 2
        if k < k_min:
            raise ValueError(
                f"n={n} lies in the upper interval of k={k}, but j={j} needs k >= {k_min}"
            )
        n_max = k * k + k - (j * j + 3 * j + 2) // 2
        if n > n_max:
            raise ValueError(f"j={j} at k={k} needs n <= {n_max}, got n={n}")
        l = n - k * k + j * (j + 1) // 2
        steps = [(k, k - j)]
        steps += [(k - i, 1) for i in range(1, j + 1)]
        steps.append((l, 1))
    return StaircasePartition(tuple(steps))


def construct_multiblock_extremal(n: int) -> StaircasePartition:
    """Best decomposition with t >= 2 at a square or pronic n.

    For n = k*k (k >= 2) the minimum weight with at least two steps is
    2k + 1: (k+2, 1) + (k+1, k-2) for k >= 3, and (2, 1) + (1, 2) for k = 2.
    For n = k*k + k (k >= 2) it is 2k + 2: (k+2, k-1) + (2, 1).
    """
    k = math.isqrt(n)
    if n == k * k and k >= 2:
        if k == 2:
            return StaircasePartition(((2, 1), (1, 2)))
        return StaircasePartition(((k + 2, 1), (k + 1, k - 2)))
    if n == k * k + k and k >= 2:
        return StaircasePartition(((k + 2, k - 1), (2, 1)))
    raise ValueError(f"n={n} is not k*k or k*k + k with k >= 2")


class OracleResult(NamedTuple):
    weight: int
    witness: StaircasePartition


def brute_force_min_weight(n: int, min_t: int = 1) -> OracleResult:
    """Exhaustively minimise the weight over all decompositions with t >= min_t.

    Depth-first search over strictly decreasing r-sequences with
    branch-and-bound pruning: a partial decomposition with m symbols left
    and next row count at most r needs at least ceil(m / r) more columns,
    and at least one column per still-missing step.  The witness is the
    lexicographically smallest optimum by (t, r-sequence, s-sequence), so
    repeated runs are byte-identical.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got n={n}")
    if n > ORACLE_CEILING:
        raise ValueError(f"exhaustive search is capped at n <= {ORACLE_CEILING}, got n={n}")
    if min_t < 1:
        raise ValueError(f"min_t must be positive, got {min_t}")
    if min_t * (min_t + 1) // 2 > n:
        raise ValueError(f"no decomposition of n={n} has {min_t} strictly decreasing steps")

    best_w: int | None = None
    best_key: tuple | None = None

    def offer(weight: int, steps: list[tuple[int, int]]) -> None:
        nonlocal best_w, best_key
        key = (len(steps), tuple(r for r, _ in steps), tuple(s for _, s in steps))
        if best_w is None or weight < best_w or (weight == best_w and key < best_key):
            best_w, best_key = weight, key

    # Admissible starting incumbents, straight from the definition.
    if min_t == 1:
        e = eps(n)
        offer(e + n // e, [(e, n // e)])
    elif min_t == 2 and n >= 3:
        offer(n + 1, [(n - 1, 1), (1, 1)])

    steps: list[tuple[int, int]] = []

    def extend(remaining: int, r_cap: int, weight: int) -> None:
        for r in range(min(r_cap, remaining), 0, -1):
            # ceil(remaining / r) grows as r shrinks: once it busts the
            # incumbent, every later r does too.
            if best_w is not None and weight + (remaining + r - 1) // r > best_w:
                break
            for s in range(1, remaining // r + 1):
                w2 = weight + s
                if best_w is not None and w2 > best_w:
                    break
                rest = remaining - r * s
                steps.append((r, s))
                if rest == 0:
                    if len(steps) >= min_t:
                        offer(w2, steps)
                elif r > 1:
                    need = min_t - len(steps)
                    if need <= r - 1:
                        bound = w2 + max((rest + r - 2) // (r - 1), need, 1)
                        if best_w is None or bound <= best_w:
                            extend(rest, r - 1, w2)
                steps.pop()

    r_start = n if best_w is None else min(n, best_w - 1)
    for r1 in range(r_start, 0, -1):
        if best_w is not None and r1 + (n + r1 - 1) // r1 > best_w:
            continue
        for s in range(1, n // r1 + 1):
            w = r1 + s
            if best_w is not None and w > best_w:
                break
            rest = n - r1 * s
            steps.append((r1, s))
            if rest == 0:
                if len(steps) >= min_t:
                    offer(w, steps)
            elif r1 > 1:
                need = min_t - len(steps)
                if need <= r1 - 1:
                    bound = w + max((rest + r1 - 2) // (r1 - 1), need, 1)
                    if best_w is None or bound <= best_w:
                        extend(rest, r1 - 1, w)
            steps.pop()

    assert best_w is not None and best_key is not None
    witness = StaircasePartition(tuple(zip(best_key[1], best_key[2])))
    return OracleResult(best_w, witness)


def iter_staircase_partitions(n: int) -> Iterator[StaircasePartition]:
    """Every staircase decomposition of n, exactly once.

    These are in bijection with the integer partitions of n: the r_i are the
    distinct part sizes and the s_i their multiplicities.  Enumeration is
    Kelleher's accelAsc over ascending partitions.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got n={n}")
    a = [0] * (n + 1)
    k = 1
    a[1] = n
    while k != 0:
        x = a[k - 1] + 1
        y = a[k] - 1
        k -= 1
        while x <= y:
            a[k] = x
            y -= x
            k += 1
        a[k] = x + y
        parts = a[: k + 1]
        steps = []
        i = len(parts) - 1
        while i >= 0:
            j = i
            while j >= 0 and parts[j] == parts[i]:
                j -= 1
            steps.append((parts[i], i - j))
            i = j
        yield StaircasePartition(tuple(steps))


_LINE_RE = re.compile(r"^n=(\d+) w=(\d+) steps=(\d+x\d+(?:,\d+x\d+)*)$")


def format_partition_line(p: StaircasePartition, n: int | None = None) -> str:
    """Render the exchange form `n=<n> w=<w> steps=<r1>x<s1>[,...]`."""
    shown = p.total if n is None else n
    return f"n={shown} w={p.weight} steps={p}"


def parse_partition_line(line: str) -> tuple[int, int, StaircasePartition]:
    """Parse the exchange form; returns (n, w, partition).

    The syntax is exact: single spaces between the three fields and no
    whitespace inside the step list.  Consistency of n and w with the steps
    is left to validate()/the caller.
    """
    m = _LINE_RE.match(line)
    if not m:
        raise ValueError(f"not a partition line: {line!r}")
    steps = tuple(
        (int(a), int(b)) for a, b in (part.split("x") for part in m.group(3).split(","))
    )
    if any(r < 1 or s < 1 for r, s in steps):
        raise ValueError("step entries must be positive integers")
    return int(m.group(1)), int(m.group(2)), StaircasePartition(steps)
