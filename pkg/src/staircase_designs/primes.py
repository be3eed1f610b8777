"""Exact primality testing and small sieves.

Trial division handles everything below 10**6; beyond that a Miller-Rabin
test with a fixed deterministic witness set takes over (correct for all
inputs this package accepts, far past 10**12).
"""

from __future__ import annotations

_TRIAL_LIMIT = 10**6

# Deterministic for every n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _miller_rabin(n: int) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Exact primality test for non-negative integers."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < _TRIAL_LIMIT:
        f = 41
        while f * f <= n:
            if n % f == 0:
                return False
            f += 2
        return True
    return _miller_rabin(n)


def prime_flags(limit: int) -> bytearray:
    """Sieve of Eratosthenes; flags[i] == 1 iff i is prime, 0 <= i <= limit."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    if limit < 2:
        return bytearray(limit + 1)
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0] = flags[1] = 0
    p = 2
    while p * p <= limit:
        if flags[p]:
            start = p * p
            flags[start :: p] = b"\x00" * ((limit - start) // p + 1)
        p += 1
    return flags
