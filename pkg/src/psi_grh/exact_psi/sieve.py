"""Prime and prime-power enumeration by a segmented sieve of Eratosthenes."""

from __future__ import annotations

import math

import numpy as np

from psi_grh.errors import CutoffTooLarge

CUTOFF_GUARD = 10**9
SEGMENT = 1 << 20


def _small_primes(n: int) -> np.ndarray:
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    s = np.ones(n + 1, dtype=bool)
    s[:2] = False
    for i in range(2, math.isqrt(n) + 1):
        if s[i]:
            s[i * i :: i] = False
    return np.nonzero(s)[0].astype(np.int64)


def primes_up_to(n: int, segment: int = SEGMENT) -> np.ndarray:
    """All primes p <= n, ascending, as int64."""
    n = int(n)
    if n > CUTOFF_GUARD:
        raise CutoffTooLarge(f"cutoff {n} exceeds the sieve guard {CUTOFF_GUARD}")
    if n <= segment:
        return _small_primes(n)
    base = _small_primes(math.isqrt(n))
    out = [base]
    lo = math.isqrt(n) + 1
    while lo <= n:
        hi = min(lo + segment - 1, n)
        mark = np.ones(hi - lo + 1, dtype=bool)
        for p in base:
            p = int(p)
            if p * p > hi:
                break
            start = max(p * p, -(-lo // p) * p)
            mark[start - lo :: p] = False
        out.append(np.nonzero(mark)[0].astype(np.int64) + lo)
        lo = hi + 1
    return np.concatenate(out)


def prime_powers_up_to(n: int):
    """Yield (p, k, p**k) for every prime power p**k <= n, ordered by p then k."""
    for p in primes_up_to(n):
        p = int(p)
        q, k = p, 1
        while q <= n:
            yield p, k, q
            q *= p
            k += 1


def von_mangoldt_array(n: int) -> np.ndarray:
    """Lambda(m) for 0 <= m <= n as float64 (index 0 and 1 are 0)."""
    lam = np.zeros(n + 1)
    for p in primes_up_to(n):
        p = int(p)
        lp = math.log(p)
        q = p
        while q <= n:
            lam[q] = lp
            q *= p
    return lam
