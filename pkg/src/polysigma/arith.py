"""Exact arithmetic tables: divisor sums, partition numbers, parity oracle.

Provides:
- SigmaTable: sieved sigma_odd(n) and sigma(n) for 1 <= n <= N (int64, exact)
- PartitionTable: p(n) for 0 <= n <= N (Python ints, arbitrary precision)
- is_square_or_twice_square: the parity oracle for sigma_odd

Conventions: sigma_odd(n) = 0 for n <= 0; p(0) = 1.  All arithmetic is
integer-exact; a sieve that could overflow int64 refuses to build.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from . import kernels
from .errors import CapacityError, OutOfRangeError

# sigma(n) < n * (1 + ln n) < 64 * n for every n below this cap, so all
# sieve entries fit int64.  Integer-only screen, deliberately conservative.
SIGMA_LIMIT_CAP = (2**63 - 1) // 64


@dataclass(frozen=True)
class SigmaTable:
    """Divisor-sum arrays up to a limit.

    Attributes:
        limit: largest tabulated argument N.
        sigma_odd: int64 array of length N+1; entry n is the sum of the odd
            divisors of n.  Entry 0 is 0 (the n <= 0 convention).
        sigma: int64 array of length N+1; entry n is the sum of all
            divisors of n.  Entry 0 is 0 and is never read as sigma(0).
    """

    limit: int
    sigma_odd: np.ndarray
    sigma: np.ndarray

    def sigma_odd_at(self, n: int) -> int:
        """sigma_odd(n), extended by 0 for n <= 0."""
        if n <= 0:
            return 0
        if n > self.limit:
            raise OutOfRangeError(f"n={n} exceeds table limit {self.limit}")
        return int(self.sigma_odd[n])

    def sigma_at(self, n: int) -> int:
        """sigma(n) for 1 <= n <= limit."""
        if n < 1:
            raise OutOfRangeError(f"sigma(n) tabulated for n >= 1 only, got n={n}")
        if n > self.limit:
            raise OutOfRangeError(f"n={n} exceeds table limit {self.limit}")
        return int(self.sigma[n])


@dataclass(frozen=True)
class PartitionTable:
    """Partition numbers p(0..limit) from the pentagonal recurrence, exact."""

    limit: int
    p: list[int]


def build_sigma_table(limit: int) -> SigmaTable:
    """Sieve sigma_odd and sigma for 1 <= n <= limit.

    O(N log N) divisor marking: each d adds itself to its multiples.

    Raises:
        ValueError: limit < 1.
        CapacityError: entries could exceed exact int64 range.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if limit > SIGMA_LIMIT_CAP:
        raise CapacityError(
            f"limit {limit} exceeds int64-safe sieve cap {SIGMA_LIMIT_CAP}"
        )
    sigma_odd, sigma = kernels.sigma_sieve(limit)
    return SigmaTable(limit=limit, sigma_odd=sigma_odd, sigma=sigma)


def is_square_or_twice_square(n: int) -> bool:
    """True iff n = j*j or n = 2*j*j for some integer j >= 1.

    Exactly the n at which sigma_odd(n) is odd.  Integer square roots
    only; no floating point.
    """
    if n < 1:
        return False
    r = isqrt(n)
    if r * r == n:
        return True
    if n % 2 == 0:
        h = n // 2
        r = isqrt(h)
        if r * r == h:
            return True
    return False


def square_or_twice_square_mask(limit: int) -> np.ndarray:
    """Boolean array of length limit+1 marking squares and twice squares."""
    mask = np.zeros(limit + 1, dtype=bool)
    j = 1
    while j * j <= limit:
        mask[j * j] = True
        j += 1
    j = 1
    while 2 * j * j <= limit:
        mask[2 * j * j] = True
        j += 1
    return mask


def build_partition_table(limit: int) -> PartitionTable:
    """Partition numbers via the alternating pentagonal-offset recurrence.

    p(n) = sum_{k != 0} (-1)^(k+1) p(n - g_k) over generalized pentagonal
    offsets g_k = k(3k-1)/2 <= n, with p(0) = 1.  Python ints throughout:
    p(n) outgrows int64 near n = 416.
    """
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    p = [0] * (limit + 1)
    p[0] = 1
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 == 1 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return PartitionTable(limit=limit, p=p)
