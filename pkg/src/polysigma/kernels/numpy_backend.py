"""Pure-numpy kernel implementations (fallback when numba is unavailable)."""

from __future__ import annotations

import numpy as np


def sigma_sieve(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """Divisor-marking sieve via strided slice adds.

    Every n is its own divisor, so both arrays start at identity and the
    loops only mark proper divisors d <= limit // 2.
    """
    n = np.arange(limit + 1, dtype=np.int64)
    sigma = n.copy()
    sigma_odd = np.where(n & 1 == 1, n, 0)
    sigma_odd[0] = 0
    for d in range(1, limit // 2 + 1):
        sigma[2 * d :: d] += d
    for d in range(1, limit // 2 + 1, 2):
        sigma_odd[2 * d :: d] += d
    return sigma_odd, sigma


def shifted_weighted_sum(
    values: np.ndarray, offsets: np.ndarray, weights: np.ndarray, n_max: int
) -> np.ndarray:
    totals = np.zeros(n_max + 1, dtype=np.int64)
    for off, w in zip(offsets.tolist(), weights.tolist()):
        if off >= n_max:
            continue
        totals[off + 1 :] += w * values[1 : n_max - off + 1]
    return totals


def square_shift_counts(shifts: np.ndarray, scale: int, n_max: int) -> np.ndarray:
    top = 0
    while scale * (top + 1) * (top + 1) <= n_max:
        top += 1
    if top == 0 or shifts.size == 0:
        return np.zeros(n_max + 1, dtype=np.int64)
    ell = np.arange(1, top + 1, dtype=np.int64)
    sums = (scale * ell * ell)[:, None] + shifts[None, :]
    sums = sums[sums <= n_max]
    return np.bincount(sums, minlength=n_max + 1).astype(np.int64)
