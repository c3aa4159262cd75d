"""Numba-jitted kernel implementations (explicit loops, nopython mode)."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def sigma_sieve(limit: int) -> tuple[np.ndarray, np.ndarray]:
    sigma_odd = np.zeros(limit + 1, dtype=np.int64)
    sigma = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        odd = d & 1 == 1
        for mult in range(d, limit + 1, d):
            sigma[mult] += d
            if odd:
                sigma_odd[mult] += d
    return sigma_odd, sigma


@njit(cache=True)
def shifted_weighted_sum(
    values: np.ndarray, offsets: np.ndarray, weights: np.ndarray, n_max: int
) -> np.ndarray:
    totals = np.zeros(n_max + 1, dtype=np.int64)
    for i in range(offsets.shape[0]):
        off = offsets[i]
        w = weights[i]
        for n in range(off + 1, n_max + 1):
            totals[n] += w * values[n - off]
    return totals


@njit(cache=True)
def square_shift_counts(shifts: np.ndarray, scale: int, n_max: int) -> np.ndarray:
    counts = np.zeros(n_max + 1, dtype=np.int64)
    ell = 1
    while scale * ell * ell <= n_max:
        base = scale * ell * ell
        for j in range(shifts.shape[0]):
            t = base + shifts[j]
            if t <= n_max:
                counts[t] += 1
        ell += 1
    return counts
