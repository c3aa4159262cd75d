"""Weighted convolutions of sigma_odd over m-gonal offsets, plus the two
classical pentagonal-offset identities used as cross-checks.

The central object is the finite sum

    S(n) = sum_k w(k) * sigma_odd(n - P_m(k))

over all k with P_m(k) <= n - 1, with weight w(k) one of: constant 1,
(-1)^k, or the period-4 triangular sign (-1)^((k^2-k)/2).  For m >= 3 the
offsets grow without bound and the sum is finite; for m < 3 infinitely
many terms are nonzero and no finite value exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt

import numpy as np

from . import kernels
from .arith import PartitionTable, SigmaTable
from .errors import CapacityError, DivergenceError, OutOfRangeError
from .polygonal import enumerate_upto, triangular_sign

# Profile sums are bounded by 128 * n^2 (each offset value occurs at most
# twice, sigma(j) < 64 j), so int64 stays exact up to this n_max.
CONVOLUTION_LIMIT_CAP = isqrt((2**63 - 1) // 128)


class WeightMode(Enum):
    """Weight applied to the k-th term of the offset sum."""

    UNSIGNED = "unsigned"
    ALTERNATING = "alternating"
    TRIANGULAR_SIGN = "triangular"


def _weight(mode: WeightMode, k: int) -> int:
    if mode is WeightMode.UNSIGNED:
        return 1
    if mode is WeightMode.ALTERNATING:
        return -1 if k % 2 else 1
    return triangular_sign(k)


@dataclass(frozen=True)
class ConvolutionValue:
    """One evaluated offset sum.

    Attributes:
        m: polygonal order of the offsets.
        n: argument of the sum.
        mode: weight applied per term.
        value: exact value of the sum.
        support_size: number of offsets k with P_m(k) <= n - 1, i.e. the
            number of terms that contribute.
    """

    m: int
    n: int
    mode: WeightMode
    value: int
    support_size: int


def convolve_sigma_odd(
    table: SigmaTable, m: int, n: int, mode: WeightMode = WeightMode.UNSIGNED
) -> ConvolutionValue:
    """Evaluate S(n) = sum_k w(k) sigma_odd(n - P_m(k)) exactly.

    Raises:
        DivergenceError: m < 3 (infinitely many nonzero terms).
        OutOfRangeError: n exceeds the table limit.
    """
    if m < 3:
        raise DivergenceError(
            f"offset sum diverges for m={m}: infinitely many nonzero terms"
        )
    if n > table.limit:
        raise OutOfRangeError(f"n={n} exceeds table limit {table.limit}")
    value = 0
    support = 0
    for k, off in enumerate_upto(m, n - 1):
        value += _weight(mode, k) * table.sigma_odd_at(n - off)
        support += 1
    return ConvolutionValue(m=m, n=n, mode=mode, value=value, support_size=support)


def convolution_profile(
    table: SigmaTable, m: int, mode: WeightMode, n_max: int
) -> np.ndarray:
    """S(n) for 0 <= n <= n_max as an int64 array (entry 0 is 0).

    Offsets and weights are gathered once, then the shifted sums run in
    the active kernel backend.

    Raises:
        DivergenceError: m < 3.
        OutOfRangeError: n_max exceeds the table limit.
        CapacityError: n_max exceeds the int64-safe profile cap.
    """
    if m < 3:
        raise DivergenceError(
            f"offset sum diverges for m={m}: infinitely many nonzero terms"
        )
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if n_max > table.limit:
        raise OutOfRangeError(f"n_max={n_max} exceeds table limit {table.limit}")
    if n_max > CONVOLUTION_LIMIT_CAP:
        raise CapacityError(
            f"n_max={n_max} exceeds int64-safe profile cap {CONVOLUTION_LIMIT_CAP}"
        )
    offsets = []
    weights = []
    for k, off in enumerate_upto(m, n_max - 1):
        offsets.append(off)
        weights.append(_weight(mode, k))
    return kernels.shifted_weighted_sum(
        table.sigma_odd,
        np.asarray(offsets, dtype=np.int64),
        np.asarray(weights, dtype=np.int64),
        n_max,
    )


def euler_partition_residual(ptable: PartitionTable, n: int) -> int:
    """sum_k (-1)^k p(n - P_5(k)) over P_5(k) <= n; equals 1 at n=0, else 0."""
    if n < 0 or n > ptable.limit:
        raise OutOfRangeError(f"n={n} outside table range [0, {ptable.limit}]")
    total = 0
    for k, off in enumerate_upto(5, n):
        sign = -1 if k % 2 else 1
        total += sign * ptable.p[n - off]
    return total


def euler_sigma_residual(table: SigmaTable, n: int) -> int:
    """sum_k (-1)^k t(n - P_5(k)) with t(0) = n, t(j) = sigma(j); equals 0.

    The t(0) = n replacement is the standard convention that turns the
    recurrence for sigma into an identically vanishing sum for n >= 1.
    """
    if n < 0 or n > table.limit:
        raise OutOfRangeError(f"n={n} outside table range [0, {table.limit}]")
    total = 0
    for k, off in enumerate_upto(5, n):
        t = n if off == n else table.sigma_at(n - off)
        sign = -1 if k % 2 else 1
        total += sign * t
    return total
