"""Counting representations n = s + P_m(k) with s a square or twice a square.

a_m(n) counts pairs (l, k) with l >= 1 and l^2 + P_m(k) = n; b_m(n) counts
pairs with 2*l^2 + P_m(k) = n.  Pairs are witnesses, k ranging over all
integers.  These counts carry the mod-2 content of the unsigned sigma_odd
offset sum: the sum is congruent to a_m(n) + b_m(n) mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import UnsupportedOrderError
from .polygonal import enumerate_upto, polygonal_index


@dataclass(frozen=True)
class RepresentationWitnesses:
    """All witness pairs for one (m, n).

    Attributes:
        m: polygonal order.
        n: represented value.
        a_witnesses: pairs (l, k) with l^2 + P_m(k) = n, sorted by (l, k).
        b_witnesses: pairs (l, k) with 2*l^2 + P_m(k) = n, sorted likewise.
    """

    m: int
    n: int
    a_witnesses: list[tuple[int, int]]
    b_witnesses: list[tuple[int, int]]

    @property
    def a_count(self) -> int:
        return len(self.a_witnesses)

    @property
    def b_count(self) -> int:
        return len(self.b_witnesses)


def count_representations(m: int, n: int) -> RepresentationWitnesses:
    """Enumerate all witnesses for a_m(n) and b_m(n) exactly.

    Walks l >= 1 with l^2 (then 2*l^2) up to n and inverts the polygonal
    remainder for each.

    Raises:
        UnsupportedOrderError: m < 3.
    """
    if m < 3:
        raise UnsupportedOrderError(f"polygonal order must be >= 3, got m={m}")
    a_witnesses: list[tuple[int, int]] = []
    b_witnesses: list[tuple[int, int]] = []
    for scale, out in ((1, a_witnesses), (2, b_witnesses)):
        ell = 1
        while scale * ell * ell <= n:
            for k in sorted(polygonal_index(m, n - scale * ell * ell)):
                out.append((ell, k))
            ell += 1
    return RepresentationWitnesses(
        m=m, n=n, a_witnesses=a_witnesses, b_witnesses=b_witnesses
    )


def representation_count_profile(
    m: int, n_max: int
) -> tuple[np.ndarray, np.ndarray]:
    """(a_m(n), b_m(n)) for 0 <= n <= n_max as int64 arrays.

    Gathers every offset P_m(k) <= n_max once (one entry per k, so
    repeated values keep their multiplicity) and scatters squares and
    doubled squares against them in the active kernel backend.

    Raises:
        UnsupportedOrderError: m < 3.
    """
    if m < 3:
        raise UnsupportedOrderError(f"polygonal order must be >= 3, got m={m}")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    shifts = np.asarray(
        [off for _, off in enumerate_upto(m, n_max)], dtype=np.int64
    )
    a_profile = kernels.square_shift_counts(shifts, 1, n_max)
    b_profile = kernels.square_shift_counts(shifts, 2, n_max)
    return a_profile, b_profile
