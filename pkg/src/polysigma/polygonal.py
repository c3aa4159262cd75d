"""Generalized m-gonal numbers: evaluation, enumeration, inversion, signs.

P_m(k) = ((m-2)k^2 - (m-4)k) / 2 for integer k, where k runs over
0, 1, -1, 2, -2, ... in the canonical enumeration order.  For m >= 3 every
value is >= 0; anchors are P_m(0) = 0, P_m(1) = 1, P_m(2) = m, and
P_m(-1) = m - 3.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterator

from .errors import UnsupportedOrderError


def polygonal_value(m: int, k: int) -> int:
    """P_m(k) = ((m-2)k^2 - (m-4)k) / 2, exact.

    The numerator is always even, so the division is exact for every
    integer m and k.

    Raises:
        UnsupportedOrderError: m < 3 (values go negative; no valid order).
    """
    if m < 3:
        raise UnsupportedOrderError(f"polygonal order must be >= 3, got m={m}")
    return ((m - 2) * k * k - (m - 4) * k) // 2


def enumerate_upto(m: int, bound: int) -> Iterator[tuple[int, int]]:
    """Yield (k, P_m(k)) with P_m(k) <= bound in canonical order.

    Order is k = 0, 1, -1, 2, -2, ...; a branch that exceeds the bound is
    dropped, and enumeration stops once both branches exceed it.  For
    m >= 3 both branches are eventually monotone, so this terminates.
    """
    if m < 3:
        raise UnsupportedOrderError(f"polygonal order must be >= 3, got m={m}")
    if bound < 0:
        return
    yield (0, 0)
    k = 1
    while True:
        pos = polygonal_value(m, k)
        neg = polygonal_value(m, -k)
        if pos > bound and neg > bound:
            return
        if pos <= bound:
            yield (k, pos)
        if neg <= bound:
            yield (-k, neg)
        k += 1


def polygonal_index(m: int, n: int) -> set[int]:
    """All integers k with P_m(k) = n, as a set.

    Inverts the quadratic: k = ((m-4) +- sqrt((m-4)^2 + 8(m-2)n)) / (2(m-2)).
    A root counts only when the discriminant is a perfect square and the
    division is exact.  Empty set for n < 0.

    Raises:
        UnsupportedOrderError: m < 3.
    """
    if m < 3:
        raise UnsupportedOrderError(f"polygonal order must be >= 3, got m={m}")
    if n < 0:
        return set()
    disc = (m - 4) * (m - 4) + 8 * (m - 2) * n
    r = isqrt(disc)
    if r * r != disc:
        return set()
    roots = set()
    for s in (r, -r):
        num = (m - 4) + s
        den = 2 * (m - 2)
        if num % den == 0:
            roots.add(num // den)
    return roots


def triangular_sign(k: int) -> int:
    """(-1)^(P_3(-k)) = (-1)^((k^2 - k)/2), the sign weight with period 4.

    For k = 0, 1, 2, 3 the signs are +1, +1, -1, -1, repeating with
    period 4 in both directions.
    """
    return -1 if (k * k - k) // 2 % 2 else 1
