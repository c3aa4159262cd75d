"""Congruence families over polygonal offsets: point checks and iff scans.

Three families, numbered as in the CLI:

  1: sum_k sigma_odd(n - P_m(k))                  vs n or 0  (mod 2)
  2: sum_k sigma_odd(n - P_5(k))                  vs n or 0  (mod m)
  3: sum_k (-1)^(P_3(-k)) sigma_odd(n - P_5(k))   vs +-n or 0 (mod m)

The target residue depends on n: it is n (carrying the witness sign in
family 3) when n is itself an offset value, and 0 otherwise.  A check
walks n = 1..n_max and reports the least failing n, if any; a scan runs
one check per m over an inclusive range and collects the set of m for
which the family holds.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import IntEnum
from typing import Optional

import numpy as np

from .arith import SigmaTable
from .convolution import WeightMode, convolution_profile
from .errors import AmbiguityError, DivergenceError, OutOfRangeError
from .polygonal import enumerate_upto, polygonal_index, triangular_sign


class Conjecture(IntEnum):
    I = 1
    II = 2
    III = 3


@dataclass(frozen=True)
class CongruenceCase:
    """One congruence family instance.

    For family 1, m is the polygonal order and the modulus is fixed at 2.
    For families 2 and 3, m is the modulus and the order is fixed at 5.
    """

    conjecture: Conjecture
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.conjecture is Conjecture.I and self.m < 3:
            raise DivergenceError(
                f"family 1 with m={self.m}: offset sum diverges, no case exists"
            )

    @property
    def polygonal_order(self) -> int:
        return self.m if self.conjecture is Conjecture.I else 5

    @property
    def modulus(self) -> int:
        return 2 if self.conjecture is Conjecture.I else self.m

    @property
    def weight_mode(self) -> WeightMode:
        if self.conjecture is Conjecture.III:
            return WeightMode.TRIANGULAR_SIGN
        return WeightMode.UNSIGNED


@dataclass(frozen=True)
class Counterexample:
    """The failed congruence at one n, self-verifying.

    lhs_value is the exact offset sum and required_residue the target
    residue; the defect is lhs_value % modulus != required_residue.
    """

    n: int
    lhs_value: int
    required_residue: int
    modulus: int


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of checking one case over n = 1..n_max.

    trivial_modulus marks m=1 cases of families 2 and 3, where every
    congruence holds mod 1 and the check says nothing.
    """

    case: CongruenceCase
    n_max: int
    holds: bool
    minimal_counterexample: Optional[Counterexample]
    trivial_modulus: bool = False


def expected_residue(case: CongruenceCase, n: int) -> tuple[int, int]:
    """Target (residue, modulus) for one n under the given case.

    Family 3 derives the sign from the witness index j with P_5(j) = n;
    if two witnesses disagreed on the residue this would be ambiguous and
    is raised rather than resolved silently (P_5 is injective over the
    integers, so this is defensive).

    Raises:
        ValueError: modulus 1 (every congruence holds; nothing to target).
        AmbiguityError: conflicting family-3 witness residues.
    """
    modulus = case.modulus
    if modulus == 1:
        raise ValueError("modulus 1 is trivial: every integer is congruent to 0")
    if case.conjecture is Conjecture.I:
        member = polygonal_index(case.m, n)
        return (n % 2 if member else 0, 2)
    if case.conjecture is Conjecture.II:
        member = polygonal_index(5, n)
        return (n % modulus if member else 0, modulus)
    witnesses = polygonal_index(5, n)
    if not witnesses:
        return (0, modulus)
    residues = {(triangular_sign(j) * n) % modulus for j in witnesses}
    if len(residues) > 1:
        raise AmbiguityError(
            f"n={n} has pentagonal witnesses with conflicting residues {residues}"
        )
    return (residues.pop(), modulus)


def _required_profile(case: CongruenceCase, n_max: int) -> np.ndarray:
    """Target residues for n = 0..n_max as an int64 array (entry 0 unused)."""
    modulus = case.modulus
    required = np.zeros(n_max + 1, dtype=np.int64)
    if case.conjecture is not Conjecture.III:
        for _, value in enumerate_upto(case.polygonal_order, n_max):
            required[value] = value % modulus
        return required
    seen: dict[int, int] = {}
    for k, value in enumerate_upto(5, n_max):
        sign = triangular_sign(k)
        if value in seen and seen[value] != sign:
            if (sign * value) % modulus != (seen[value] * value) % modulus:
                raise AmbiguityError(
                    f"n={value} has pentagonal witnesses with conflicting signs"
                )
            continue
        seen[value] = sign
        required[value] = (sign * value) % modulus
    return required


def check_congruence(
    case: CongruenceCase,
    n_max: int,
    table: SigmaTable,
    _lhs: Optional[np.ndarray] = None,
) -> CongruenceReport:
    """Check one case for n = 1..n_max; report the least failure if any.

    The offset-sum profile is evaluated in bulk, the target residues are
    marked from one enumeration pass, and the first mismatch wins.  _lhs
    lets a scan share one profile across cases with the same left side.

    Raises:
        OutOfRangeError: n_max exceeds the table limit.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > table.limit:
        raise OutOfRangeError(f"n_max={n_max} exceeds table limit {table.limit}")
    if case.modulus == 1:
        return CongruenceReport(
            case=case,
            n_max=n_max,
            holds=True,
            minimal_counterexample=None,
            trivial_modulus=True,
        )
    lhs = _lhs
    if lhs is None:
        lhs = convolution_profile(table, case.polygonal_order, case.weight_mode, n_max)
    required = _required_profile(case, n_max)
    mismatch = np.nonzero(lhs[1:] % case.modulus != required[1:])[0]
    if mismatch.size == 0:
        return CongruenceReport(
            case=case, n_max=n_max, holds=True, minimal_counterexample=None
        )
    n_star = int(mismatch[0]) + 1
    counterexample = Counterexample(
        n=n_star,
        lhs_value=int(lhs[n_star]),
        required_residue=int(required[n_star]),
        modulus=case.modulus,
    )
    return CongruenceReport(
        case=case, n_max=n_max, holds=False, minimal_counterexample=counterexample
    )


def scan_iff(
    conjecture: Conjecture,
    m_range: tuple[int, int],
    n_max: int,
    table: SigmaTable,
    threads: Optional[int] = None,
) -> list[CongruenceReport]:
    """Check every m in the inclusive range; reports in ascending m.

    Families 2 and 3 share one offset-sum profile across all m (the left
    side does not depend on the modulus).  Family 1 needs one profile per
    order; those checks run on a thread pool when threads > 1.  Output is
    deterministic regardless of thread count.
    """
    m_lo, m_hi = m_range
    if m_lo > m_hi:
        raise ValueError(f"empty m range [{m_lo}, {m_hi}]")
    cases = [CongruenceCase(conjecture, m) for m in range(m_lo, m_hi + 1)]
    if conjecture is not Conjecture.I:
        shared = convolution_profile(
            table, 5, cases[0].weight_mode, n_max
        )
        return [check_congruence(c, n_max, table, _lhs=shared) for c in cases]
    if threads is None:
        threads = os.cpu_count() or 1
    if threads <= 1 or len(cases) == 1:
        return [check_congruence(c, n_max, table) for c in cases]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda c: check_congruence(c, n_max, table), cases))


def holds_set(reports: list[CongruenceReport]) -> set[int]:
    """The m whose report holds, excluding trivial modulus-1 cases."""
    return {
        r.case.m for r in reports if r.holds and not r.trivial_modulus
    }
