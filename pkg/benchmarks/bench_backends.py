"""Benchmark the numba kernels against the pure-numpy fallback.

Times the three hot kernels (divisor sieve, shifted weighted sum, square
scatter counts) under both backends.  The first call per backend is a
warm-up and is excluded, so JIT compilation and cache loading do not
pollute the numbers.

Usage:
    python benchmarks/bench_backends.py [--limit N] [--n-max N] [--repeats R]
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from polysigma import WeightMode, build_sigma_table, enumerate_upto
from polysigma import kernels

BACKENDS = ("numpy", "numba")


def time_call(fn, repeats: int) -> tuple[float, float]:
    """(mean, std) of wall seconds over the repeats, one warm-up excluded."""
    fn()
    samples = []
    for _ in range(repeats):
        started = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - started)
    mean = statistics.mean(samples)
    std = statistics.stdev(samples) if len(samples) > 1 else 0.0
    return mean, std


def build_cases(limit: int, n_max: int):
    table = build_sigma_table(n_max)
    offsets = []
    weights = []
    for k, off in enumerate_upto(3, n_max - 1):
        offsets.append(off)
        weights.append(-1 if k % 2 else 1)
    offsets = np.asarray(offsets, dtype=np.int64)
    weights = np.asarray(weights, dtype=np.int64)
    return [
        ("sigma_sieve", lambda: kernels.sigma_sieve(limit)),
        (
            "shifted_weighted_sum",
            lambda: kernels.shifted_weighted_sum(
                table.sigma_odd, offsets, weights, n_max
            ),
        ),
        (
            "square_shift_counts",
            lambda: kernels.square_shift_counts(offsets, 2, n_max),
        ),
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--limit", type=int, default=2_000_000,
                        help="sieve limit (default: 2e6)")
    parser.add_argument("--n-max", type=int, default=200_000,
                        help="profile length for the sum kernels (default: 2e5)")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timed repeats per case (default: 5)")
    args = parser.parse_args()

    cases = build_cases(args.limit, args.n_max)
    print(f"limit={args.limit} n_max={args.n_max} repeats={args.repeats}")
    print(f"{'kernel':<22} {'backend':<8} {'mean':>10} {'std':>10}")
    means: dict[tuple[str, str], float] = {}
    for name, fn in cases:
        for backend in BACKENDS:
            kernels.set_backend(backend)
            mean, std = time_call(fn, args.repeats)
            means[(name, backend)] = mean
            print(f"{name:<22} {backend:<8} {mean * 1e3:>8.2f}ms {std * 1e3:>8.2f}ms")
    kernels.set_backend(None)
    print()
    for name, _ in cases:
        ratio = means[(name, "numpy")] / means[(name, "numba")]
        print(f"{name:<22} numba speedup over numpy: {ratio:.1f}x")


if __name__ == "__main__":
    main()
