"""Hot numeric kernels, with a numba backend and a pure-numpy fallback.

Three inner loops dominate every large scan this package runs:

* ``sigma_sieve``          -- divisor-marking sieve for sigma_odd / sigma
* ``shifted_weighted_sum`` -- totals[n] = sum_i w[i] * values[n - off[i]]
* ``square_shift_counts``  -- counts[n] = #{(l, j): scale*l^2 + shifts[j] = n}

Both backends produce bit-identical int64 arrays.  Selection order:

1. an explicit :func:`set_backend` call (tests, benchmarks),
2. the ``POLYSIGMA_BACKEND`` environment variable (``numba`` or ``numpy``),
3. auto: numba if it imports, numpy otherwise.
"""

from __future__ import annotations

import importlib
import os

_ENV_VAR = "POLYSIGMA_BACKEND"
_VALID = ("numba", "numpy")

_forced: str | None = None
_active: object | None = None
_active_name: str | None = None


def set_backend(name: str | None) -> None:
    """Force a backend by name, overriding the environment; None re-enables auto."""
    global _forced, _active, _active_name
    if name is not None and name not in _VALID:
        raise ValueError(f"unknown backend {name!r}; expected one of {_VALID}")
    _forced = name
    _active = None
    _active_name = None


def active_backend() -> str:
    """Name of the backend that kernel calls will use ('numba' or 'numpy')."""
    _resolve()
    assert _active_name is not None
    return _active_name


def _resolve():
    global _active, _active_name
    if _active is not None:
        return _active

    choice = _forced or os.environ.get(_ENV_VAR, "").strip().lower() or "auto"
    if choice not in _VALID + ("auto",):
        raise ValueError(
            f"{_ENV_VAR}={choice!r} not understood; expected 'numba' or 'numpy'"
        )

    if choice in ("numba", "auto"):
        try:
            _active = importlib.import_module(f"{__name__}.numba_backend")
            _active_name = "numba"
            return _active
        except ImportError:
            if choice == "numba":
                raise
    _active = importlib.import_module(f"{__name__}.numpy_backend")
    _active_name = "numpy"
    return _active


def sigma_sieve(limit):
    """Arrays (sigma_odd, sigma) of length limit+1; index 0 is 0."""
    return _resolve().sigma_sieve(limit)


def shifted_weighted_sum(values, offsets, weights, n_max):
    """totals[n] = sum_i weights[i] * values[n - offsets[i]] for 0 <= n <= n_max.

    Terms with n - offsets[i] < 1 contribute nothing, matching the
    convention that the summed function vanishes on nonpositive arguments.
    """
    return _resolve().shifted_weighted_sum(values, offsets, weights, n_max)


def square_shift_counts(shifts, scale, n_max):
    """counts[n] = #{(l, j) : l >= 1, scale*l*l + shifts[j] = n} for 0 <= n <= n_max."""
    return _resolve().square_shift_counts(shifts, scale, n_max)
