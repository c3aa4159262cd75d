"""Exception types shared across the package."""


class PolysigmaError(Exception):
    """Base class for domain errors raised by this package."""


class UnsupportedOrderError(PolysigmaError, ValueError):
    """Polygonal order m < 3, for which the quadratic machinery is undefined."""


class DivergenceError(PolysigmaError, ValueError):
    """Convolution requested for an order whose support is infinite.

    Order 2 gives P_2(k) = k (every integer), order 1 a downward-opening
    parabola; in both cases the sum over k has infinitely many nonzero
    terms and cannot be evaluated.
    """


class OutOfRangeError(PolysigmaError, ValueError):
    """Argument exceeds the range a precomputed table covers."""


class CapacityError(PolysigmaError, OverflowError):
    """Requested table would not fit exact 64-bit integer arithmetic."""


class AmbiguityError(PolysigmaError, RuntimeError):
    """Two index witnesses of the same polygonal number demand conflicting residues."""
