"""Odd-divisor-sum convolutions over generalized polygonal numbers.

Exact integer tooling for sums of the form sum_k w(k) sigma_odd(n - P_m(k)),
the representation counts that carry their parity, and scans that verify
three congruence families over ranges of m and n.
"""

from .arith import (
    PartitionTable,
    SigmaTable,
    build_partition_table,
    build_sigma_table,
    is_square_or_twice_square,
    square_or_twice_square_mask,
)
from .convolution import (
    ConvolutionValue,
    WeightMode,
    convolve_sigma_odd,
    convolution_profile,
    euler_partition_residual,
    euler_sigma_residual,
)
from .errors import (
    AmbiguityError,
    CapacityError,
    DivergenceError,
    OutOfRangeError,
    PolysigmaError,
    UnsupportedOrderError,
)
from .polygonal import (
    enumerate_upto,
    polygonal_index,
    polygonal_value,
    triangular_sign,
)
from .representations import (
    RepresentationWitnesses,
    count_representations,
    representation_count_profile,
)
from .verify import (
    CongruenceCase,
    CongruenceReport,
    Conjecture,
    Counterexample,
    check_congruence,
    expected_residue,
    holds_set,
    scan_iff,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguityError",
    "CapacityError",
    "CongruenceCase",
    "CongruenceReport",
    "Conjecture",
    "ConvolutionValue",
    "Counterexample",
    "DivergenceError",
    "OutOfRangeError",
    "PartitionTable",
    "PolysigmaError",
    "RepresentationWitnesses",
    "SigmaTable",
    "UnsupportedOrderError",
    "WeightMode",
    "build_partition_table",
    "build_sigma_table",
    "check_congruence",
    "convolution_profile",
    "convolve_sigma_odd",
    "count_representations",
    "enumerate_upto",
    "euler_partition_residual",
    "euler_sigma_residual",
    "expected_residue",
    "holds_set",
    "is_square_or_twice_square",
    "polygonal_index",
    "polygonal_value",
    "representation_count_profile",
    "scan_iff",
    "square_or_twice_square_mask",
    "triangular_sign",
]
