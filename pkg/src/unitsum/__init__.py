"""Exact unit-fraction decompositions of 1 indexed by cycle types.

For every positive integer n, the reciprocals of D(alpha) = prod a_j! j^a_j,
taken over all multiplicity vectors alpha with sum(j * a_j) = n, add up to
exactly 1.  This package enumerates the cycle types, computes the
denominators with arbitrary-precision arithmetic, and verifies the identity
through three independent routes: direct rational summation, coefficient
extraction from a truncated power series, and a brute-force permutation
census.
"""

from .identity import (
    InternalConsistencyError,
    TableRow,
    cycle_count,
    denominator,
    reciprocal_sum,
    render_table,
    unit_fraction_decomposition,
)
from .partitions import (
    DEFAULT_MAX_N,
    MultiplicityVector,
    UnsupportedRangeError,
    enumerate_cycle_types,
    is_member,
    partition_count,
)
from .permutations import ORACLE_MAX_N, Permutation, census, cycle_type
from .series import (
    DensePolynomial,
    base_polynomial,
    coefficient,
    derivative_coefficient,
    enumerate_weak_compositions,
    formal_derivative,
    multinomial_coefficient,
    multiply_truncated,
    power_truncated,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_N",
    "ORACLE_MAX_N",
    "DensePolynomial",
    "InternalConsistencyError",
    "MultiplicityVector",
    "Permutation",
    "TableRow",
    "UnsupportedRangeError",
    "base_polynomial",
    "census",
    "coefficient",
    "cycle_count",
    "cycle_type",
    "denominator",
    "derivative_coefficient",
    "enumerate_cycle_types",
    "enumerate_weak_compositions",
    "formal_derivative",
    "is_member",
    "multinomial_coefficient",
    "multiply_truncated",
    "partition_count",
    "power_truncated",
    "reciprocal_sum",
    "render_table",
    "unit_fraction_decomposition",
]
