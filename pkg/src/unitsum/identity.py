"""Denominators, the exact reciprocal sum, and unit-fraction decompositions.

For a cycle type alpha of weight n the denominator is
D(alpha) = prod_j a_j! * j^a_j, and n!/D(alpha) is the number of
permutations of n symbols with that cycle type.  Summing 1/D(alpha) over
all cycle types of weight n gives exactly 1.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .partitions import (
    DEFAULT_MAX_N,
    MultiplicityVector,
    _check_range,
    enumerate_cycle_types,
)


class InternalConsistencyError(RuntimeError):
    """A denominator failed to divide n!; indicates a bug, never bad input."""


def denominator(alpha: MultiplicityVector) -> int:
    """D(alpha) = prod over parts j with multiplicity m of m! * j^m."""
    d = 1
    for j, m in alpha.parts:
        d *= factorial(m) * j**m
    return d


def cycle_count(n: int, alpha: MultiplicityVector) -> int:
    """Number of permutations of n symbols with cycle type alpha: n!/D(alpha)."""
    q, r = divmod(factorial(n), denominator(alpha))
    if r:
        raise InternalConsistencyError(
            f"D{alpha.dense()} = {denominator(alpha)} does not divide {n}!"
        )
    return q


def _suffix_census_sum(n: int, fact: list[int], first: int) -> int:
    """Sum of n!/D(alpha) over all alpha of weight n with a_1 == first."""
    f_n = fact[n]

    def walk(j: int, rem: int, d: int) -> int:
        if rem == 0:
            return f_n // d
        if j > rem:
            return 0
        total = walk(j + 1, rem, d)
        for m in range(1, rem // j + 1):
            total += walk(j + 1, rem - j * m, d * fact[m] * j**m)
        return total

    return walk(2, n - first, fact[first])


def integer_census_sum(n: int, max_n: int = DEFAULT_MAX_N, threads: int = 1) -> int:
    """Sum of n!/D(alpha) over all cycle types of weight n.

    Equals n! exactly; callers compare rather than assume.  With threads > 1
    the cycle-type space is sharded by the multiplicity of part 1 and the
    shard sums are added in a fixed order; integer addition commutes, so the
    result is identical for every thread count.
    """
    _check_range(n, max_n)
    fact = [factorial(i) for i in range(n + 1)]
    firsts = range(n, -1, -1)
    if threads <= 1:
        return sum(_suffix_census_sum(n, fact, a) for a in firsts)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(lambda a: _suffix_census_sum(n, fact, a), firsts))


def reciprocal_sum(n: int, max_n: int = DEFAULT_MAX_N, threads: int = 1) -> Fraction:
    """Exact value of sum over cycle types alpha of 1/D(alpha).

    Computed on the integer fast path: add up the counts n!/D(alpha) and
    divide once by n!.  Returns the reduced fraction instead of asserting,
    so callers and tests can detect a violation of the identity.
    """
    return Fraction(integer_census_sum(n, max_n, threads), factorial(n))


def unit_fraction_decomposition(n: int, max_n: int = DEFAULT_MAX_N) -> list[int]:
    """The multiset {D(alpha)} in enumeration order; reciprocals sum to 1.

    Repetitions are preserved (for n = 6 the list repeats 48, 18, 8 and 6)
    and the i-th entry matches the i-th row of render_table(n).
    """
    return [denominator(alpha) for alpha in enumerate_cycle_types(n, max_n)]


@dataclass(frozen=True, slots=True)
class TableRow:
    alpha: MultiplicityVector
    denominator: int


def render_table(n: int, max_n: int = DEFAULT_MAX_N) -> list[TableRow]:
    """One row per cycle type in enumeration order, with its denominator."""
    return [
        TableRow(alpha, denominator(alpha))
        for alpha in enumerate_cycle_types(n, max_n)
    ]
