"""Cycle-type multiplicity vectors: enumeration, membership, counting.

A multiplicity vector of weight n is a tuple (a_1, ..., a_n) of nonnegative
integers with sum(j * a_j) == n; a_j counts the parts of size j, so these
are exactly the integer partitions of n in multiplicity notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_MAX_N = 80


class UnsupportedRangeError(ValueError):
    """The requested weight is outside the supported range."""


def _check_range(n: int, max_n: int) -> None:
    if not 1 <= n <= max_n:
        raise UnsupportedRangeError(f"n={n} is out of supported range 1..{max_n}")


@dataclass(frozen=True, slots=True)
class MultiplicityVector:
    """A cycle type of weight ``n``, stored sparsely.

    ``parts`` holds (part, multiplicity) pairs with multiplicity >= 1 and
    parts strictly increasing; entries with multiplicity 0 are omitted.
    The defining constraint is sum(part * mult) == n.
    """

    n: int
    parts: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, n: int, counts: Sequence[int]) -> "MultiplicityVector":
        """Build from a dense length-n count sequence, validating membership."""
        if n < 1:
            raise ValueError(f"weight must be positive, got {n}")
        if len(counts) != n:
            raise ValueError(f"expected {n} counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValueError("multiplicities must be nonnegative")
        weight = sum(j * c for j, c in enumerate(counts, start=1))
        if weight != n:
            raise ValueError(f"counts have weight {weight}, expected {n}")
        parts = tuple((j, c) for j, c in enumerate(counts, start=1) if c)
        return cls(n, parts)

    def dense(self) -> tuple[int, ...]:
        """Dense view (a_1, ..., a_n); inverse of from_counts."""
        out = [0] * self.n
        for j, m in self.parts:
            out[j - 1] = m
        return tuple(out)

    def total_parts(self) -> int:
        """Number of parts of the underlying partition, sum of multiplicities."""
        return sum(m for _, m in self.parts)


def is_member(n: int, counts: Sequence[int]) -> bool:
    """True iff counts is a length-n multiplicity vector of weight n.

    Total function: never raises, any sequence of integers is a valid query.
    """
    if n < 1 or len(counts) != n:
        return False
    if any(c < 0 for c in counts):
        return False
    return sum(j * c for j, c in enumerate(counts, start=1)) == n


# opcodes for the iterative depth-first walk
_ENTER, _PICK, _UNPICK = 0, 1, 2


def enumerate_cycle_types(
    n: int, max_n: int = DEFAULT_MAX_N
) -> Iterator[MultiplicityVector]:
    """Yield every multiplicity vector of weight n exactly once.

    Order is strictly lexicographically decreasing on the dense vector
    (a_1, a_2, ..., a_n).  Stream length equals partition_count(n).  The
    walk keeps an explicit stack, so memory stays small and no vector set
    is ever materialized.
    """
    _check_range(n, max_n)
    return _enumerate(n)


def _enumerate(n: int) -> Iterator[MultiplicityVector]:
    chosen: list[tuple[int, int]] = []
    # Descend part by part, trying the multiplicity of the smallest open
    # part from high to low; that realizes dense-lex-decreasing order.
    stack: list[tuple[int, int, int]] = [(_ENTER, 1, n)]
    while stack:
        op, j, arg = stack.pop()  # arg: remainder for _ENTER, multiplicity for _PICK
        if op == _ENTER:
            if arg == 0:
                yield MultiplicityVector(n, tuple(chosen))
                continue
            if j > arg:
                continue  # parts larger than the remainder cannot finish it
            stack.append((_ENTER, j + 1, arg))  # multiplicity 0, visited last
            for m in range(1, arg // j + 1):  # larger m ends up nearer the top
                stack.append((_UNPICK, j, m))
                stack.append((_ENTER, j + 1, arg - j * m))
                stack.append((_PICK, j, m))
        elif op == _PICK:
            chosen.append((j, arg))
        else:
            chosen.pop()


def partition_count(n: int, max_n: int = DEFAULT_MAX_N) -> int:
    """Partition number p(n) by Euler's pentagonal-number recurrence.

    Independent of the enumerator, so it can cross-check stream lengths:
    p(n) = sum_{k>=1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
    """
    if not 0 <= n <= max_n:
        raise UnsupportedRangeError(f"n={n} is out of supported range 0..{max_n}")
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]
