"""Brute-force cycle-type census over all permutations of {1..n}.

Third verification route: tallying the n! permutations by cycle type must
reproduce the counts n!/D(alpha) for every cycle type of weight n.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .partitions import MultiplicityVector, UnsupportedRangeError

ORACLE_MAX_N = 9  # 9! = 362880 permutations; full enumeration beyond that is pointless


@dataclass(frozen=True, slots=True)
class Permutation:
    """One-line notation: image[i] is where i+1 is sent, values in 1..n."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if n < 1 or sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"{self.image} is not a permutation of 1..{n}")


def _cycle_parts(image: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Sparse (cycle length, count) pairs of a trusted one-line image."""
    n = len(image)
    seen = [False] * n
    lengths: Counter[int] = Counter()
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = image[i] - 1
            length += 1
        lengths[length] += 1
    return tuple(sorted(lengths.items()))


def cycle_type(p: Permutation) -> MultiplicityVector:
    """Multiplicity vector of p's disjoint cycle decomposition."""
    return MultiplicityVector(len(p.image), _cycle_parts(p.image))


def census(n: int) -> dict[MultiplicityVector, int]:
    """Tally all n! permutations of {1..n} by cycle type.

    The key set is exactly the cycle types of weight n and each value is
    n!/D(alpha); values sum to n!.
    """
    if not 1 <= n <= ORACLE_MAX_N:
        raise UnsupportedRangeError(
            f"oracle range exceeded: n={n} not in 1..{ORACLE_MAX_N}"
        )
    tally: Counter[tuple[tuple[int, int], ...]] = Counter()
    for image in itertools.permutations(range(1, n + 1)):
        tally[_cycle_parts(image)] += 1
    return {MultiplicityVector(n, parts): count for parts, count in tally.items()}
