from math import factorial

import pytest

from unitsum.identity import cycle_count
from unitsum.partitions import (
    MultiplicityVector,
    UnsupportedRangeError,
    enumerate_cycle_types,
    is_member,
)
from unitsum.permutations import Permutation, census, cycle_type


def test_cycle_type_examples():
    assert cycle_type(Permutation((1, 2, 3))).dense() == (3, 0, 0)
    assert cycle_type(Permutation((2, 3, 1))).dense() == (0, 0, 1)
    assert cycle_type(Permutation((2, 1, 3, 4))).dense() == (2, 1, 0, 0)


def test_cycle_type_is_member():
    for image in [(1,), (2, 1), (3, 1, 2), (4, 3, 2, 1), (2, 3, 4, 5, 1)]:
        alpha = cycle_type(Permutation(image))
        assert is_member(len(image), alpha.dense())


def test_malformed_permutations_rejected():
    for image in [(1, 1, 3), (0, 1), (2, 3), ()]:
        with pytest.raises(ValueError):
            Permutation(image)


def test_census_small_values():
    assert {a.dense(): c for a, c in census(1).items()} == {(1,): 1}
    assert {a.dense(): c for a, c in census(3).items()} == {
        (3, 0, 0): 1,
        (1, 1, 0): 3,
        (0, 0, 1): 2,
    }
    six = {a.dense(): c for a, c in census(6).items()}
    assert six[(1, 0, 0, 0, 1, 0)] == 144


def test_census_range():
    with pytest.raises(UnsupportedRangeError):
        census(10)
    with pytest.raises(UnsupportedRangeError):
        census(0)


@pytest.mark.parametrize("n", range(1, 7))
def test_census_matches_cycle_counts(n):
    tally = census(n)
    expected_keys = set(enumerate_cycle_types(n))
    assert set(tally) == expected_keys
    for alpha in expected_keys:
        assert tally[alpha] == cycle_count(n, alpha)
    assert sum(tally.values()) == factorial(n)
