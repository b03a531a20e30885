"""Print unit-fraction decompositions of 1 for a range of weights.

Every weight n yields a list of integers whose reciprocals sum to exactly 1;
repetitions are allowed (and frequent).  The classics 1 = 1/2 + 1/3 + 1/6
and 1 = 1/3 + 1/4 + 1/4 + 1/8 + 1/24 appear at n = 3 and n = 4.
"""

from fractions import Fraction

from unitsum import unit_fraction_decomposition

for n in range(1, 11):
    denominators = sorted(unit_fraction_decomposition(n))
    assert sum(Fraction(1, d) for d in denominators) == 1
    terms = " + ".join(f"1/{d}" for d in denominators)
    print(f"n={n:>2}  ({len(denominators):>2} terms)  1 = {terms}")
