"""Verify the identity through three mutually independent routes.

1. direct: sum the integers n!/D(alpha) over all cycle types and divide by n!.
2. poly:   the coefficient of x^n in (x + x^2/2 + ... + x^n/n)^n must be 1.
3. perm:   tally all n! permutations by cycle type; each tally must equal
           n!/D(alpha) (only feasible for small n).

The routes share no code beyond the cycle-type enumeration, so agreement is
strong evidence, not circular reasoning.
"""

from math import factorial

from unitsum import (
    base_polynomial,
    census,
    coefficient,
    cycle_count,
    enumerate_cycle_types,
    power_truncated,
    reciprocal_sum,
)

for n in range(1, 9):
    direct = reciprocal_sum(n)
    poly = coefficient(power_truncated(base_polynomial(n), n, n), n)
    tally = census(n)
    perm_ok = tally == {
        alpha: cycle_count(n, alpha) for alpha in enumerate_cycle_types(n)
    }
    assert sum(tally.values()) == factorial(n)
    print(
        f"n={n}  direct={direct}  poly_coefficient={poly}  "
        f"perm_census={'match' if perm_ok else 'MISMATCH'}"
    )
    assert direct == 1 and poly == 1 and perm_ok

print("\nall three routes agree for n = 1..8")
