"""Walk through the n = 6 example end to end.

Enumerate all cycle types of weight 6, show each denominator
D(alpha) = prod a_j! * j^a_j, and add the reciprocals up to exactly 1.
"""

from fractions import Fraction

from unitsum import denominator, enumerate_cycle_types, reciprocal_sum

N = 6

print(f"cycle types of weight {N} and their denominators:\n")
print("  " + " ".join(f"a{j}" for j in range(1, N + 1)) + "  D(alpha)")

running = Fraction(0)
for alpha in enumerate_cycle_types(N):
    d = denominator(alpha)
    running += Fraction(1, d)
    dense = "  ".join(str(c) for c in alpha.dense())
    print(f"  {dense}  {d:>4}   running sum = {running}")

print(f"\nsum of reciprocals: {running}")
print(f"reciprocal_sum({N}) on the integer fast path: {reciprocal_sum(N)}")
assert running == reciprocal_sum(N) == 1
