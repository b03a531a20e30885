"""Truncated formal power series over exact rationals.

Second, independent route to the identity: the coefficient of x^n in
(x + x^2/2 + ... + x^n/n)^n is 1.  Also carries the supporting pieces:
formal derivatives (coefficient extraction as a scaled derivative at 0),
multinomial coefficients and weak-composition enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence

_ZERO = Fraction(0)


@dataclass(frozen=True, slots=True)
class DensePolynomial:
    """Exact-rational coefficients indexed 0..cap; index j holds the x^j term.

    All arithmetic discards terms above cap.  Trailing zeros are allowed,
    so the degree may be smaller than the cap.
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("need at least the constant coefficient")

    @classmethod
    def of(cls, coefficients: Sequence, cap: int | None = None) -> "DensePolynomial":
        """Build from any rational-like sequence, zero-padding up to cap."""
        coeffs = [Fraction(c) for c in coefficients]
        if cap is not None:
            if cap < 0:
                raise ValueError("cap must be nonnegative")
            del coeffs[cap + 1 :]
            coeffs.extend([_ZERO] * (cap + 1 - len(coeffs)))
        return cls(tuple(coeffs) or (_ZERO,))

    @property
    def cap(self) -> int:
        return len(self.coefficients) - 1


def base_polynomial(n: int) -> DensePolynomial:
    """x + x^2/2 + ... + x^n/n with cap n."""
    if n < 1:
        raise ValueError("n must be positive")
    return DensePolynomial((_ZERO,) + tuple(Fraction(1, j) for j in range(1, n + 1)))


def multiply_truncated(
    p: DensePolynomial, q: DensePolynomial, cap: int
) -> DensePolynomial:
    """Convolution of p and q, keeping coefficients of degree <= cap."""
    out = [_ZERO] * (cap + 1)
    pc, qc = p.coefficients, q.coefficients
    for i in range(min(len(pc), cap + 1)):
        a = pc[i]
        if not a:
            continue
        for j in range(min(len(qc), cap + 1 - i)):
            b = qc[j]
            if b:
                out[i + j] += a * b
    return DensePolynomial(tuple(out))


def power_truncated(p: DensePolynomial, e: int, cap: int) -> DensePolynomial:
    """p^e truncated at cap, by repeated squaring with per-step truncation."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = DensePolynomial.of([1], cap)
    base = DensePolynomial.of(p.coefficients, cap)
    while e:
        if e & 1:
            result = multiply_truncated(result, base, cap)
        e >>= 1
        if e:
            base = multiply_truncated(base, base, cap)
    return result


def coefficient(p: DensePolynomial, j: int) -> Fraction:
    """The coefficient of x^j, read directly from storage."""
    if not 0 <= j <= p.cap:
        raise IndexError(f"coefficient index {j} out of range 0..{p.cap}")
    return p.coefficients[j]


def formal_derivative(p: DensePolynomial) -> DensePolynomial:
    """Coefficient-shift derivative: result[k] = (k+1) * p[k+1], cap drops by one."""
    if p.cap == 0:
        return DensePolynomial((_ZERO,))
    return DensePolynomial(
        tuple((k + 1) * a for k, a in enumerate(p.coefficients[1:]))
    )


def derivative_coefficient(p: DensePolynomial, j: int) -> Fraction:
    """Extract the coefficient of x^j as p's j-th derivative at 0 over j!.

    Agrees with coefficient(p, j) by construction; kept as the executable
    witness of that fact rather than as the fast path.
    """
    if not 0 <= j <= p.cap:
        raise IndexError(f"coefficient index {j} out of range 0..{p.cap}")
    for _ in range(j):
        p = formal_derivative(p)
    return p.coefficients[0] / factorial(j)


def multinomial_coefficient(m: int, alpha: Sequence[int]) -> int:
    """m!/prod(a_j!) for a weak composition alpha of m."""
    if any(a < 0 for a in alpha):
        raise ValueError("multiplicities must be nonnegative")
    if sum(alpha) != m:
        raise ValueError(f"weight mismatch: sum(alpha)={sum(alpha)} != m={m}")
    out = factorial(m)
    for a in alpha:
        out //= factorial(a)
    return out


def enumerate_weak_compositions(n_vars: int, m: int) -> Iterator[tuple[int, ...]]:
    """All tuples of n_vars nonnegative integers summing to m, each once.

    Count is C(m + n_vars - 1, n_vars - 1).
    """
    if n_vars < 1:
        raise ValueError("n_vars must be positive")
    if n_vars == 1:
        yield (m,)
        return
    for head in range(m, -1, -1):
        for tail in enumerate_weak_compositions(n_vars - 1, m - head):
            yield (head,) + tail
