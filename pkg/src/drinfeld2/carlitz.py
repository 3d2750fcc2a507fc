"""Carlitz-module baseline over F2[t]: exact denominators with known values.

Over the rational function field the exponential denominators have the
classical closed forms

    d_n = [n] d_{n-1}^2 = [n][n-1]^2 ... [1]^(2^(n-1)),
    l_n = [n][n-1] ... [1],          [n] = t^(2^n) + t,

and d_n is also the product of all monic polynomials of degree n.  The
module drives the same BinaryPoly substrate as the rest of the package
against a case where every answer is known independently, so it acts as
an oracle for the shared machinery.

The action generator is taken to be t + tau: the functional equation
e(tz) = t e(z) + e(z)^2 pins the tau-coefficient to 1, and the
verification report records that reading.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import VerificationError
from .f2poly import BinaryPoly

MONIC_PRODUCT_BUDGET = 6

GENERATOR_NOTE = "generator read as t + tau (coefficient of tau equal to 1)"


@dataclass(frozen=True)
class CarlitzBracket:
    """The bracket [n] = t^(2^n) + t, with its chain identity built in."""

    n: int
    value: BinaryPoly

    @classmethod
    def of(cls, n: int) -> CarlitzBracket:
        if n < 0:
            raise ValueError("bracket index must be nonnegative")
        return cls(n, bracket(n))


def bracket(n: int) -> BinaryPoly:
    """[n] = t^(2^n) + t; zero for n = 0."""
    if n < 0:
        raise ValueError("bracket index must be nonnegative")
    if n == 0:
        return BinaryPoly.zero()
    return BinaryPoly((1 << (1 << n)) ^ 2)


def exp_denominator(n: int) -> BinaryPoly:
    """d_n, via the recursion, cross-checked against the closed product."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    d = BinaryPoly.one()
    for i in range(1, n + 1):
        d = bracket(i) * d.square()
    closed = BinaryPoly.one()
    for i in range(1, n + 1):
        closed = closed * bracket(i).frobenius(n - i)
    if d != closed:
        raise VerificationError(f"d_{n}: recursion and closed product differ")
    return d


def log_denominator(n: int) -> BinaryPoly:
    """l_n = [n][n-1]...[1] (the signs vanish in characteristic 2)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    ell = BinaryPoly.one()
    for i in range(1, n + 1):
        ell = ell * bracket(i)
    return ell


def monic_product(n: int, budget: int = MONIC_PRODUCT_BUDGET) -> BinaryPoly:
    """The literal product of all 2^n monic polynomials of degree n."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n > budget:
        raise ValueError(f"brute-force budget exceeded: n={n} > {budget}")
    if n == 0:
        return BinaryPoly.one()
    values = [BinaryPoly(bits) for bits in range(1 << n, 1 << (n + 1))]
    while len(values) > 1:
        paired = [
            values[i] * values[i + 1] for i in range(0, len(values) - 1, 2)
        ]
        if len(values) % 2:
            paired.append(values[-1])
        values = paired
    return values[0]


@dataclass(frozen=True)
class FunctionalReport:
    """Outcome of the coefficient check [i] * a_i = a_{i-1}^2."""

    checked_up_to: int
    note: str = GENERATOR_NOTE


def functional_check(K: int) -> FunctionalReport:
    """Verify [i] * a_i = a_{i-1}^2 for 1 <= i <= K, with a_i = 1/d_i.

    Cross-multiplied, the identity says [i] * d_{i-1}^2 = d_i, which is
    checked exactly on polynomials.
    """
    if K < 1:
        raise ValueError("need at least one index to check")
    d_prev = BinaryPoly.one()
    for i in range(1, K + 1):
        d_i = exp_denominator(i)
        if bracket(i) * d_prev.square() != d_i:
            raise VerificationError(f"functional identity fails at i={i}")
        d_prev = d_i
    return FunctionalReport(checked_up_to=K)
