"""Generalized finite differences of polynomials, exactly.

The operator with steps alpha_1..alpha_m is

    D_{a_1,...,a_m} f(x) = sum over subsets I of {1..m} of
                           (-1)^(m-|I|) f(x + sum_{i in I} a_i),

the m-fold iterate of the single-step difference f(x+a) - f(x); with zero
steps it is the identity.  Differences are implemented on polynomials only,
where every value stays rational.  The iterate fold is the production path;
the subset sum costs O(2^m) and is kept as an oracle, together with the
derivative representation

    D_{a_1,...,a_m} p(x) = a_1...a_m E p^(m)(x + a_1 U_1 + ... + a_m U_m)

with the U_i independent uniforms on [0, 1], evaluated exactly via uniform
moments.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .moments import MomentSequence, sum_moment_table
from .polynomials import Polynomial

Steps = "tuple[Fraction, ...]"


def _as_steps(steps) -> tuple[Fraction, ...]:
    return tuple(Fraction(a) for a in steps)


def difference_poly(p: Polynomial, steps) -> Polynomial:
    """Apply the difference operator, returning the resulting polynomial.

    Folds q -> q(x + a) - q(x) across the steps; each pass drops the degree
    by one (or annihilates a constant), so m > deg(p) yields zero.
    """
    q = p
    for alpha in _as_steps(steps):
        q = q.shift(alpha) - q
    return q


def delta_steps(p: Polynomial, steps, x) -> Fraction:
    """Value of the generalized difference at x (iterate form)."""
    return difference_poly(p, steps).evaluate(Fraction(x))


def delta_steps_subset_sum(p: Polynomial, steps, x) -> Fraction:
    """Value at x by the alternating sum over index subsets (oracle form)."""
    steps = _as_steps(steps)
    x = Fraction(x)
    m = len(steps)
    total = Fraction(0)
    for size in range(m + 1):
        sign = (-1) ** (m - size)
        for subset in combinations(steps, size):
            total += sign * p.evaluate(x + sum(subset))
    return total


def expected_delta_monomial(mu: MomentSequence, n: int, m: int) -> Fraction:
    """E D_{Y_1,...,Y_m} x^n at x = 0: the alternating sum of E S_k^n.

    Equals m! S_Y(n, m) for m <= n and vanishes for m > n, since the
    difference operator with m steps annihilates degree < m.
    """
    if n < 0 or m < 0:
        raise ValueError(f"indices must be natural numbers, got n={n}, m={m}")
    table = sum_moment_table(mu, max(n, m))
    return Fraction(
        sum(comb(m, k) * (-1) ** (m - k) * table.value(k, n) for k in range(m + 1))
    )


def _uniform_shift_moments(steps: tuple[Fraction, ...], order: int) -> list[Fraction]:
    """Moments E (a_1 U_1 + ... + a_m U_m)^j for j = 0..order.

    Built by binomial convolution one summand at a time, using
    E (aU)^j = a^j/(j+1).
    """
    mom = [Fraction(1)] + [Fraction(0)] * order
    for alpha in steps:
        single = [alpha**j / (j + 1) for j in range(order + 1)]
        mom = [
            sum(comb(j, i) * single[i] * mom[j - i] for i in range(j + 1))
            for j in range(order + 1)
        ]
    return mom


def delta_derivative_form(p: Polynomial, steps, x) -> Fraction:
    """Value at x via the derivative representation (oracle form).

    Computes a_1...a_m E p^(m)(x + a_1 U_1 + ... + a_m U_m) exactly by
    expanding p^(m) around x and pairing coefficients with the moments of
    the uniform shift.
    """
    steps = _as_steps(steps)
    x = Fraction(x)
    r = p
    for _ in steps:
        r = r.derivative()
    shifted = r.shift(x)
    mom = _uniform_shift_moments(steps, shifted.degree)
    value = sum(shifted.coefficient(j) * mom[j] for j in range(shifted.degree + 1))
    prefactor = Fraction(1)
    for alpha in steps:
        prefactor *= alpha
    return prefactor * Fraction(value)
