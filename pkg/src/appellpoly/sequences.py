"""Appell sequences attached to a moment sequence, by four independent routes.

For a random variable Y with moment generating function M(z) = E e^{zY} and a
rational order t, the sequence A_n(t;x) is generated by

    e^{xz} / M(z)^t = sum_n A_n(t;x) z^n/n!.

Throughout the package "order t" means exactly this: the exponent applied to
M(z) is -t.  The constants A_n(t;0) admit four computations that must agree
coefficient for coefficient:

  * stirling form      sum_m C(-t,m) m! S_Y(n,m)          (production route)
  * moment form        sum_k C(-t,k) C(n+t,n-k) E S_k^n
  * binomial route     coefficient n of sum_m C(-t,m) (M(z)-1)^m
  * series oracle      coefficient n of egf_pow(M, -t)

The first three share no series machinery with the fourth, which computes the
power through exp(log); their agreement is what the verify suite certifies.
Full polynomials follow from the constants via A_n(x) = sum_k C(n,k) A_k(0)
x^{n-k}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .combinatorics import gen_binomial
from .egf import egf_from_moments, egf_pow
from .moments import MomentSequence, sum_moment_table
from .polynomials import Polynomial
from .stirling import _mgf_minus_one_powers, stirling_prob_defsum

CONSTANT_ROUTES = ("stirling-form", "moment-form", "binomial-route", "series-oracle")


def _check_order(mu: MomentSequence, n_max: int) -> None:
    if mu.order < n_max:
        raise ValueError(
            f"moment sequence of order {mu.order} too short for N = {n_max}"
        )


def constants_stirling_form(
    mu: MomentSequence, t: Fraction | int, n_max: int
) -> list[Fraction]:
    """A_n(t;0) = sum_m C(-t,m) m! S_Y(n,m) for n = 0..n_max."""
    _check_order(mu, n_max)
    t = Fraction(t)
    out = []
    for n in range(n_max + 1):
        out.append(
            sum(
                (
                    gen_binomial(-t, m)
                    * factorial(m)
                    * stirling_prob_defsum(mu, n, m)
                    for m in range(n + 1)
                ),
                Fraction(0),
            )
        )
    return out


def constants_moment_form(
    mu: MomentSequence, t: Fraction | int, n_max: int
) -> list[Fraction]:
    """A_n(t;0) = sum_k C(-t,k) C(n+t,n-k) E S_k^n for n = 0..n_max."""
    _check_order(mu, n_max)
    t = Fraction(t)
    table = sum_moment_table(mu, n_max)
    out = []
    for n in range(n_max + 1):
        out.append(
            sum(
                (
                    gen_binomial(-t, k)
                    * gen_binomial(n + t, n - k)
                    * table.value(k, n)
                    for k in range(n + 1)
                ),
                Fraction(0),
            )
        )
    return out


def constants_binomial_route(
    mu: MomentSequence, t: Fraction | int, n_max: int
) -> list[Fraction]:
    """Coefficients of sum_m C(-t,m) (M(z)-1)^m through order n_max.

    (M(z)-1)^m has no terms below z^m, so the sum over m = 0..n_max is the
    full expansion of M(z)^{-t} at this truncation.
    """
    _check_order(mu, n_max)
    t = Fraction(t)
    powers = _mgf_minus_one_powers(mu, n_max)
    out = []
    for n in range(n_max + 1):
        out.append(
            sum(
                (
                    gen_binomial(-t, m) * powers[m].coefficient(n)
                    for m in range(n + 1)
                ),
                Fraction(0),
            )
        )
    return out


def oracle_constants(
    mu: MomentSequence, t: Fraction | int, n_max: int
) -> list[Fraction]:
    """A_n(t;0) read directly from egf_pow(M, -t): the reference values."""
    _check_order(mu, n_max)
    series = egf_pow(egf_from_moments(mu, n_max), -Fraction(t))
    return list(series.coeffs)


def build_polynomials(constants, n_max: int) -> list[Polynomial]:
    """A_n(x) = sum_k C(n,k) A_k(0) x^{n-k} for n = 0..n_max."""
    constants = [Fraction(c) for c in constants]
    if len(constants) < n_max + 1:
        raise ValueError(
            f"need {n_max + 1} constants for N = {n_max}, got {len(constants)}"
        )
    polys = []
    for n in range(n_max + 1):
        coeffs = tuple(comb(n, j) * constants[n - j] for j in range(n + 1))
        polys.append(Polynomial(coeffs))
    return polys


def evaluate(p: Polynomial, x) -> Fraction:
    """Exact Horner evaluation at a rational point."""
    return p.evaluate(Fraction(x))


def evaluate_float(p: Polynomial, x: float) -> float:
    """Float Horner evaluation; the package rounds only here."""
    return p.evaluate_float(x)


@dataclass(frozen=True)
class AppellSequence:
    """Constants and polynomials A_0..A_N for one (Y, t) pair."""

    order: Fraction
    source: MomentSequence
    constants: tuple[Fraction, ...]
    polynomials: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if len(self.constants) != len(self.polynomials):
            raise ValueError("constants and polynomials must have equal length")
        if self.constants[0] != 1:
            raise ValueError(f"A_0 must be 1, got {self.constants[0]}")

    @property
    def degree(self) -> int:
        return len(self.constants) - 1


def appell_sequence(
    mu: MomentSequence, t: Fraction | int, n_max: int, route: str = "stirling-form"
) -> AppellSequence:
    """Build the full sequence for (Y, t) by the named constants route."""
    t = Fraction(t)
    if route == "stirling-form":
        constants = constants_stirling_form(mu, t, n_max)
    elif route == "moment-form":
        constants = constants_moment_form(mu, t, n_max)
    elif route == "binomial-route":
        constants = constants_binomial_route(mu, t, n_max)
    elif route == "series-oracle":
        constants = oracle_constants(mu, t, n_max)
    else:
        raise ValueError(f"unknown route {route!r}; known: {CONSTANT_ROUTES}")
    return AppellSequence(
        order=t,
        source=mu,
        constants=tuple(constants),
        polynomials=tuple(build_polynomials(constants, n_max)),
    )
