"""Truncated exponential generating function arithmetic.

A series sum_n u_n z^n/n! is stored by its coefficient list (u_0, ..., u_N)
and all operations are exact through order N.  Multiplication is binomial
convolution; exp, log, and pow use the triangular recurrences obtained from
differentiating b = exp(a) and b = log(a), so pow(a, t) = exp(t*log(a)) is
computed by a route that never expands a binomial series.  That independence
is the point: pow serves as the series oracle against which the
binomial-expansion constructions elsewhere in the package are checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .moments import MomentSequence


@dataclass(frozen=True)
class TruncatedEGF:
    """Coefficients (u_0, ..., u_N) of sum u_n z^n/n!, exact through order N."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient index {n} outside 0..{self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedEGF":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} series to {order}")
        return TruncatedEGF(self.coeffs[: order + 1])


def egf_one(order: int) -> TruncatedEGF:
    """The constant series 1."""
    return TruncatedEGF((Fraction(1),) + (Fraction(0),) * order)


def egf_from_moments(mu: MomentSequence, order: int | None = None) -> TruncatedEGF:
    """The moment generating function E e^{zY} = sum mu_n z^n/n!."""
    if order is None:
        order = mu.order
    if order > mu.order:
        raise ValueError(
            f"moment sequence of order {mu.order} too short for series order {order}"
        )
    return TruncatedEGF(mu.moments[: order + 1])


def _common_order(a: TruncatedEGF, b: TruncatedEGF) -> int:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    return a.order


def egf_add(a: TruncatedEGF, b: TruncatedEGF) -> TruncatedEGF:
    order = _common_order(a, b)
    return TruncatedEGF(tuple(a.coeffs[n] + b.coeffs[n] for n in range(order + 1)))


def egf_scale(a: TruncatedEGF, scalar: Fraction | int) -> TruncatedEGF:
    scalar = Fraction(scalar)
    return TruncatedEGF(tuple(scalar * c for c in a.coeffs))


def egf_mul(a: TruncatedEGF, b: TruncatedEGF) -> TruncatedEGF:
    """Product series: c_n = sum_k C(n, k) a_k b_{n-k}."""
    order = _common_order(a, b)
    return TruncatedEGF(
        tuple(
            sum(comb(n, k) * a.coeffs[k] * b.coeffs[n - k] for k in range(n + 1))
            for n in range(order + 1)
        )
    )


def egf_exp(a: TruncatedEGF) -> TruncatedEGF:
    """exp of a series with zero constant term.

    From b' = a'b: b_{n+1} = sum_{k=0}^{n} C(n, k) a_{k+1} b_{n-k}, b_0 = 1.
    """
    if a.coeffs[0] != 0:
        raise ValueError(
            f"exp needs constant term 0, got {a.coeffs[0]}"
        )
    out = [Fraction(1)] + [Fraction(0)] * a.order
    for n in range(a.order):
        out[n + 1] = sum(
            comb(n, k) * a.coeffs[k + 1] * out[n - k] for k in range(n + 1)
        )
    return TruncatedEGF(tuple(out))


def egf_log(a: TruncatedEGF) -> TruncatedEGF:
    """log of a series with constant term 1.

    From a' = b'a: b_{n+1} = a_{n+1} - sum_{k=0}^{n-1} C(n, k) b_{k+1} a_{n-k},
    b_0 = 0.
    """
    if a.coeffs[0] != 1:
        raise ValueError(
            f"log needs constant term 1, got {a.coeffs[0]}"
        )
    out = [Fraction(0)] * (a.order + 1)
    for n in range(a.order):
        out[n + 1] = a.coeffs[n + 1] - sum(
            comb(n, k) * out[k + 1] * a.coeffs[n - k] for k in range(n)
        )
    return TruncatedEGF(tuple(out))


def egf_pow(a: TruncatedEGF, exponent: Fraction | int) -> TruncatedEGF:
    """a^t for any rational t, as exp(t * log(a)); needs constant term 1."""
    if a.coeffs[0] != 1:
        raise ValueError(
            f"pow needs constant term 1, got {a.coeffs[0]}"
        )
    return egf_exp(egf_scale(egf_log(a), exponent))
