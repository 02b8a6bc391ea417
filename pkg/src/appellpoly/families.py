"""Named Appell families with closed-form constants.

Each family is a (moment sequence, order) pair together with an explicit
coefficient formula for its constants:

  * gen-bernoulli:t,m    Y = beta(m)                 B_n(t,m;0)
  * bernoulli-order:t    Y = beta(1) = uniform       B_n(t;0)
  * classical-bernoulli  bernoulli-order at t = 1    Bernoulli numbers
  * apostol-euler:t,b    Y = bernoulli(b)            E_n(t,b;0)
  * classical-euler      apostol-euler at t=1, b=1/2 Euler E_n(0)
  * bstar:t,b            Y = bernoulli(b) * uniform  B*_n(t,b;0)

The formulas are implemented as the written sums so that tests certify the
statements themselves; only the shared subterms (the beta-sum moments
C(m,n,k) and the uniform-sum moments S(n+k,k)/C(n+k,n)) are cached.  Every
family must reproduce the generic four-route pipeline on its (Y, t) pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, lru_cache
from math import comb, factorial

from .combinatorics import gen_binomial, parse_rational
from .errors import DomainError
from .moments import (
    MomentSequence,
    bernoulli_moments,
    bernoulli_times_uniform_moments,
    beta_moments,
)
from .stirling import stirling_classical

FAMILY_KINDS = (
    "gen-bernoulli",
    "bernoulli-order",
    "classical-bernoulli",
    "apostol-euler",
    "classical-euler",
    "bstar",
)


@lru_cache(maxsize=None)
def _beta_conv_power(m: int, k: int, n_max: int) -> tuple[Fraction, ...]:
    """Ordinary-convolution power T_k of g_j = 1/(m+j)!, truncated at n_max."""
    if k == 0:
        return (Fraction(1),) + (Fraction(0),) * n_max
    prev = _beta_conv_power(m, k - 1, n_max)
    g = [Fraction(1, factorial(m + j)) for j in range(n_max + 1)]
    return tuple(
        sum((prev[i] * g[n - i] for i in range(n + 1)), Fraction(0))
        for n in range(n_max + 1)
    )


@cache
def c_mnk(m: int, n: int, k: int) -> Fraction:
    """C(m,n,k) = n! (m!)^k sum over j_1+...+j_k = n of prod 1/(m+j_i)!.

    The inner sum is the n-th coefficient of the k-th convolution power of
    the sequence 1/(m+j)!, which keeps the cost polynomial while computing
    the same sum term set.  Equals the beta(m) iid-sum moment E S_k^n.
    """
    if m < 1:
        raise DomainError(f"shape parameter must be an integer >= 1, got {m}")
    if n < 0 or k < 0:
        raise ValueError(f"indices must be natural numbers, got n={n}, k={k}")
    power = _beta_conv_power(m, k, n)
    return factorial(n) * Fraction(factorial(m)) ** k * power[n]


@cache
def _uniform_sum_moment(k: int, n: int) -> Fraction:
    """E (U_1 + ... + U_k)^n = S(n+k, k) / C(n+k, n) for iid uniforms."""
    return Fraction(stirling_classical(n + k, k), comb(n + k, n))


def gen_bernoulli_constants(
    t: Fraction | int, m: int, n_max: int
) -> list[Fraction]:
    """B_n(t,m;0) = sum_k C(-t,k) C(n+t,n-k) C(m,n,k)."""
    if m < 1:
        raise DomainError(f"shape parameter must be an integer >= 1, got {m}")
    t = Fraction(t)
    return [
        sum(
            (
                gen_binomial(-t, k) * gen_binomial(n + t, n - k) * c_mnk(m, n, k)
                for k in range(n + 1)
            ),
            Fraction(0),
        )
        for n in range(n_max + 1)
    ]


def bernoulli_order_constants(t: Fraction | int, n_max: int) -> list[Fraction]:
    """B_n(t;0) = sum_k C(-t,k) C(n+t,n-k) S(n+k,k)/C(n+k,n)."""
    t = Fraction(t)
    return [
        sum(
            (
                gen_binomial(-t, k)
                * gen_binomial(n + t, n - k)
                * _uniform_sum_moment(k, n)
                for k in range(n + 1)
            ),
            Fraction(0),
        )
        for n in range(n_max + 1)
    ]


def _check_beta(beta: Fraction | int) -> Fraction:
    beta = Fraction(beta)
    if not 0 <= beta <= 1:
        raise DomainError(f"probability parameter must lie in [0, 1], got {beta}")
    return beta


def apostol_euler_constants(
    t: Fraction | int, beta: Fraction | int, n_max: int
) -> list[Fraction]:
    """E_n(t,beta;0) = sum_m C(-t,m) beta^m m! S(n,m)."""
    t = Fraction(t)
    beta = _check_beta(beta)
    return [
        sum(
            (
                gen_binomial(-t, m)
                * beta**m
                * factorial(m)
                * stirling_classical(n, m)
                for m in range(n + 1)
            ),
            Fraction(0),
        )
        for n in range(n_max + 1)
    ]


def bstar_constants(
    t: Fraction | int, beta: Fraction | int, n_max: int
) -> list[Fraction]:
    """B*_n(t,beta;0) by the double sum

    sum_m C(-t,m) beta^m sum_k C(m,k)(-1)^(m-k) S(n+k,k)/C(n+k,n).

    At beta = 1 this collapses to the order-t Bernoulli constants.
    """
    t = Fraction(t)
    beta = _check_beta(beta)
    out = []
    for n in range(n_max + 1):
        total = Fraction(0)
        for m in range(n + 1):
            inner = sum(
                (
                    comb(m, k) * (-1) ** (m - k) * _uniform_sum_moment(k, n)
                    for k in range(m + 1)
                ),
                Fraction(0),
            )
            total += gen_binomial(-t, m) * beta**m * inner
        out.append(total)
    return out


@dataclass(frozen=True)
class FamilySpec:
    """A family selector: kind plus whichever parameters the kind takes."""

    kind: str
    t: Fraction
    m: int | None = None
    beta: Fraction | None = None

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}; known: {FAMILY_KINDS}")
        if self.kind == "gen-bernoulli":
            if self.m is None:
                raise ValueError("gen-bernoulli needs a shape parameter m")
            if self.m < 1:
                raise DomainError(
                    f"shape parameter must be an integer >= 1, got {self.m}"
                )
        if self.kind in ("apostol-euler", "bstar"):
            if self.beta is None:
                raise ValueError(f"{self.kind} needs a probability parameter")
            _check_beta(self.beta)

    @property
    def label(self) -> str:
        """Canonical selector text, e.g. "apostol-euler:1,1/2"."""
        if self.kind == "gen-bernoulli":
            return f"gen-bernoulli:{self.t},{self.m}"
        if self.kind == "bernoulli-order":
            return f"bernoulli-order:{self.t}"
        if self.kind in ("apostol-euler", "bstar"):
            return f"{self.kind}:{self.t},{self.beta}"
        return self.kind

    def moment_sequence(self, order: int) -> MomentSequence:
        if self.kind == "gen-bernoulli":
            return beta_moments(self.m, order)
        if self.kind in ("bernoulli-order", "classical-bernoulli"):
            return beta_moments(1, order)
        if self.kind == "apostol-euler":
            return bernoulli_moments(self.beta, order)
        if self.kind == "classical-euler":
            return bernoulli_moments(Fraction(1, 2), order)
        return bernoulli_times_uniform_moments(self.beta, order)

    def closed_form_constants(self, n_max: int) -> list[Fraction]:
        if self.kind == "gen-bernoulli":
            return gen_bernoulli_constants(self.t, self.m, n_max)
        if self.kind in ("bernoulli-order", "classical-bernoulli"):
            return bernoulli_order_constants(self.t, n_max)
        if self.kind == "apostol-euler":
            return apostol_euler_constants(self.t, self.beta, n_max)
        if self.kind == "classical-euler":
            return apostol_euler_constants(1, Fraction(1, 2), n_max)
        return bstar_constants(self.t, self.beta, n_max)


def parse_family(selector: str) -> FamilySpec:
    """Parse a selector like "gen-bernoulli:t,m" or "classical-euler".

    Rationals use "p/q" with no spaces.  Unknown kinds and malformed
    parameter lists raise ValueError (a usage error); parameters outside
    their allowed range raise DomainError.
    """
    kind, sep, rest = selector.partition(":")
    if kind == "classical-bernoulli":
        if sep:
            raise ValueError("classical-bernoulli takes no parameters")
        return FamilySpec("classical-bernoulli", t=Fraction(1))
    if kind == "classical-euler":
        if sep:
            raise ValueError("classical-euler takes no parameters")
        return FamilySpec("classical-euler", t=Fraction(1), beta=Fraction(1, 2))
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family {kind!r}; known: {FAMILY_KINDS}")
    parts = rest.split(",") if rest else []
    if kind == "bernoulli-order":
        if len(parts) != 1:
            raise ValueError("bernoulli-order takes exactly one parameter: t")
        return FamilySpec(kind, t=parse_rational(parts[0]))
    if kind == "gen-bernoulli":
        if len(parts) != 2:
            raise ValueError("gen-bernoulli takes exactly two parameters: t,m")
        t = parse_rational(parts[0])
        m = parse_rational(parts[1])
        if m.denominator != 1:
            raise DomainError(f"shape parameter must be an integer, got {m}")
        return FamilySpec(kind, t=t, m=int(m))
    if len(parts) != 2:
        raise ValueError(f"{kind} takes exactly two parameters: t,beta")
    return FamilySpec(kind, t=parse_rational(parts[0]), beta=parse_rational(parts[1]))
