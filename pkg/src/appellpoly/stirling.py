"""Stirling numbers of the second kind, classical and moment-generalized.

For a random variable Y with moments mu, the generalized number

    S_Y(n, m) = (1/m!) sum_k C(m, k) (-1)^(m-k) E S_k^n

reduces to the classical S(n, m) when Y = 1.  Three independent routes are
implemented: the alternating definition sum over the iid-sum moment table,
coefficient extraction from (E e^{zY} - 1)^m / m!, and the multinomial
expansion of C(n, m) E[Y_1...Y_m (Y_1 U_1 + ... + Y_m U_m)^(n-m)] with the
U_i uniform on [0, 1].  The defsum route is the production path; the other
two exist so route agreement can be checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import faults
from .combinatorics import compositions, multinomial
from .egf import TruncatedEGF, egf_from_moments, egf_mul, egf_one
from .moments import MomentSequence, sum_moment_table

ROUTES = ("definition-sum", "generating-function", "lemma2-expansion", "recurrence")


@dataclass(frozen=True)
class StirlingTable:
    """Triangle values[n][m] for 0 <= m <= n <= order, plus its route descriptor.

    Entries with m > n are absent rather than stored as zero, so a
    transposed or out-of-range lookup fails loudly instead of reading 0.
    """

    values: tuple[tuple[Fraction, ...], ...]
    source: str

    def __post_init__(self) -> None:
        if self.source not in ROUTES:
            raise ValueError(f"unknown route {self.source!r}; known: {ROUTES}")
        for n, row in enumerate(self.values):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def value(self, n: int, m: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise ValueError(f"row {n} outside 0..{self.order}")
        if not 0 <= m <= n:
            raise ValueError(f"need 0 <= m <= n, got n={n}, m={m}")
        return self.values[n][m]


def _check_pair(n: int, m: int) -> None:
    if n < 0 or m < 0:
        raise ValueError(f"indices must be natural numbers, got n={n}, m={m}")
    if m > n:
        raise ValueError(f"need m <= n, got n={n}, m={m}")


@lru_cache(maxsize=None)
def _classical_triangle(order: int) -> tuple[tuple[int, ...], ...]:
    """Classical triangle by the recurrence S(n,m) = m S(n-1,m) + S(n-1,m-1)."""
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(1, order + 1):
        prev = rows[n - 1]
        row = [0] * (n + 1)
        for m in range(1, n):
            row[m] = m * prev[m] + prev[m - 1]
        row[n] = 1
        rows.append(tuple(row))
    fault = faults.fault_entry("stirling")
    if fault is not None:
        n, m = fault
        if 0 <= n <= order and 0 <= m <= n:
            patched = list(rows[n])
            patched[m] += 1
            rows[n] = tuple(patched)
    return tuple(rows)


def stirling_classical(n: int, m: int) -> int:
    """Classical Stirling number of the second kind S(n, m)."""
    _check_pair(n, m)
    return _classical_triangle(n)[n][m]


def stirling_prob_defsum(mu: MomentSequence, n: int, m: int) -> Fraction:
    """S_Y(n, m) by the alternating sum over iid-sum moments."""
    _check_pair(n, m)
    table = sum_moment_table(mu, n)
    total = sum(
        comb(m, k) * (-1) ** (m - k) * table.value(k, n) for k in range(m + 1)
    )
    return Fraction(total, factorial(m))


@lru_cache(maxsize=None)
def _mgf_minus_one_powers(mu: MomentSequence, order: int) -> tuple[TruncatedEGF, ...]:
    """Truncated series (M(z) - 1)^m for m = 0..order, shared across callers."""
    base = egf_from_moments(mu, order)
    shifted = TruncatedEGF((base.coeffs[0] - 1,) + base.coeffs[1:])
    powers = [egf_one(order)]
    for _ in range(order):
        powers.append(egf_mul(powers[-1], shifted))
    return tuple(powers)


def stirling_prob_gf(mu: MomentSequence, n: int, m: int, order: int) -> Fraction:
    """S_Y(n, m) as the nth coefficient of (M(z) - 1)^m / m!."""
    _check_pair(n, m)
    if n > order:
        raise ValueError(f"need n <= series order, got n={n}, order={order}")
    powers = _mgf_minus_one_powers(mu, order)
    return powers[m].coefficient(n) / factorial(m)


def stirling_prob_lemma2(mu: MomentSequence, n: int, m: int) -> Fraction:
    """S_Y(n, m) = C(n,m) E[Y_1...Y_m (Y_1 U_1 + ... + Y_m U_m)^(n-m)].

    Multinomial expansion over compositions a_1+...+a_m = n-m; each factor
    contributes E U^a E Y^{a+1} = mu_{a+1}/(a+1) by independence.
    """
    _check_pair(n, m)
    if m == 0:
        return Fraction(1 if n == 0 else 0)
    total = Fraction(0)
    for parts in compositions(n - m, m):
        term = Fraction(multinomial(n - m, parts))
        for a in parts:
            term *= Fraction(mu.moments[a + 1], a + 1)
        total += term
    return comb(n, m) * total


def stirling_table(
    mu: MomentSequence, order: int, source: str = "definition-sum"
) -> StirlingTable:
    """Full S_Y triangle through the given order, by the named route."""
    if source == "definition-sum":
        entry = lambda n, m: stirling_prob_defsum(mu, n, m)
    elif source == "generating-function":
        entry = lambda n, m: stirling_prob_gf(mu, n, m, order)
    elif source == "lemma2-expansion":
        entry = lambda n, m: stirling_prob_lemma2(mu, n, m)
    elif source == "recurrence":
        if mu.tag != "point-mass-one":
            raise ValueError("the recurrence route is classical-only (Y = 1)")
        triangle = _classical_triangle(order)
        return StirlingTable(
            tuple(tuple(Fraction(v) for v in row) for row in triangle), source
        )
    else:
        raise ValueError(f"unknown route {source!r}; known: {ROUTES}")
    return StirlingTable(
        tuple(
            tuple(entry(n, m) for m in range(n + 1)) for n in range(order + 1)
        ),
        source,
    )
