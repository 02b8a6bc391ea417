"""Moment sequences of the driving random variable and iid-sum moment tables.

A random variable Y enters every computation only through its moment sequence
mu_j = E Y^j, held exactly.  The table of iid-sum moments E S_k^n, where
S_k = Y_1 + ... + Y_k is a sum of k independent copies of Y (S_0 = 0), is the
workhorse shared by the Stirling and Appell constructions.

Whether a user-supplied moment list belongs to a genuine random variable (a
moment problem), and whether its generating function converges, cannot be
decided from finitely many entries; computation is formal at the requested
truncation order and convergence is the caller's responsibility.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from pathlib import Path
from typing import Mapping

from . import faults
from .combinatorics import compositions, multinomial, parse_rational
from .errors import DomainError, MomentFileError

NAMED_TAGS = (
    "point-mass-one",
    "uniform01",
    "beta",
    "bernoulli",
    "bernoulli-times-uniform",
    "custom",
)


@dataclass(frozen=True)
class MomentSequence:
    """Exact moments mu_0..mu_N of a random variable, plus a descriptive tag."""

    moments: tuple[Fraction, ...]
    tag: str = "custom"

    def __post_init__(self) -> None:
        moments = tuple(Fraction(m) for m in self.moments)
        if not moments:
            raise ValueError("a moment sequence needs at least the zeroth moment")
        if moments[0] != 1:
            raise ValueError(f"zeroth moment must be 1, got {moments[0]}")
        object.__setattr__(self, "moments", moments)

    @property
    def order(self) -> int:
        return len(self.moments) - 1

    def moment(self, j: int) -> Fraction:
        if not 0 <= j <= self.order:
            raise ValueError(f"moment index {j} outside 0..{self.order}")
        return self.moments[j]


def point_mass_one(order: int) -> MomentSequence:
    """Y = 1: every moment equals 1."""
    return MomentSequence((Fraction(1),) * (order + 1), tag="point-mass-one")


def beta_moments(m: int, order: int) -> MomentSequence:
    """Y with density m(1-theta)^(m-1) on [0, 1]: mu_j = 1 / C(m+j, m)."""
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"beta shape must be an integer >= 1, got {m!r}")
    return MomentSequence(
        tuple(Fraction(1, comb(m + j, m)) for j in range(order + 1)),
        tag=f"beta:{m}",
    )


def uniform01(order: int) -> MomentSequence:
    """Y uniform on [0, 1]: mu_j = 1/(j+1)."""
    return MomentSequence(
        tuple(Fraction(1, j + 1) for j in range(order + 1)), tag="uniform01"
    )


def _check_probability(beta: Fraction | int) -> Fraction:
    beta = Fraction(beta)
    if not 0 <= beta <= 1:
        raise DomainError(f"probability parameter must lie in [0, 1], got {beta}")
    return beta


def bernoulli_moments(beta: Fraction | int, order: int) -> MomentSequence:
    """Y an indicator with P(Y=1) = beta: mu_0 = 1, mu_j = beta for j >= 1."""
    beta = _check_probability(beta)
    return MomentSequence(
        (Fraction(1),) + (beta,) * order, tag=f"bernoulli:{beta}"
    )


def bernoulli_times_uniform_moments(beta: Fraction | int, order: int) -> MomentSequence:
    """Y = X*U with X an independent indicator: mu_j = beta/(j+1) for j >= 1."""
    beta = _check_probability(beta)
    return MomentSequence(
        (Fraction(1),) + tuple(beta / (j + 1) for j in range(1, order + 1)),
        tag=f"bernoulli-times-uniform:{beta}",
    )


def make_named(
    tag: str, order: int, param: int | Fraction | None = None
) -> MomentSequence:
    """Build one of the named moment sequences by tag."""
    if tag == "point-mass-one":
        return point_mass_one(order)
    if tag == "uniform01":
        return uniform01(order)
    if tag == "beta":
        if param is None:
            raise ValueError("beta needs a shape parameter m >= 1")
        return beta_moments(int(param), order)
    if tag == "bernoulli":
        if param is None:
            raise ValueError("bernoulli needs a probability parameter")
        return bernoulli_moments(param, order)
    if tag == "bernoulli-times-uniform":
        if param is None:
            raise ValueError("bernoulli-times-uniform needs a probability parameter")
        return bernoulli_times_uniform_moments(param, order)
    raise ValueError(f"unknown distribution tag {tag!r}; known: {NAMED_TAGS}")


@dataclass(frozen=True)
class SumMomentTable:
    """Square table values[k][n] = E S_k^n for 0 <= k, n <= order."""

    values: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def value(self, k: int, n: int) -> Fraction:
        if not (0 <= k <= self.order and 0 <= n <= self.order):
            raise ValueError(f"entry [{k}][{n}] outside table of order {self.order}")
        return self.values[k][n]


@lru_cache(maxsize=None)
def sum_moment_table(mu: MomentSequence, order: int) -> SumMomentTable:
    """Exact E S_k^n for all 0 <= k, n <= order.

    Row k is the binomial convolution of row k-1 with the moment list (the
    last summand Y_k is independent of S_{k-1}), costing O(order^2) per row.
    Row 0 is [1, 0, 0, ...] since S_0 = 0.
    """
    if mu.order < order:
        raise ValueError(
            f"moment sequence of order {mu.order} too short for table order {order}"
        )
    rows = [[Fraction(0)] * (order + 1) for _ in range(order + 1)]
    rows[0][0] = Fraction(1)
    for k in range(1, order + 1):
        prev = rows[k - 1]
        row = rows[k]
        for n in range(order + 1):
            row[n] = sum(
                comb(n, j) * mu.moments[j] * prev[n - j] for j in range(n + 1)
            )
    fault = faults.fault_entry("sum-moments")
    if fault is not None:
        k, n = fault
        if 0 <= k <= order and 0 <= n <= order:
            rows[k][n] += 1
    return SumMomentTable(tuple(tuple(row) for row in rows))


def sum_moment_enumerated(mu: MomentSequence, k: int, n: int) -> Fraction:
    """E S_k^n by literal enumeration of the multinomial expansion.

    Sums n!/(j_1!...j_k!) mu_{j_1}...mu_{j_k} over every composition
    j_1+...+j_k = n.  Exponential cost; retained purely as a small-instance
    oracle for the convolution recurrence.
    """
    total = Fraction(0)
    for parts in compositions(n, k):
        term = Fraction(multinomial(n, parts))
        for j in parts:
            term *= mu.moments[j]
        total += term
    return total


def load_custom_moments(
    source: str | Path | Mapping, min_order: int | None = None
) -> MomentSequence:
    """Validate a custom moment document: {"moments": ["p/q", ...]}.

    Accepts a path to a UTF-8 JSON file or an already-parsed mapping.  Each
    failure mode gets its own diagnostic: unreadable/invalid JSON, a missing
    or malformed "moments" list, a malformed rational entry, a zeroth moment
    different from 1, and a list shorter than min_order+1 entries.
    """
    if isinstance(source, (str, Path)):
        path = Path(source)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise MomentFileError(f"cannot read moment file {path}: {exc}") from exc
        try:
            document = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MomentFileError(f"moment file {path} is not valid JSON: {exc}") from exc
    else:
        document = source
    if not isinstance(document, Mapping) or "moments" not in document:
        raise MomentFileError('moment document must be an object with a "moments" list')
    raw = document["moments"]
    if not isinstance(raw, list) or not raw:
        raise MomentFileError('"moments" must be a non-empty list of "p/q" strings')
    values = []
    for index, entry in enumerate(raw):
        try:
            values.append(parse_rational(entry))
        except ValueError as exc:
            raise MomentFileError(f"moment entry {index} is invalid: {exc}") from exc
    if values[0] != 1:
        raise MomentFileError(f"zeroth moment must be 1, got {values[0]}")
    if min_order is not None and len(values) < min_order + 1:
        raise MomentFileError(
            f"need at least {min_order + 1} moments for order {min_order}, "
            f"got {len(values)}"
        )
    return MomentSequence(tuple(values), tag="custom")
