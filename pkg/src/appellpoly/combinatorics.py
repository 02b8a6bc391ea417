"""Exact combinatorial scalars: generalized binomials, multinomials, compositions.

The scalar type everywhere in this package is :class:`fractions.Fraction`
(arbitrary precision, always in lowest terms, positive denominator).  Nothing
in this module ever rounds.  External representations use the string ``"p/q"``
in lowest terms, or ``"p"`` when the denominator is 1, which is exactly what
``str(Fraction)`` produces.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Iterator, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational written as ``p`` or ``p/q``.

    Decimal notation is rejected on purpose: accepting ``0.5`` here would
    silently smuggle binary floating point into exact computations.
    """
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not an exact rational (expected p or p/q): {text!r}")
    if "/" in text:
        num, _, den = text.partition("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Fraction | int) -> str:
    """Render ``value`` as ``p/q`` in lowest terms (``p`` when q == 1)."""
    return str(Fraction(value))


@cache
def gen_binomial(s: Fraction | int, k: int) -> Fraction:
    """Binomial coefficient with an arbitrary rational upper argument.

    Defined as the falling-factorial quotient s(s-1)...(s-k+1) / k!, which is
    total for every rational s and natural k; ``gen_binomial(s, 0) == 1``.
    Values are memoized for the session.
    """
    if k < 0:
        raise ValueError(f"lower index must be a natural number, got {k}")
    prod = Fraction(1)
    s = Fraction(s)
    for i in range(k):
        prod *= s - i
    return prod / factorial(k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (j_1! ... j_k!) for naturals ``parts`` summing to ``n``."""
    if any(p < 0 for p in parts):
        raise ValueError(f"parts must be naturals, got {list(parts)}")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    denominator = 1
    for p in parts:
        denominator *= factorial(p)
    return factorial(n) // denominator


def hockey_stick_check(s: Fraction | int, p: int) -> bool:
    """Check sum_{i=0..p} C(s+i, i) == C(s+1+p, p) exactly.

    The identity holds for every rational s; it is exposed so the claim is
    executable rather than assumed.
    """
    s = Fraction(s)
    lhs = sum(gen_binomial(s + i, i) for i in range(p + 1))
    return lhs == gen_binomial(s + 1 + p, p)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Yield every tuple of ``parts`` naturals summing to ``total``.

    The empty composition is yielded exactly when ``parts == 0`` and
    ``total == 0``.  Cost grows as C(total+parts-1, parts-1); intended for
    small instances (enumeration oracles, closed-form sums).
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest
