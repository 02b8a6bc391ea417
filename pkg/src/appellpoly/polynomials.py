"""Dense single-variable polynomials with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable


@dataclass(frozen=True)
class Polynomial:
    """Polynomial sum_i coeffs[i] * x**i, lowest degree first.

    Trailing zero coefficients are stripped on construction, so the leading
    coefficient is nonzero unless the polynomial is identically zero (stored
    as the single coefficient 0).
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (Fraction(0),)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, values: Iterable[Fraction | int]) -> "Polynomial":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def monomial(cls, degree: int, coefficient: Fraction | int = 1) -> "Polynomial":
        return cls((Fraction(0),) * degree + (Fraction(coefficient),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1]

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def evaluate(self, x: Fraction | int) -> Fraction:
        """Exact Horner evaluation."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_float(self, x: float) -> float:
        """Horner evaluation in double precision.

        This is the only place the package rounds: coefficients are converted
        to floats term by term, everything upstream stays exact.
        """
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    __call__ = evaluate

    def derivative(self) -> "Polynomial":
        if self.degree == 0:
            return Polynomial((Fraction(0),))
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def shift(self, alpha: Fraction | int) -> "Polynomial":
        """The polynomial x -> p(x + alpha), computed exactly."""
        alpha = Fraction(alpha)
        if alpha == 0:
            return self
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = Fraction(1)
            for j in range(i, -1, -1):
                out[j] += c * comb(i, j) * power
                power *= alpha
        return Polynomial(tuple(out))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(n))
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            tuple(self.coefficient(i) - other.coefficient(i) for i in range(n))
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if isinstance(other, Polynomial):
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(tuple(out))
        return Polynomial(tuple(Fraction(other) * c for c in self.coeffs))

    __rmul__ = __mul__

    def render(self) -> str:
        """Human-readable form like ``x^3 - 3/2 x^2 + 1/2 x`` or ``x^2 - x + 1/6``."""
        if self.is_zero:
            return "0"
        pieces: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = _power(i)
            else:
                body = f"{abs(c)} {_power(i)}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()


def _power(i: int) -> str:
    return "x" if i == 1 else f"x^{i}"
