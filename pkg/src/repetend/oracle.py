"""Independent reduced-fraction arithmetic used as ground truth.

Deliberately self-contained: no word machinery, no external rational
type, just integer pairs kept reduced.  Everything here exists so the
digit-level arithmetic elsewhere has something independent to be checked
against; production code paths only touch this module at the explicit
fraction conversion endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class Fraction:
    """A reduced integer fraction with positive denominator."""

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def __add__(self, other: "Fraction") -> "Fraction":
        return Fraction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __sub__(self, other: "Fraction") -> "Fraction":
        return Fraction(
            self.numerator * other.denominator - other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __mul__(self, other: "Fraction") -> "Fraction":
        return Fraction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def __truediv__(self, other: "Fraction") -> "Fraction":
        if other.numerator == 0:
            raise ZeroDivisionError("division by zero fraction")
        return Fraction(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    def __neg__(self) -> "Fraction":
        return Fraction(-self.numerator, self.denominator)

    def __abs__(self) -> "Fraction":
        return Fraction(abs(self.numerator), self.denominator)

    def __lt__(self, other: "Fraction") -> bool:
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __le__(self, other: "Fraction") -> bool:
        return self.numerator * other.denominator <= other.numerator * self.denominator

    def __gt__(self, other: "Fraction") -> bool:
        return other < self

    def __ge__(self, other: "Fraction") -> bool:
        return other <= self

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def compare(x: Fraction, y: Fraction) -> int:
    """Total order: -1, 0 or 1."""
    lhs = x.numerator * y.denominator
    rhs = y.numerator * x.denominator
    return (lhs > rhs) - (lhs < rhs)


def expansion_digits(u: int, v: int, base: int, count: int) -> list[int]:
    """First ``count`` digits after the point of u/v (0 <= u/v required).

    Plain schoolbook long division, one digit at a time; used by tests as
    a digit-level oracle independent of any cycle detection.
    """
    if v <= 0 or u < 0:
        raise ValueError("need u >= 0 and v > 0")
    r = u % v
    digits = []
    for _ in range(count):
        r *= base
        d, r = divmod(r, v)
        digits.append(d)
    return digits
