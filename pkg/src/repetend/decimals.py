"""Signed finite digit words with a point: exact base-b decimals.

A value is sign * N(word) * base**(-point) with the point constrained to
lie inside the word (0 <= point <= len).  Canonical form strips trailing
zeros right of the point and leading zeros not needed to reach it, and
gives zero the + sign; values with a net positive exponent (like 370 =
37 * 10**1) carry explicit trailing zeros instead of a negative point.

Also home to the scalar action of these numbers on circular words, which
splits a product (finite decimal) * (pure repeating fraction) into a
finite carry part and a rotated remainder word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import CircularWord, digit_char, digit_count, digits_to_int, int_to_digits


@dataclass(frozen=True)
class DecimalNumber:
    sign: int
    digits: tuple[int, ...]
    point: int
    base: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not 0 <= self.point <= len(self.digits):
            raise ValueError("point must lie within the word")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")

    @classmethod
    def from_scaled(cls, scaled: int, point: int, base: int) -> "DecimalNumber":
        """Canonical number with value scaled * base**(-point)."""
        if base < 2:
            raise ValueError("base must be >= 2")
        if scaled == 0:
            return cls(1, (0,), 0, base)
        sign = 1 if scaled > 0 else -1
        mag = abs(scaled)
        while point > 0:
            q, r = divmod(mag, base)
            if r:
                break
            mag = q
            point -= 1
        while point < 0:
            mag *= base
            point += 1
        length = max(digit_count(mag, base), point)
        return cls(sign, int_to_digits(mag, base, length), point, base)

    @classmethod
    def from_int(cls, n: int, base: int) -> "DecimalNumber":
        return cls.from_scaled(n, 0, base)

    @classmethod
    def zero(cls, base: int) -> "DecimalNumber":
        return cls(1, (0,), 0, base)

    @classmethod
    def one(cls, base: int) -> "DecimalNumber":
        return cls(1, (1,), 0, base)

    @property
    def scaled(self) -> int:
        """The signed integer k with value k * base**(-point)."""
        return self.sign * digits_to_int(self.digits, self.base)

    def canonical(self) -> "DecimalNumber":
        return DecimalNumber.from_scaled(self.scaled, self.point, self.base)

    def is_zero(self) -> bool:
        return all(d == 0 for d in self.digits)

    def is_one(self) -> bool:
        return self.scaled == 1 and self.point == 0

    def is_integer(self) -> bool:
        return self.point == 0

    def scaled_to(self, point: int) -> int:
        """The integer k with value k * base**(-point); point >= self.point."""
        if point < self.point:
            raise ValueError("cannot rescale to a coarser point exactly")
        return self.scaled * self.base ** (point - self.point)

    def _coerce(self, other) -> "DecimalNumber":
        if isinstance(other, int):
            return DecimalNumber.from_int(other, self.base)
        if isinstance(other, DecimalNumber):
            if other.base != self.base:
                raise ValueError(f"mixed bases {self.base} and {other.base}")
            return other
        return NotImplemented

    def __add__(self, other) -> "DecimalNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        point = max(self.point, other.point)
        return DecimalNumber.from_scaled(
            self.scaled_to(point) + other.scaled_to(point), point, self.base
        )

    __radd__ = __add__

    def __sub__(self, other) -> "DecimalNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "DecimalNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return DecimalNumber.from_scaled(
            self.scaled * other.scaled, self.point + other.point, self.base
        )

    __rmul__ = __mul__

    def __neg__(self) -> "DecimalNumber":
        return DecimalNumber.from_scaled(-self.scaled, self.point, self.base)

    def __abs__(self) -> "DecimalNumber":
        return DecimalNumber.from_scaled(abs(self.scaled), self.point, self.base)

    def _cmp(self, other) -> int:
        other = self._coerce(other)
        point = max(self.point, other.point)
        a, b = self.scaled_to(point), other.scaled_to(point)
        return (a > b) - (a < b)

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def shift_point(self, k: int) -> "DecimalNumber":
        """Multiply by base**k exactly."""
        return DecimalNumber.from_scaled(self.scaled, self.point - k, self.base)

    def __str__(self) -> str:
        text = "".join(digit_char(d) for d in self.digits)
        whole, frac = text[: len(text) - self.point], text[len(text) - self.point :]
        whole = whole.lstrip("0") or "0"
        out = whole if not frac else f"{whole}.{frac}"
        return out if self.sign > 0 or self.is_zero() else f"-{out}"


def scalar_action(
    d: DecimalNumber, p: CircularWord
) -> tuple[DecimalNumber, CircularWord]:
    """Split d * N(p)/(b**ell - 1) into a finite part and a remainder word.

    With k, c the scaled integer and point of d, ell = len(p) and
    m = b**ell - 1, take the Euclidean division

        k * N(p) * b**(ell*M - c) = q2 * m + r2,   M = ceil(c / ell).

    The remainder word is r2 written over ell digits (the c-fold inverse
    rotation of the plain remainder) and the finite part is
    (q2 - r2 * (b**(ell*M) - 1)/m) * b**(-ell*M), so that exactly

        value(d) * N(p)/m == value(carry) + N(circ)/m.
    """
    if d.base != p.base:
        raise ValueError(f"mixed bases {d.base} and {p.base}")
    base = d.base
    ell = len(p)
    m = base**ell - 1
    lifts = -(-d.point // ell)  # ceil
    q2, r2 = divmod(d.scaled * p.valuation * base ** (ell * lifts - d.point), m)
    repunit = (base ** (ell * lifts) - 1) // m
    carry = DecimalNumber.from_scaled(q2 - r2 * repunit, ell * lifts, base)
    return carry, CircularWord.from_int(r2, base, ell)
