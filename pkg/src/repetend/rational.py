"""Rational numbers as eventually repeating digit expansions.

Two interchangeable representations:

* ``WcpNumber`` -- sign, aperiodic word, circular period, point offset.
  The point offset counts digits between the point and the start of the
  period (negative when the point lies inside the aperiodic part).  This
  is the form that reads like the familiar expansion.
* ``DcNumber`` -- an exact finite decimal plus a circular period aligned
  to start right after the point.  Less readable (the decimal can be
  negative while the value is not), far better for arithmetic.

Construction is raw; ``canonical()`` applies the identifications (period
collapsed to its primitive form, an all-(base-1) period bumped into the
finite part, leading zeros and the shift freedom normalized) so that
equal values have equal canonical forms.  Arithmetic accepts raw inputs
and always returns canonical results; the two deliberately raw-facing
operations, the semiotic order and the cancellation demonstration, are
the only ones that keep pre-identification forms visible.

Fractions appear only at the explicit conversion endpoints; the
arithmetic itself runs on words, valuations and carries.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from . import config
from .decimals import DecimalNumber, scalar_action
from .errors import CapacityError
from .group import StarElement
from .numtheory import multiplicative_order
from .oracle import Fraction
from .words import (
    CircularWord,
    digit_char,
    digit_count,
    digits_to_int,
    int_to_digits,
)


def _carry_split(total: int, modulus: int) -> tuple[int, int]:
    """Carry and remaining word value of a digit-level circular sum.

    Faithful to the digit process: a sum equal to the all-(base-1) word
    stays that word with no carry; only overshoot wraps.  The value
    total == carry * modulus + remainder is preserved either way.
    """
    if total <= 0:
        return 0, total
    carry = (total - 1) // modulus
    return carry, total - carry * modulus


def _word_digits(n: int, base: int) -> tuple[int, ...]:
    """Minimal big-endian digits of n >= 0 (empty for 0)."""
    return int_to_digits(n, base, digit_count(n, base))


@dataclass(frozen=True)
class DcNumber:
    """A finite decimal plus a period starting right after the point."""

    delta: DecimalNumber
    period: CircularWord

    def __post_init__(self):
        if self.delta.base != self.period.base:
            raise ValueError(
                f"mixed bases {self.delta.base} and {self.period.base}"
            )

    @property
    def base(self) -> int:
        return self.delta.base

    @classmethod
    def from_int(cls, n: int, base: int) -> "DcNumber":
        return cls(DecimalNumber.from_int(n, base), CircularWord((0,), base))

    @classmethod
    def zero(cls, base: int) -> "DcNumber":
        return cls.from_int(0, base)

    @classmethod
    def one(cls, base: int) -> "DcNumber":
        return cls.from_int(1, base)

    def canonical(self) -> "DcNumber":
        period = self.period.primitive_period()
        delta = self.delta.canonical()
        beta = self.base - 1
        if period.digits == (beta,):
            return DcNumber(delta + 1, CircularWord((0,), self.base))
        return DcNumber(delta, period)

    def is_zero(self) -> bool:
        num, _ = self.as_ratio()
        return num == 0

    def is_negative(self) -> bool:
        num, _ = self.as_ratio()
        return num < 0

    def as_ratio(self) -> tuple[int, int]:
        """(numerator, denominator) with the denominator positive; exact,
        not necessarily reduced."""
        m = self.base ** len(self.period) - 1
        scale = self.base**self.delta.point
        return self.delta.scaled * m + scale * self.period.valuation, scale * m

    def to_fraction(self) -> Fraction:
        """The value as a reduced fraction: the ring morphism back to
        ordinary rationals."""
        return Fraction(*self.as_ratio())

    # -- arithmetic ----------------------------------------------------

    def _add_raw(self, other: "DcNumber") -> "DcNumber":
        """Sum with the carry made explicit and no canonicalization, so
        pre-identification forms stay visible."""
        if self.base != other.base:
            raise ValueError(f"mixed bases {self.base} and {other.base}")
        length = lcm(len(self.period), len(other.period))
        config.check_period(length, "lifted sum")
        m = self.base**length - 1
        total = self.period.lift(length).valuation + other.period.lift(length).valuation
        carry, rest = _carry_split(total, m)
        word = CircularWord.from_int(rest, self.base, length)
        return DcNumber(self.delta + other.delta + carry, word)

    def __add__(self, other: "DcNumber") -> "DcNumber":
        return self._add_raw(other).canonical()

    def __neg__(self) -> "DcNumber":
        return DcNumber(
            -self.delta - 1, self.period.complement()
        ).canonical()

    def __sub__(self, other: "DcNumber") -> "DcNumber":
        return self + (-other)

    def __mul__(self, other: "DcNumber") -> "DcNumber":
        """Product via the split form: finite*finite, two scalar actions
        for the cross terms, and the circular product of the periods; the
        three periodic contributions are lifted to one common length and
        added with their carry."""
        if self.base != other.base:
            raise ValueError(f"mixed bases {self.base} and {other.base}")
        base = self.base
        x, y = self.canonical(), other.canonical()
        carry1, circ1 = scalar_action(x.delta, y.period)
        carry2, circ2 = scalar_action(y.delta, x.period)
        prod = (StarElement.of(x.period) * StarElement.of(y.period)).representative
        length = lcm(len(circ1), len(circ2), len(prod))
        config.check_period(length, "lifted product")
        m = base**length - 1
        total = (
            circ1.lift(length).valuation
            + circ2.lift(length).valuation
            + prod.lift(length).valuation
        )
        carry, rest = _carry_split(total, m)
        delta = x.delta * y.delta + carry1 + carry2 + carry
        return DcNumber(delta, CircularWord.from_int(rest, base, length)).canonical()

    def __truediv__(self, other: "DcNumber") -> "DcNumber":
        num_x, den_x = self.as_ratio()
        num_y, den_y = other.as_ratio()
        if num_y == 0:
            raise ZeroDivisionError("division by zero")
        return from_ratio(num_x * den_y, den_x * num_y, self.base)

    # -- order ---------------------------------------------------------

    def compare(self, other: "DcNumber") -> int:
        """-1, 0 or 1; exact, evaluated over finite decimals only.

        After lifting the periods to a common length ell, x < y iff
        b**ell (dx - dy) < (dx - dy) + (Py - Px) on scaled integers.
        """
        if self.base != other.base:
            raise ValueError(f"mixed bases {self.base} and {other.base}")
        x, y = self.canonical(), other.canonical()
        if x == y:
            return 0
        length = lcm(len(x.period), len(y.period))
        config.check_period(length, "lifted comparison")
        diff = x.delta - y.delta
        lhs = diff.shift_point(length)
        rhs = diff + (
            y.period.lift(length).valuation - x.period.lift(length).valuation
        )
        return -1 if lhs < rhs else 1

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other) -> bool:
        return self.compare(other) >= 0

    def __str__(self) -> str:
        return f"({self.delta}, ({self.period}))"


@dataclass(frozen=True)
class WcpNumber:
    """Sign, aperiodic digits, circular period, and point offset."""

    sign: int
    aperiodic: tuple[int, ...]
    period: CircularWord
    point: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        for d in self.aperiodic:
            if not 0 <= d < self.period.base:
                raise ValueError(f"digit {d} out of range for base {self.period.base}")

    @property
    def base(self) -> int:
        return self.period.base

    @property
    def aperiodic_value(self) -> int:
        return digits_to_int(self.aperiodic, self.base)

    @classmethod
    def zero(cls, base: int) -> "WcpNumber":
        return cls(1, (0,), CircularWord((0,), base), 0)

    def is_zero(self) -> bool:
        return self.aperiodic_value == 0 and self.period.valuation == 0

    def is_purely_periodic(self) -> bool:
        """Canonical shape of a value in [0, 1) whose expansion repeats
        from the first digit on."""
        return self.aperiodic in ((), (0,)) and self.point == 0

    def to_fraction(self) -> Fraction:
        m = self.base ** len(self.period) - 1
        num = self.sign * (self.aperiodic_value * m + self.period.valuation)
        if self.point >= 0:
            return Fraction(num * self.base**self.point, m)
        return Fraction(num, m * self.base**-self.point)

    def canonical(self) -> "WcpNumber":
        if self.is_zero():
            return WcpNumber.zero(self.base)
        base = self.base
        beta = base - 1
        digits = list(self.aperiodic)
        period = self.period.primitive_period()
        point = self.point
        if period.digits == (beta,):
            digits = list(_word_digits(self.aperiodic_value + 1, base))
            period = CircularWord((0,), base)
        while True:
            floor = max(0, 1 - point)
            while len(digits) > floor and digits[0] == 0:
                del digits[0]
            while len(digits) < floor:
                digits.insert(0, 0)
            if digits and digits[-1] == period.digits[-1]:
                # unshift: the last aperiodic letter re-enters the period
                del digits[-1]
                period = period.shift(-1)
                point += 1
                continue
            if not digits and period.digits[-1] == 0:
                # scaled purely periodic value: a trailing zero rotates
                # out of the significant window the same way, pinning the
                # rotation (the period is not all-zero here)
                period = period.shift(-1)
                point += 1
                continue
            break
        return WcpNumber(self.sign, tuple(digits), period, point)

    # -- arithmetic ----------------------------------------------------

    def __neg__(self) -> "WcpNumber":
        if self.is_zero():
            return self.canonical()
        return WcpNumber(-self.sign, self.aperiodic, self.period, self.point)

    def __add__(self, other: "WcpNumber") -> "WcpNumber":
        xa, ya = align(self, other)
        base = xa.base
        length = len(xa.period)
        m = base**length - 1
        if xa.sign == ya.sign:
            carry, rest = _carry_split(
                xa.period.valuation + ya.period.valuation, m
            )
            whole = xa.aperiodic_value + ya.aperiodic_value + carry
            return WcpNumber(
                xa.sign,
                _word_digits(whole, base),
                CircularWord.from_int(rest, base, length),
                xa.point,
            ).canonical()
        key_x = (xa.aperiodic_value, xa.period.valuation)
        key_y = (ya.aperiodic_value, ya.period.valuation)
        if key_x == key_y:
            return WcpNumber.zero(base)
        (big, small) = (xa, ya) if key_x > key_y else (ya, xa)
        borrow = 1 if big.period.valuation < small.period.valuation else 0
        whole = big.aperiodic_value - small.aperiodic_value - borrow
        rest = (big.period.valuation - small.period.valuation) % m
        return WcpNumber(
            big.sign,
            _word_digits(whole, base),
            CircularWord.from_int(rest, base, length),
            xa.point,
        ).canonical()

    def __sub__(self, other: "WcpNumber") -> "WcpNumber":
        return self + (-other)

    def __mul__(self, other: "WcpNumber") -> "WcpNumber":
        """Product on magnitudes: whole*whole plus the integer actions of
        each whole part on the other period, plus the circular product of
        the periods; periodic contributions summed at one common length
        with their carry joining the whole part."""
        if self.base != other.base:
            raise ValueError(f"mixed bases {self.base} and {other.base}")
        base = self.base
        x, y = self.canonical(), other.canonical()
        sign = x.sign * y.sign
        m_x = base ** len(x.period) - 1
        m_y = base ** len(y.period) - 1
        q1, r1 = _carry_split(x.aperiodic_value * y.period.valuation, m_y)
        q2, r2 = _carry_split(y.aperiodic_value * x.period.valuation, m_x)
        prod = (StarElement.of(x.period) * StarElement.of(y.period)).representative
        length = lcm(len(y.period), len(x.period), len(prod))
        config.check_period(length, "lifted product")
        m = base**length - 1
        total = (
            r1 * (m // m_y) + r2 * (m // m_x) + prod.lift(length).valuation
        )
        carry, rest = _carry_split(total, m)
        whole = x.aperiodic_value * y.aperiodic_value + q1 + q2 + carry
        result = WcpNumber(
            sign,
            _word_digits(whole, base),
            CircularWord.from_int(rest, base, length),
            x.point + y.point,
        ).canonical()
        return result

    def __str__(self) -> str:
        sign = "+" if self.sign > 0 else "-"
        digits = "".join(digit_char(d) for d in self.aperiodic) or "0"
        return f"({sign}, {digits}, ({self.period}), {self.point})"


def align(x: WcpNumber, y: WcpNumber) -> tuple[WcpNumber, WcpNumber]:
    """Present two numbers with the same point offset, period length and
    aperiodic length, using only the identifications (no value change)."""
    if x.base != y.base:
        raise ValueError(f"mixed bases {x.base} and {y.base}")
    point = min(x.point, y.point)
    x = _lower_point(x, point)
    y = _lower_point(y, point)
    length = lcm(len(x.period), len(y.period))
    config.check_period(length, "aligned period")
    x = WcpNumber(x.sign, x.aperiodic, x.period.lift(length), x.point)
    y = WcpNumber(y.sign, y.aperiodic, y.period.lift(length), y.point)
    width = max(len(x.aperiodic), len(y.aperiodic), 1)
    pad = lambda w: (0,) * (width - len(w.aperiodic)) + w.aperiodic
    return (
        WcpNumber(x.sign, pad(x), x.period, point),
        WcpNumber(y.sign, pad(y), y.period, point),
    )


def _lower_point(x: WcpNumber, point: int) -> WcpNumber:
    """Shift identification: move period letters into the aperiodic part
    until the point offset reaches ``point`` (point <= x.point)."""
    digits = list(x.aperiodic)
    period = x.period
    for _ in range(x.point - point):
        digits.append(period.digits[0])
        period = period.shift(1)
    return WcpNumber(x.sign, tuple(digits), period, point)


def semiotic_compare(x: WcpNumber, y: WcpNumber) -> int:
    """Order by the written signs alone: lexicographic on the aligned
    (aperiodic, period) pairs.  Declares the all-(base-1) period smaller
    than the bumped form of the same value, as the raw digits suggest."""
    xa, ya = align(x, y)
    if xa.is_zero() and ya.is_zero():
        return 0
    sx = 0 if xa.is_zero() else xa.sign
    sy = 0 if ya.is_zero() else ya.sign
    if sx != sy:
        return -1 if sx < sy else 1
    key_x = (xa.aperiodic_value, tuple(xa.period.digits))
    key_y = (ya.aperiodic_value, tuple(ya.period.digits))
    if key_x == key_y:
        return 0
    result = -1 if key_x < key_y else 1
    return result if sx >= 0 else -result


def wcp_compare(x: WcpNumber, y: WcpNumber) -> int:
    """The true order: the semiotic one corrected by the identifications,
    so equal values compare equal."""
    xc, yc = x.canonical(), y.canonical()
    if xc == yc:
        return 0
    return semiotic_compare(xc, yc)


# -- conversions -------------------------------------------------------


def wcp_from_dc(x: DcNumber) -> WcpNumber:
    if x.is_negative():
        return -wcp_from_dc(-(x.canonical()))
    x = x.canonical()
    base = x.base
    m = base ** len(x.period) - 1
    scale = base**x.delta.point
    shifted, rest = divmod(scale * x.period.valuation, m)
    whole = x.delta.scaled + shifted
    return WcpNumber(
        1,
        _word_digits(whole, base),
        CircularWord.from_int(rest, base, len(x.period)),
        -x.delta.point,
    ).canonical()


def dc_from_wcp(x: WcpNumber) -> DcNumber:
    base = x.base
    aligned_one = DecimalNumber.from_scaled(1, -x.point, base)
    carry, circ = scalar_action(aligned_one, x.period)
    whole = DecimalNumber.from_scaled(x.aperiodic_value, -x.point, base)
    magnitude = DcNumber(whole + carry, circ).canonical()
    return -magnitude if x.sign < 0 else magnitude


def from_ratio(num: int, den: int, base: int) -> DcNumber:
    """Long division of num/den with remainder-cycle detection.

    Digits are produced left to right; the first remainder seen twice
    closes the period (there are only den distinct remainders, so this
    terminates).  The detected tail is reassembled exactly into the
    canonical pair.
    """
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if base < 2:
        raise ValueError("base must be >= 2")
    negative = (num < 0) != (den < 0)
    num, den = abs(num), abs(den)
    g = gcd(num, den)
    if g > 1:
        num, den = num // g, den // g
    whole, r = divmod(num, den)

    # the aperiodic tail cannot outlast the base factors of the divisor
    aperiodic_bound = 0
    probe = den
    while (g := gcd(probe, base)) > 1:
        while probe % g == 0:
            probe //= g
            aperiodic_bound += 1
    if probe <= 10**9:
        # cheap exact period length; fail fast instead of walking the cap
        config.check_period(multiplicative_order(base, probe), "expansion period")
    limit = aperiodic_bound + config.period_cap + 1

    seen: dict[int, int] = {}
    digits: list[int] = []
    while r not in seen:
        if len(digits) > limit:
            raise CapacityError(f"expansion period of 1/{den} exceeds cap")
        seen[r] = len(digits)
        r *= base
        d, r = divmod(r, den)
        digits.append(d)
    start = seen[r]
    aperiodic, periodic = digits[:start], digits[start:]
    config.check_period(len(periodic), "detected period")

    finite = DecimalNumber.from_scaled(
        whole * base ** len(aperiodic) + digits_to_int(aperiodic, base),
        len(aperiodic),
        base,
    )
    period_word = CircularWord(tuple(periodic), base)
    carry, circ = scalar_action(
        DecimalNumber.from_scaled(1, len(aperiodic), base), period_word
    )
    value = DcNumber(finite + carry, circ).canonical()
    return -value if negative else value


def from_fraction(u: int, v: int, base: int) -> DcNumber:
    if v < 1:
        raise ValueError("denominator must be >= 1")
    return from_ratio(u, v, base)


def to_fraction(x) -> Fraction:
    return x.to_fraction()


# -- the cancellation demonstration ------------------------------------


@dataclass(frozen=True)
class CancellationReport:
    """Both ways of writing a + x when a carries the all-(base-1) period:
    as given, and with the period bumped into the finite part.  The digit
    results coincide, which is what forces the identification."""

    nines_form: DcNumber
    bumped_form: DcNumber
    nines_sum: DcNumber
    bumped_sum: DcNumber

    @property
    def identical(self) -> bool:
        return (
            self.nines_sum.delta == self.bumped_sum.delta
            and self.nines_sum.period == self.bumped_sum.period
        )

    def __str__(self) -> str:
        lines = [
            f"  {self.nines_form} + x = {self.nines_sum}",
            f"  {self.bumped_form} + x = {self.bumped_sum}",
            "identical digit results force the identification"
            if self.identical
            else "results differ",
        ]
        return "\n".join(lines)


def cancellation_demo(a: DcNumber, x: DcNumber) -> CancellationReport:
    """Add x to the two denotations of the same value a and report that
    the digit-level sums coincide.

    ``a`` must carry an all-(base-1) period and ``x`` a nontrivial one;
    with a trivial period the two routes stay distinguishable and the
    demonstration says nothing.
    """
    beta = a.base - 1
    if any(d != beta for d in a.period.digits):
        raise ValueError("demonstration input must carry the all-(base-1) period")
    if x.period.valuation == 0:
        raise ValueError("x must have a nontrivial period")
    bumped = DcNumber(a.delta + 1, CircularWord((0,) * len(a.period), a.base))
    sum_nines = a._add_raw(x)
    sum_bumped = bumped._add_raw(x)
    return CancellationReport(a, bumped, sum_nines, sum_bumped)


__all__ = [
    "CancellationReport",
    "DcNumber",
    "Fraction",
    "WcpNumber",
    "align",
    "cancellation_demo",
    "dc_from_wcp",
    "from_fraction",
    "from_ratio",
    "semiotic_compare",
    "to_fraction",
    "wcp_compare",
    "wcp_from_dc",
]
