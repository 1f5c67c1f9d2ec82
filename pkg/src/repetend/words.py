"""Finite and circular digit words over the alphabet {0, ..., base-1}.

A finite word reads as an integer in the usual positional way (leftmost
digit most significant).  A circular word is a nonempty word whose indices
live modulo its length, so its last letter is followed by its first; the
canonical textual form always starts at index 0, and rotated copies are
distinct words here (value-level identifications live elsewhere).

Also provides two enumeration demonstrations over these words: the orbit
decomposition behind b**p == k*p + b for prime p, and the count of cyclic
binary words avoiding the factor 11.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from . import config
from .errors import CapacityError

_DIGIT_CHARS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def digit_char(d: int) -> str:
    return _DIGIT_CHARS[d]


def char_digit(ch: str) -> int:
    d = _DIGIT_CHARS.find(ch.upper())
    if d < 0:
        raise ValueError(f"not a digit: {ch!r}")
    return d


def int_to_digits(n: int, base: int, length: int) -> tuple[int, ...]:
    """Big-endian base-`base` digits of ``n`` zero-padded to ``length``.

    Splits recursively so huge values stay subquadratic.
    """
    if n < 0:
        raise ValueError("negative value has no digit word")
    if length == 0:
        if n:
            raise ValueError(f"{n} does not fit in 0 digits")
        return ()
    if n >= base**length:
        raise ValueError(f"{n} does not fit in {length} base-{base} digits")
    out = [0] * length

    def rec(n: int, lo: int, hi: int) -> None:
        if hi - lo <= 32:
            i = hi - 1
            while n:
                n, d = divmod(n, base)
                out[i] = d
                i -= 1
            return
        half = (hi - lo) // 2
        hi_part, lo_part = divmod(n, base**half)
        rec(hi_part, lo, hi - half)
        rec(lo_part, hi - half, hi)

    rec(n, 0, length)
    return tuple(out)


def digits_to_int(digits, base: int) -> int:
    """Positional value of a big-endian digit sequence (empty -> 0)."""

    def rec(lo: int, hi: int) -> int:
        if hi - lo <= 32:
            acc = 0
            for i in range(lo, hi):
                acc = acc * base + digits[i]
            return acc
        mid = (lo + hi + 1) // 2
        return rec(lo, mid) * base ** (hi - mid) + rec(mid, hi)

    return rec(0, len(digits)) if digits else 0


def digit_count(n: int, base: int) -> int:
    """Number of base-`base` digits of n >= 0 (0 counts as none)."""
    if n < 0:
        raise ValueError("digit_count needs n >= 0")
    if n == 0:
        return 0
    count = 1
    power, exp = base, 1
    stack = []
    while power <= n:
        stack.append((power, exp))
        power, exp = power * power, exp * 2
    for power, exp in reversed(stack):
        if power <= n:
            n //= power
            count += exp
    return count


def _check_digits(digits: tuple[int, ...], base: int) -> None:
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if digits and not (0 <= min(digits) and max(digits) < base):
        bad = next(d for d in digits if not 0 <= d < base)
        raise ValueError(f"digit {bad} out of range for base {base}")


def _check_same_base(a, b) -> None:
    if a.base != b.base:
        raise ValueError(f"mixed bases {a.base} and {b.base}")


@dataclass(frozen=True)
class FiniteWord:
    """A possibly-empty digit word; empty reads as 0."""

    digits: tuple[int, ...]
    base: int

    def __post_init__(self):
        _check_digits(self.digits, self.base)

    @classmethod
    def from_int(cls, n: int, base: int, length: int | None = None) -> "FiniteWord":
        if length is None:
            length = digit_count(n, base)
        return cls(int_to_digits(n, base, length), base)

    @cached_property
    def valuation(self) -> int:
        return digits_to_int(self.digits, self.base)

    def __len__(self) -> int:
        return len(self.digits)

    def concat(self, other: "FiniteWord") -> "FiniteWord":
        _check_same_base(self, other)
        return FiniteWord(self.digits + other.digits, self.base)

    def repeat(self, n: int) -> "FiniteWord":
        if n < 1:
            raise ValueError("repetition count must be >= 1")
        return FiniteWord(self.digits * n, self.base)

    def __str__(self) -> str:
        return "".join(digit_char(d) for d in self.digits)


@dataclass(frozen=True)
class CircularWord:
    """A nonempty digit word indexed cyclically."""

    digits: tuple[int, ...]
    base: int

    def __post_init__(self):
        if not self.digits:
            raise ValueError("circular word must be nonempty")
        _check_digits(self.digits, self.base)

    @classmethod
    def from_int(cls, n: int, base: int, length: int) -> "CircularWord":
        return cls(int_to_digits(n, base, length), base)

    @cached_property
    def valuation(self) -> int:
        return digits_to_int(self.digits, self.base)

    def __len__(self) -> int:
        return len(self.digits)

    def shift(self, k: int = 1) -> "CircularWord":
        """Rotate left by ``k`` positions (negative k rotates right)."""
        k %= len(self.digits)
        if k == 0:
            return self
        return CircularWord(self.digits[k:] + self.digits[:k], self.base)

    def repeat(self, n: int) -> "CircularWord":
        if n < 1:
            raise ValueError("repetition count must be >= 1")
        config.check_period(len(self.digits) * n)
        return CircularWord(self.digits * n, self.base)

    def lift(self, length: int) -> "CircularWord":
        """Repeat up to ``length`` digits; ``length`` must be a multiple."""
        q, r = divmod(length, len(self.digits))
        if r:
            raise ValueError(f"cannot lift length {len(self.digits)} to {length}")
        return self.repeat(q)

    def primitive_period(self) -> "CircularWord":
        """Shortest word of which this one is a repetition.

        The smallest k > 0 whose rotation fixes the word divides the
        length and is exactly the primitive length; doubling the word
        finds it with one scan (digits fit in bytes since base <= 36).
        """
        s = bytes(self.digits)
        k = (s + s).index(s, 1)
        if k == len(s):
            return self
        return CircularWord(self.digits[:k], self.base)

    def is_constant(self) -> bool:
        first = self.digits[0]
        return all(d == first for d in self.digits)

    def complement(self) -> "CircularWord":
        """Replace every letter w by base-1-w."""
        beta = self.base - 1
        return CircularWord(tuple(beta - d for d in self.digits), self.base)

    def __str__(self) -> str:
        return "".join(digit_char(d) for d in self.digits)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d = 11
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def fermat_orbit_count(b: int, p: int) -> tuple[int, int]:
    """Decompose all b**p circular words of length p into shift orbits.

    Returns ``(orbit_count, constant_count)`` where ``orbit_count`` is the
    number of size-p orbits and ``constant_count`` the number of constant
    words (orbits of size 1).  Since the decomposition is exhaustive,
    b**p == orbit_count * p + constant_count holds exactly, which is the
    congruence b**p == b (mod p).
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if not is_prime(p):
        raise ValueError(f"orbit decomposition needs a prime length, got {p}")
    total = b**p
    if total > config.ENUMERATION_CAP:
        raise CapacityError(
            f"{b}**{p} = {total} words exceed enumeration cap {config.ENUMERATION_CAP}"
        )
    bp1 = b ** (p - 1)
    visited = bytearray(total)
    orbit_count = 0
    constant_count = 0
    for x in range(total):
        if visited[x]:
            continue
        size = 0
        y = x
        while True:
            visited[y] = 1
            size += 1
            q, r = divmod(y, b)
            y = r * bp1 + q  # left rotation of the digit word
            if y == x:
                break
        if size == 1:
            constant_count += 1
        else:
            # p prime: a nonconstant word is fixed by no nontrivial rotation.
            assert size == p
            orbit_count += 1
    assert total == orbit_count * p + constant_count
    return orbit_count, constant_count


def count_cyclic_binary_avoiding_11(length: int) -> int:
    """Number of binary circular words of ``length`` with no cyclic factor 11."""
    if length < 1:
        raise ValueError("length must be >= 1")
    if 2**length > config.ENUMERATION_CAP:
        raise CapacityError(f"2**{length} words exceed enumeration cap")
    count = 0
    top = length - 1
    for m in range(2**length):
        wrapped = (m >> 1) | ((m & 1) << top)
        if m & wrapped == 0:
            count += 1
    return count


def lucas_orbit_count(p: int) -> int:
    """Count cyclic binary words of prime length p avoiding the factor 11.

    The count satisfies ``count % p == 1``, which the function asserts; the
    same orbit argument as :func:`fermat_orbit_count` applies because the
    constraint is rotation-invariant and only the two constant words 0...0
    and 1...1 could be fixed by a rotation (1...1 is excluded, 0...0 kept).
    """
    if not is_prime(p):
        raise ValueError(f"need a prime length, got {p}")
    count = count_cyclic_binary_avoiding_11(p)
    assert count % p == 1, f"count {count} not congruent to 1 mod {p}"
    return count
