"""Period-length laws, repunit divisibility, product-length bounds, and
the integer-or-irrational classifier for monic polynomials.

Every closed formula here is paired with a brute-force scan so tests can
confront the two ("formula value" vs. "first n that actually works").
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, gcd, lcm

from . import config
from .errors import CapacityError

# Below this modulus the multiplicative order is computed exactly via
# factorization; above it we fall back to stepping powers, capped.
_SMALL_ORDER_LIMIT = 10**9


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs)."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for q in (d, d + 2):
            while n % q == 0:
                factors[q] = factors.get(q, 0) + 1
                n //= q
        d += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, k in factorize(n).items():
        divs = [d * p**e for d in divs for e in range(k + 1)]
    return sorted(divs)


def _carmichael(factors: dict[int, int]) -> int:
    lam = 1
    for p, k in factors.items():
        if p == 2:
            pk = 1 if k == 1 else 2 if k == 2 else 2 ** (k - 2)
        else:
            pk = p ** (k - 1) * (p - 1)
        lam = lcm(lam, pk)
    return lam


def multiplicative_order(b: int, v: int, max_order: int | None = None) -> int:
    """Smallest ell >= 1 with b**ell == 1 (mod v); requires gcd(b, v) == 1.

    Exact via factorization for moderate v; for huge moduli the order is
    found by stepping powers and a cap turns runaway searches into an
    explicit capacity error.
    """
    if v < 1:
        raise ValueError("modulus must be >= 1")
    if v == 1:
        return 1
    if gcd(b, v) != 1:
        raise ValueError(f"{b} is not invertible modulo {v}")
    if v <= _SMALL_ORDER_LIMIT:
        order = _carmichael(factorize(v))
        for q in factorize(order):
            while order % q == 0 and pow(b, order // q, v) == 1:
                order //= q
        return order
    cap = config.period_cap if max_order is None else max_order
    acc = b % v
    k = 1
    while acc != 1:
        k += 1
        if k > cap:
            raise CapacityError(f"multiplicative order of {b} mod {v} exceeds {cap}")
        acc = acc * b % v
    return k


def split_denominator(v: int, b: int) -> tuple[int, int]:
    """Split v into (t, v') with v' the part coprime to b and t minimal
    such that v divides v' * b**t."""
    if v < 1:
        raise ValueError("v must be >= 1")
    coprime = v
    while (g := gcd(coprime, b)) > 1:
        coprime //= g
    carried = v // coprime
    t = 0
    power = 1
    while power % carried:
        t += 1
        power *= b
    return t, coprime


@dataclass(frozen=True)
class PeriodLengthReport:
    """How 1/v expands in base b: aperiodic prefix, period, and the
    witness M with M * (coprime part of v) == b**period_len - 1."""

    v: int
    base: int
    aperiodic_len: int
    period_len: int
    witness: int


def period_length(v: int, b: int) -> PeriodLengthReport:
    t, coprime = split_denominator(v, b)
    ell = multiplicative_order(b, coprime)
    witness = (b**ell - 1) // coprime
    return PeriodLengthReport(v, b, t, ell, witness)


def lcm_divisibility(ell: int, ell2: int, b: int) -> int:
    """Smallest n with b**n - 1 divisible by both b**ell - 1 and
    b**ell2 - 1; equals lcm(ell, ell2)."""
    if ell < 1 or ell2 < 1:
        raise ValueError("lengths must be >= 1")
    if b < 2:
        raise ValueError("base must be >= 2")
    return lcm(ell, ell2)


def lcm_divisibility_scan(ell: int, ell2: int, b: int, limit: int) -> int:
    """Brute-force companion of :func:`lcm_divisibility`: scan n upward."""
    d1, d2 = b**ell - 1, b**ell2 - 1
    for n in range(1, limit + 1):
        m = b**n - 1
        if m % d1 == 0 and m % d2 == 0:
            return n
    raise ValueError(f"no n <= {limit} found")


def product_period_length(ell: int, ell2: int, b: int) -> int:
    """Smallest n with (b**ell - 1)(b**ell2 - 1) dividing b**n - 1:
    (b**gcd(ell, ell2) - 1) * lcm(ell, ell2)."""
    if ell < 1 or ell2 < 1:
        raise ValueError("lengths must be >= 1")
    if b < 2:
        raise ValueError("base must be >= 2")
    return (b ** gcd(ell, ell2) - 1) * lcm(ell, ell2)


def product_period_scan(ell: int, ell2: int, b: int, limit: int | None = None) -> int:
    """Brute-force minimal n with (b**ell - 1)(b**ell2 - 1) | b**n - 1.

    Only multiples of lcm(ell, ell2) can work, so the scan steps by the
    lcm with an incrementally maintained power.
    """
    modulus = (b**ell - 1) * (b**ell2 - 1)
    m = lcm(ell, ell2)
    if limit is None:
        limit = product_period_length(ell, ell2, b)
    step = pow(b, m, modulus)
    acc = step
    n = m
    while acc != 1 % modulus:
        n += m
        if n > limit:
            raise ValueError(f"no n <= {limit} found")
        acc = acc * step % modulus
    return n


def general_square_length(b: int) -> int:
    """Generic minimal period of a product of two length-2 periods."""
    if b < 2:
        raise ValueError("base must be >= 2")
    return 2 * (b**2 - 1)


def integer_nth_root(m: int, n: int) -> int | None:
    """Exact r with r**n == m for m >= 0, or None."""
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    if m in (0, 1):
        return m
    r = int(round(m ** (1.0 / n)))
    for cand in range(max(r - 2, 1), r + 3):
        if cand**n == m:
            return cand
    # float seed can be off for big m; fall back to bisection
    lo, hi = 1, 1 << (m.bit_length() // n + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid**n
        if p == m:
            return mid
        if p < m:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


@dataclass(frozen=True)
class UnitaryPolynomial:
    """A monic polynomial; coefficients ascending, integers or exact
    base-b decimals (anything with the arithmetic the evaluator needs)."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if len(coeffs) < 2:
            raise ValueError("degree must be >= 1")
        lead = coeffs[-1]
        if not _is_one(lead):
            raise ValueError(f"leading coefficient must be 1, got {lead}")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = self.coefficients[-1]
        for c in reversed(self.coefficients[:-1]):
            acc = acc * x + c
        return acc


def _is_one(c) -> bool:
    if isinstance(c, int):
        return c == 1
    is_one = getattr(c, "is_one", None)
    return is_one() if callable(is_one) else False


@dataclass(frozen=True)
class RootClassification:
    """Integer roots of a monic integer polynomial, plus the guarantee
    that every remaining real root is irrational."""

    integer_roots: tuple[int, ...]
    verdict: str


def classify_root(
    poly: UnitaryPolynomial, search_bound: int | None = None
) -> RootClassification:
    """Find all integer roots of a monic polynomial over the integers.

    Candidates are the divisors of the constant term (a root divides it),
    optionally capped at ``search_bound``.  Any real root that is not in
    the returned list is irrational: a monic integer polynomial has no
    non-integer rational roots.
    """
    coeffs = list(poly.coefficients)
    if any(not isinstance(c, int) for c in coeffs):
        raise ValueError("integer classifier needs integer coefficients")
    roots = []
    while len(coeffs) > 1 and coeffs[0] == 0:
        # zero constant term: 0 is a root, peel one factor of X
        if 0 not in roots:
            roots.append(0)
        coeffs = coeffs[1:]
    if len(coeffs) > 1:
        constant = abs(coeffs[0])
        reduced = UnitaryPolynomial(tuple(coeffs))
        for d in divisors(constant):
            if search_bound is not None and d > search_bound:
                break
            for cand in (d, -d):
                if reduced(cand) == 0 and cand not in roots:
                    roots.append(cand)
    roots.sort()
    if roots:
        verdict = "all real roots outside the integer list are irrational"
    else:
        verdict = "no integer roots; all real roots are irrational"
    return RootClassification(tuple(roots), verdict)


@dataclass(frozen=True)
class DecimalRootClassification:
    """Roots with finite base-b expansions, the argument used, and the
    guarantee that every remaining real root is irrational."""

    roots: tuple
    verdict: str
    argument: str


def classify_root_decimal(poly: UnitaryPolynomial, b: int) -> DecimalRootClassification:
    """Find all roots of a monic polynomial over exact base-b decimals
    that are themselves finite base-b decimals.

    For a pure power X**n - d the digit-count criterion applies: if d has
    k fractional digits in lowest terms then d itself, raised from a root
    with j fractional digits, must satisfy n*j == k, so n not dividing k
    settles irrationality outright.  The general case rescales X by a
    power of b so every finite-decimal root becomes an integer root of a
    monic integer polynomial, handled by :func:`classify_root`.
    """
    from .decimals import DecimalNumber

    coeffs = [
        c if isinstance(c, DecimalNumber) else DecimalNumber.from_int(c, b)
        for c in poly.coefficients
    ]
    if any(c.base != b for c in coeffs):
        raise ValueError("coefficient base mismatch")
    n = len(coeffs) - 1

    if n >= 2 and all(c.is_zero() for c in coeffs[1:-1]):
        d = -coeffs[0]
        k = d.point
        if k % n != 0:
            return DecimalRootClassification(
                (),
                f"no base-{b} decimal roots; all real roots are irrational",
                f"digit-count: a decimal root with j fractional digits needs "
                f"{n}*j == {k}, impossible",
            )
        scaled = d.scaled  # d = scaled / b**k in lowest terms
        root_point = k // n
        roots = []
        r = integer_nth_root(abs(scaled), n)
        if r is not None:
            if scaled >= 0:
                roots.append(DecimalNumber.from_scaled(r, root_point, b))
                if n % 2 == 0 and r != 0:
                    roots.append(DecimalNumber.from_scaled(-r, root_point, b))
            elif n % 2 == 1:
                roots.append(DecimalNumber.from_scaled(-r, root_point, b))
        return _decimal_report(roots, b, "digit-count plus exact integer root")

    # rescale so finite-decimal roots become integer roots: X = Y / b**t
    t = 0
    for i, c in enumerate(coeffs[:-1]):
        if not c.is_zero():
            t = max(t, ceil(c.point / (n - i)))
    int_coeffs = []
    for i, c in enumerate(coeffs[:-1]):
        scale = t * (n - i) - c.point
        int_coeffs.append(c.scaled * b**scale)
    int_coeffs.append(1)
    integer_roots = classify_root(UnitaryPolynomial(tuple(int_coeffs))).integer_roots
    roots = [DecimalNumber.from_scaled(y, t, b) for y in integer_roots]
    return _decimal_report(roots, b, f"rescaled by {b}**{t} to an integer polynomial")


def _decimal_report(roots, b: int, argument: str) -> DecimalRootClassification:
    if roots:
        verdict = f"all real roots outside the base-{b} decimal list are irrational"
    else:
        verdict = f"no base-{b} decimal roots; all real roots are irrational"
    return DecimalRootClassification(tuple(roots), verdict, argument)


def period_growth(p, n_max: int) -> list[int]:
    """Primitive period length of the k-th circular power of p, k = 1..n_max.

    Powers are taken with the circular product; the reported length is
    that of the value's shortest period.  The sequence is unbounded but
    not monotone.
    """
    from .group import StarElement

    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    base = StarElement.of(p) if not isinstance(p, StarElement) else p
    if base.representative.valuation == 0:
        raise ValueError("period growth needs a nontrivial word")
    lengths = []
    acc = base
    for k in range(1, n_max + 1):
        if k > 1:
            acc = acc * base
        lengths.append(len(acc.representative))
    return lengths
