"""Process-wide capacity limits.

Both caps are read by the arithmetic routines on every lifting or
enumeration step.  They are meant to be set once at startup (the CLI does
this from ``--max-period``) and treated as read-only afterwards; the
library itself never mutates them.
"""

from .errors import CapacityError

# Longest circular word any lifting operation may build, in digits.
DEFAULT_PERIOD_CAP = 1_000_000
period_cap = DEFAULT_PERIOD_CAP

# Largest word family (b**p) the orbit counters will enumerate.
ENUMERATION_CAP = 100_000_000


def check_period(n: int, what: str = "period") -> int:
    """Return ``n`` unchanged, or raise if it exceeds the period cap."""
    if n > period_cap:
        raise CapacityError(f"{what} of {n} digits exceeds cap of {period_cap}")
    return n
