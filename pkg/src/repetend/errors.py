"""Exception types shared across the package."""


class CapacityError(Exception):
    """An intermediate word or enumeration would exceed a configured cap.

    Raised instead of silently truncating: period lengths of products grow
    explosively, so refusing loudly is the only honest behaviour.
    """
