"""Shared exception types."""


class CapExceededError(RuntimeError):
    """An exact enumeration would exceed its configured instance-size cap.

    Caps are hard errors by design: no routine in this package ever returns
    an approximate answer silently.
    """
