"""Exception types shared across the package."""


class DomainError(ValueError):
    """Raised when inputs are structurally valid but mathematically invalid
    for the requested operation (wrong sizes, incomparable pairs, transposition
    not applicable, ...).  The CLI maps this to exit code 3."""


class NotComparableError(DomainError):
    """Raised when an interval [u, v] is requested but u is not <= v."""
