"""Exception hierarchy shared by all modules."""


class InvalidInputError(ValueError):
    """Arguments violate a documented precondition."""


class DegenerateInputError(InvalidInputError):
    """Points that must be pairwise distinct coincide (or nearly so)."""


class SingularSeriesError(ZeroDivisionError):
    """A truncated series with zero constant term cannot be inverted."""


class SingularMatrixError(ZeroDivisionError):
    """Linear system has no unique solution."""


class SizeError(InvalidInputError):
    """Enumeration would exceed the configured term cap."""
