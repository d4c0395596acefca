"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class UnsupportedRangeError(ValueError):
    """The argument is mathematically fine but outside the supported range."""


class InsufficientDataError(ValueError):
    """Not enough data points to perform the requested estimate."""


class CrossCheckError(ArithmeticError):
    """Two independent reference computations disagree beyond tolerance.

    Carries both values so callers can diagnose which side is off.
    """

    def __init__(self, message: str, value_a: complex, value_b: complex):
        super().__init__(message)
        self.value_a = value_a
        self.value_b = value_b


class UsageError(ValueError):
    """Invalid command-line flags or flag combinations."""
