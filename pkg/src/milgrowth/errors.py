"""Exception hierarchy.

Two families matter to callers: ``ValidationError`` for inputs that break a
type invariant (bad fractions, malformed schedules, unknown presets) and
``ComputationError`` for valid inputs whose evaluation cannot proceed. The
command line maps them to exit codes 1 and 2.
"""


class ModelError(Exception):
    """Base class for all package errors."""


class ValidationError(ModelError, ValueError):
    """An input violates a documented invariant.

    ``field`` is a dotted path to the offending value when one is known.
    """

    def __init__(self, message, field=None):
        self.field = field
        if field:
            message = f"{field}: {message}"
        super().__init__(message)


class ComputationError(ModelError, ArithmeticError):
    """Valid inputs, but the requested quantity does not exist."""


class InstabilityError(ComputationError):
    def __init__(self, denominator):
        self.denominator = denominator
        super().__init__(
            f"goods market unstable: 1 - c1*(1 - tau) - i1 = {denominator!r} <= 0"
        )


class AnnihilationError(ComputationError):
    """Capital reached zero or below; raised with the failing period when known."""

    def __init__(self, message, period=None):
        self.period = period
        if period is not None:
            message = f"period {period}: {message}"
        super().__init__(message)


class SingularityError(ComputationError):
    pass


class DegenerateError(ComputationError):
    """The growth function has no hump to locate."""
