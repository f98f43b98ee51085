"""Exception hierarchy.

The CLI maps these onto exit codes: argument-type errors exit 2, numeric
errors exit 3 and verification failures exit 4.
"""


class GausschainError(Exception):
    """Base class for every error raised by this package."""


class ArgumentError(GausschainError, ValueError):
    """An argument is malformed or outside the documented domain."""


class DomainError(ArgumentError):
    """A value lies outside the range where the method is defined or reliable."""


class ResourceLimitError(ArgumentError):
    """A request would exceed a deliberate size guard (e.g. factorial enumeration)."""


class NumericError(GausschainError, ArithmeticError):
    """A numerical procedure produced a non-finite or otherwise unusable value."""


class ConvergenceError(NumericError):
    """An iterative or adaptive method did not reach its tolerance within budget."""


class SimulationError(NumericError):
    """The ODE integration did not produce the expected events."""


class IntegrationQualityError(SimulationError):
    """The ODE integration drifted beyond the allowed energy error."""


class VerificationError(GausschainError, AssertionError):
    """A cross-check between independent routes disagreed beyond its bound."""
