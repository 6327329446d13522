"""Exception hierarchy.

Validation problems subclass :class:`ValueError`; numerical failures subclass
:class:`ArithmeticError`. The CLI maps the two groups to exit codes 2 and 3.
"""


class SpiralError(Exception):
    """Base class for every error raised by the package."""


class ValidationError(SpiralError, ValueError):
    pass


class NumericalError(SpiralError, ArithmeticError):
    pass


class InvalidParameter(ValidationError):
    pass


class InvalidDomain(ValidationError):
    pass


class OutOfDomain(ValidationError):
    pass


class DomainError(ValidationError):
    """Argument outside the supported branch of a special function."""


class InvalidInterval(ValidationError):
    pass


class InsufficientSamples(ValidationError):
    pass


class NonConvergence(NumericalError):
    """An iterative procedure hit its cap; ``partial`` holds the last state."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NonFiniteEvaluation(NumericalError):
    pass


class DegenerateRho(NumericalError):
    pass


class DegenerateAbscissa(NumericalError):
    pass


class InfeasibleSpec(NumericalError):
    pass
