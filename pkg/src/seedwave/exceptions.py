"""Exception hierarchy.

Every error raised for bad input derives from :class:`SeedwaveError` and from
``ValueError`` so that generic callers can catch either.
"""


class SeedwaveError(Exception):
    """Base class for all package errors."""


class ValidationError(SeedwaveError, ValueError):
    """Input violates a documented precondition."""


class SequenceLengthError(ValidationError):
    pass


class NonFiniteValueError(ValidationError):
    pass


class SamplingPeriodError(ValidationError):
    pass


class NotCenteredError(ValidationError):
    """Operation needs a seed indexed symmetrically about t = 0."""


class ParityError(ValidationError):
    pass


class FileFormatError(SeedwaveError, ValueError):
    """A seed, signal or grid file could not be parsed."""


class AdmissibilityError(SeedwaveError, ValueError):
    """Seed values do not sum to zero, so the wavelet is not admissible."""


class DegenerateInputError(SeedwaveError, ValueError):
    """All-zero seed or similar input for which the result is meaningless."""


class SingularMatrixError(SeedwaveError, ArithmeticError):
    pass


class ConvergenceError(SeedwaveError, ArithmeticError):
    """Adaptive quadrature ran out of depth.

    The best available estimate is kept on the exception.
    """

    def __init__(self, message, value=None, error_estimate=None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
