"""Error types shared by the evaluators and the CLI."""


class LerchError(Exception):
    """Base class for every error raised by lerchzeta."""


class ArgumentExcluded(LerchError):
    """An argument lies in a set excluded from the domain (zero log argument, w in Z<=0, ...)."""


class PoleAtOne(LerchError):
    """The simple pole at s=1 of Phi(1, s, w) was hit."""


class OutsideSeriesRegion(LerchError):
    """The defining series was requested outside its region of absolute convergence."""


class PoleOnPath(LerchError):
    """An integration path passes through a pole of the integrand."""


class IllConditioned(LerchError):
    """The evaluation cannot be carried out accurately in double precision."""

    def __init__(self, message: str, amplification: float = float("inf")):
        """Initialize the error.

        Args:
            message: Human readable description
            amplification: Estimated factor by which rounding errors are amplified
        """
        super().__init__(message)
        self.amplification = amplification


class ConvergenceFailure(LerchError):
    """A quadrature or series did not reach its tolerance within its budget."""


class BranchConfigInvalid(LerchError):
    """The pair (phi, phi') violates the branch conventions."""


class ParameterError(LerchError):
    """Continuation parameters (alpha, N, m, eps) are invalid for the target point."""


# Exit codes used by the command line front end.
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_DOMAIN = 2
EXIT_NUMERICAL = 3
EXIT_USAGE = 64

_DOMAIN_ERRORS = (
    ArgumentExcluded,
    PoleAtOne,
    OutsideSeriesRegion,
    BranchConfigInvalid,
    ParameterError,
)
_NUMERICAL_ERRORS = (ConvergenceFailure, PoleOnPath, IllConditioned)


def handle_error(error: Exception) -> str:
    """Standard error formatter.

    Args:
        error: The exception that occurred

    Returns:
        Formatted error message
    """
    error_type = type(error).__name__
    return f"{error_type}: {str(error)}"


def exit_code_for(error: Exception) -> int:
    """Map an exception to the documented process exit code.

    Args:
        error: The exception that occurred

    Returns:
        2 for domain errors, 3 for numerical failures, 1 otherwise
    """
    if isinstance(error, _DOMAIN_ERRORS):
        return EXIT_DOMAIN
    if isinstance(error, _NUMERICAL_ERRORS):
        return EXIT_NUMERICAL
    return EXIT_CHECK_FAILED
