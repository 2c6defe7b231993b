class FractionalError(Exception):
    """
    Base class for every error raised by the package.
    """


class DomainError(FractionalError, ValueError):
    """
    A parameter or evaluation point lies outside the domain of the operation.
    """


class AccuracyError(FractionalError):
    """
    The requested precision could not be certified.
    """


class QuadratureError(FractionalError):
    """
    An adaptive quadrature did not reach its error target.
    """


class TailError(QuadratureError):
    """
    The truncated tail of a Levy integral could not be bounded below the tolerance.
    """


class SeedError(FractionalError, ValueError):
    """
    Invalid seed or batch configuration for a Monte Carlo sampler.
    """


class UsageError(FractionalError, ValueError):
    """
    Malformed command-line request.
    """


class IoError(FractionalError, OSError):
    """
    An output file could not be written.
    """
