import logging
import math
from typing import Callable, Optional, Sequence, Tuple

from scipy import integrate

from src.exceptions import QuadratureError
from src.numerics.numerics_constants import NumericsConstants

logger = logging.getLogger(__name__)


def integrate_interval(func: Callable[[float], float], lower: float, upper: float,
                       abs_tol: float = NumericsConstants.QUAD_DEFAULT_ABSOLUTE_TOLERANCE,
                       rel_tol: float = NumericsConstants.QUAD_DEFAULT_RELATIVE_TOLERANCE,
                       points: Optional[Sequence[float]] = None, weight: Optional[str] = None,
                       wvar=None) -> Tuple[float, float]:
    """
    Adaptive Gauss-Kronrod quadrature of ``func`` over ``[lower, upper]``.

    :param func: Scalar integrand.
    :param lower: Lower limit, may be ``-inf``.
    :param upper: Upper limit, may be ``inf``.
    :param abs_tol: Absolute error request passed to QUADPACK.
    :param rel_tol: Relative error request passed to QUADPACK.
    :param points: Interior break points (finite intervals only).
    :param weight: Optional QUADPACK weight ('alg', 'cos', 'sin', ...).
    :param wvar: Parameters of the weight function.
    :return: (value, estimated absolute error).
    """
    if lower == upper:
        return 0.0, 0.0
    kwargs = dict(epsabs=abs_tol, epsrel=rel_tol, limit=NumericsConstants.QUAD_SUBDIVISION_LIMIT, full_output=1)
    if weight is not None:
        kwargs.update(weight=weight, wvar=wvar)
    elif points is not None:
        inner = sorted(p for p in points if lower < p < upper)
        if inner:
            kwargs.update(points=inner)
    result = integrate.quad(func, lower, upper, **kwargs)
    return float(result[0]), float(result[1])


def integrate_half_line(func: Callable[[float], float], split: float, upper: Optional[float] = None,
                        abs_tol: float = NumericsConstants.QUAD_DEFAULT_ABSOLUTE_TOLERANCE,
                        rel_tol: float = NumericsConstants.QUAD_DEFAULT_RELATIVE_TOLERANCE) -> Tuple[float, float]:
    """
    Integrate ``func`` over (0, upper) after the substitution s = e^u, split at ``split``.

    :param func: Integrand on the positive half-line.
    :param split: Positive split point (usually the natural scale of the integrand).
    :param upper: Optional finite truncation point; ``None`` integrates to infinity, dropping s > e^300.
    :return: (value, estimated absolute error).
    """
    def log_integrand(u: float) -> float:
        if u > NumericsConstants.HALF_LINE_LOG_CUTOFF:
            return 0.0
        s = math.exp(u)
        if s == 0.0:
            return 0.0
        return func(s) * s

    log_upper = math.inf if upper is None else math.log(upper)
    log_split = math.log(split)
    if log_split >= log_upper:
        log_split = log_upper - 1.0
    left, left_error = integrate_interval(log_integrand, -math.inf, log_split, abs_tol, rel_tol)
    right, right_error = integrate_interval(log_integrand, log_split, log_upper, abs_tol, rel_tol)
    return left + right, left_error + right_error


def require_accuracy(value: float, error: float, tolerance: float, what: str) -> float:
    """
    Return ``value`` when its error estimate is within ``tolerance``, else raise QuadratureError.
    """
    if not math.isfinite(value) or error > tolerance:
        raise QuadratureError(f"{what}: quadrature error estimate {error:.3e} exceeds tolerance {tolerance:.1e}")
    return value
