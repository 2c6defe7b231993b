import logging
import math

import numpy as np

from src.exceptions import AccuracyError, DomainError
from src.numerics.quadrature_utils import integrate_interval, require_accuracy
from src.special_functions.function_specs import MLSpec
from src.special_functions.gamma_series import MittagLefflerSeries
from src.special_functions.special_functions_constants import SpecialFunctionsConstants

logger = logging.getLogger(__name__)


def mittag_leffler(spec: MLSpec, z: float) -> float:
    """
    Mittag-Leffler function E_{beta,gamma}(z) for real z.

    One-parameter functions with beta < 1 switch to the spectral integral for z < -5, and earlier when
    the largest series term e^((-z)^(1/beta)) would exceed e^10; everything else is summed as a series
    with precision escalation.

    :param spec: beta > 0 and gamma.
    :param z: Real argument.
    :return: E_{beta,gamma}(z) with relative error below 1e-8.
    """
    if not math.isfinite(z):
        raise DomainError(f"Mittag-Leffler argument must be finite: {z}")
    if spec.gamma == 1.0:
        if spec.beta == 1.0:
            return math.exp(z)
        if spec.beta < 1.0 and z < 0.0 and _prefers_spectral(spec.beta, -z):
            return mittag_leffler_spectral(spec.beta, -z)
    return mittag_leffler_series(spec, z)


def _prefers_spectral(beta: float, x: float) -> bool:
    # log of the largest series term is about x^(1/beta)
    return (-x < SpecialFunctionsConstants.ML_SPECTRAL_THRESHOLD
            or math.log(x) / beta > math.log(SpecialFunctionsConstants.ML_SERIES_MAX_LOG_PEAK))


def mittag_leffler_series(spec: MLSpec, z: float) -> float:
    series = MittagLefflerSeries(spec.beta, spec.gamma, spec.precision_target, spec.absolute_floor)
    return float(series.evaluate(float(z)))


def mittag_leffler_spectral(beta: float, x: float) -> float:
    """
    E_beta(-x) for x >= 0 and beta in (0, 1) through the completely monotone representation

        E_beta(-x) = sin(beta pi)/pi
                     * int_0^inf w^(beta-1) e^(-w x^(1/beta)) / (w^(2 beta) + 2 w^beta cos(beta pi) + 1) dw.

    With v = w x^(1/beta) this is sin(beta pi)/(pi x) * int_0^inf v^(beta-1) e^(-v) / (r^2 + 2 r cos(beta pi) + 1) dv,
    r = v^beta / x. The v^(beta-1) endpoint is integrated with an algebraic weight; the denominator has its
    minimum at v = x^(1/beta).

    :raises QuadratureError: when the quadrature error estimate exceeds the relative tolerance.
    """
    if not 0.0 < beta < 1.0:
        raise DomainError(f"spectral representation needs beta in (0, 1): {beta}")
    if x < 0.0:
        raise DomainError(f"spectral representation needs a non-positive argument: {-x}")
    if x == 0.0:
        return 1.0
    cosine = math.cos(beta * math.pi)

    def damped(v: float) -> float:
        r = v ** beta / x
        return math.exp(-v) / (r * r + 2.0 * r * cosine + 1.0)

    def integrand(v: float) -> float:
        return v ** (beta - 1.0) * damped(v)

    tolerance = SpecialFunctionsConstants.ML_SPECTRAL_RELATIVE_TOLERANCE
    knee = math.exp(min(math.log(x) / beta, math.log(SpecialFunctionsConstants.ML_SPECTRAL_DECAY_LENGTH)))
    head_end = min(1.0, knee)
    body_end = max(1.0, 2.0 * knee)
    head, head_error = integrate_interval(damped, 0.0, head_end, abs_tol=0.0, rel_tol=tolerance, weight="alg",
                                          wvar=(beta - 1.0, 0.0))
    body, body_error = integrate_interval(integrand, head_end, body_end, abs_tol=0.0, rel_tol=tolerance,
                                          points=[knee])
    tail, tail_error = integrate_interval(integrand, body_end, math.inf, abs_tol=0.0, rel_tol=tolerance)
    logger.debug("E_%s(-%s) through the spectral integral", beta, x)
    integral = require_accuracy(head + body + tail, head_error + body_error + tail_error,
                                SpecialFunctionsConstants.ML_SPECTRAL_ACCEPTED_ERROR * abs(head + body + tail),
                                f"spectral integral of E_{beta}(-{x})")
    return math.sin(beta * math.pi) / (math.pi * x) * integral


def mittag_leffler_complex(spec: MLSpec, z: complex) -> complex:
    """
    E_{beta,gamma}(z) for complex z in the disc |z| <= 5.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"Mittag-Leffler argument must be finite: {z}")
    if abs(z) > SpecialFunctionsConstants.ML_COMPLEX_MAX_MODULUS:
        raise AccuracyError(f"complex Mittag-Leffler argument outside the validated disc "
                            f"|z| <= {SpecialFunctionsConstants.ML_COMPLEX_MAX_MODULUS}: {z}")
    if spec.beta == 1.0 and spec.gamma == 1.0:
        return complex(np.exp(z))
    series = MittagLefflerSeries(spec.beta, spec.gamma, spec.precision_target, spec.absolute_floor)
    return complex(series.evaluate(z))
