import logging
import math

import numpy as np
from scipy import special

from src.exceptions import AccuracyError, DomainError
from src.numerics.quadrature_utils import integrate_interval
from src.special_functions.function_specs import WrightSpec
from src.special_functions.gamma_series import WrightSeries
from src.special_functions.kanter_function import kanter_minimum, log_kanter_function
from src.special_functions.special_functions_constants import SpecialFunctionsConstants

logger = logging.getLogger(__name__)

# exp() of anything below this is zero in double precision
_LOG_UNDERFLOW = -745.0


def rgamma(x: float) -> float:
    """
    Reciprocal gamma function, entire: 0 at the non-positive integers.

    :param x: Real argument.
    :return: 1 / Gamma(x).
    """
    return float(special.rgamma(x))


def wright(spec: WrightSpec, z: float) -> float:
    """
    Wright function W_{mu,rho}(z) = sum_k z^k / (k! Gamma(mu k + rho)).

    :param spec: Parameters and precision target.
    :param z: Real argument with |z| <= 30.
    :return: W_{mu,rho}(z) within the relative target (or the absolute floor for tiny values).
    """
    if not math.isfinite(z):
        raise DomainError(f"Wright argument must be finite: {z}")
    if abs(z) > SpecialFunctionsConstants.WRIGHT_MAX_ARGUMENT:
        raise DomainError(f"Wright argument outside the validated domain "
                          f"|z| <= {SpecialFunctionsConstants.WRIGHT_MAX_ARGUMENT}: {z}")
    series = WrightSeries(spec.mu, spec.rho, spec.precision_target, spec.absolute_floor)
    return float(series.evaluate(float(z)))


def _check_m_wright_arguments(beta: float, z: float) -> None:
    if not 0.0 < beta < 1.0:
        raise DomainError(f"M-Wright exponent must lie in (0, 1): {beta}")
    if not (math.isfinite(z) and z >= 0.0):
        raise DomainError(f"M-Wright argument must be finite and non-negative: {z}")


def m_wright(beta: float, z: float,
             precision_target: float = SpecialFunctionsConstants.DEFAULT_PRECISION_TARGET) -> float:
    """
    M-Wright kernel W_{-beta,1-beta}(-z) for z >= 0.

    The float series is used while its error estimate meets the target; beyond that the
    Zolotarev-Kanter integral

        W_{-beta,1-beta}(-z) = z^(beta/(1-beta)) / (pi (1-beta)) * int_0^pi A(phi) exp(-z^(1/(1-beta)) A(phi)) dphi

    is evaluated instead. Its integrand is positive, so no cancellation occurs at large z.

    :param beta: Exponent in (0, 1).
    :param z: Non-negative argument.
    :param precision_target: Relative target of the series pass.
    :return: W_{-beta,1-beta}(-z).
    """
    _check_m_wright_arguments(beta, z)
    if z == 0.0:
        return rgamma(1.0 - beta)
    if z <= SpecialFunctionsConstants.WRIGHT_MAX_ARGUMENT:
        series = WrightSeries(-beta, 1.0 - beta, precision_target, SpecialFunctionsConstants.ABSOLUTE_FLOOR)
        value = series.evaluate_float_only(-z)
        if value is not None:
            return float(value)
    return _m_wright_kanter(beta, z)


def _m_wright_kanter(beta: float, z: float) -> float:
    log_scale = math.log(z) / (1.0 - beta)
    minimum = kanter_minimum(beta)
    if log_scale > SpecialFunctionsConstants.LOG_FLOAT_MAX or \
            -math.exp(log_scale) * minimum < _LOG_UNDERFLOW:
        return 0.0
    scale = math.exp(log_scale)

    def integrand(angle: float) -> float:
        log_a = log_kanter_function(beta, angle)
        if log_a > SpecialFunctionsConstants.LOG_FLOAT_MAX:
            return 0.0
        a_value = math.exp(log_a)
        exponent = -scale * (a_value - minimum)
        if exponent < _LOG_UNDERFLOW:
            return 0.0
        return a_value * math.exp(exponent)

    integral, error = integrate_interval(integrand, 0.0, math.pi, abs_tol=0.0,
                                         rel_tol=SpecialFunctionsConstants.KANTER_QUAD_RELATIVE_TOLERANCE)
    if integral <= 0.0:
        return 0.0
    if error > 1e-8 * integral:
        raise AccuracyError(f"Kanter integral for beta={beta}, z={z} has error {error:.2e}")
    log_value = (beta / (1.0 - beta)) * math.log(z) - math.log(math.pi * (1.0 - beta)) \
        - scale * minimum + math.log(integral)
    logger.debug("M-Wright beta=%s z=%s evaluated through the Kanter integral", beta, z)
    return math.exp(log_value) if log_value > _LOG_UNDERFLOW else 0.0


def wright_negative_axis(beta: float, rho: float, z: float,
                         precision_target: float = SpecialFunctionsConstants.DEFAULT_PRECISION_TARGET) -> float:
    """
    W_{-beta,rho}(-z) for beta in (0, 1), real rho and any z >= 0.

    The float series is used while it certifies the target. Otherwise, with gamma = rho - 1 + beta:
        - gamma = 0 is the M-Wright kernel;
        - gamma > 0 integrates the M-Wright kernel in time,
          W_{-beta,rho}(-z) = 1/Gamma(gamma) int_0^1 (1-s)^(gamma-1) s^(-beta) M_beta(z s^(-beta)) ds;
        - gamma < 0 applies W_{-beta,rho}(-z) = beta z W_{-beta,rho+1-beta}(-z) + rho W_{-beta,rho+1}(-z).

    :raises AccuracyError: when the time integral misses its relative tolerance.
    """
    _check_m_wright_arguments(beta, z)
    if z <= SpecialFunctionsConstants.WRIGHT_MAX_ARGUMENT:
        series = WrightSeries(-beta, rho, precision_target, SpecialFunctionsConstants.ABSOLUTE_FLOOR)
        value = series.evaluate_float_only(-z)
        if value is not None:
            return float(value)
    order = rho - 1.0 + beta
    if abs(order) < SpecialFunctionsConstants.WRIGHT_ORDER_TOLERANCE:
        return m_wright(beta, z, precision_target)
    if order < 0.0:
        return beta * z * wright_negative_axis(beta, rho + 1.0 - beta, z, precision_target) \
            + rho * wright_negative_axis(beta, rho + 1.0, z, precision_target)

    def integrand(s: float) -> float:
        if s <= 0.0 or -beta * math.log(s) > SpecialFunctionsConstants.LOG_FLOAT_MAX:
            return 0.0
        scale = s ** -beta
        return scale * m_wright(beta, z * scale, precision_target)

    integral, error = integrate_interval(integrand, 0.0, 1.0, abs_tol=0.0,
                                         rel_tol=SpecialFunctionsConstants.KANTER_QUAD_RELATIVE_TOLERANCE,
                                         weight="alg", wvar=(0.0, order - 1.0))
    if integral <= 0.0:
        return 0.0
    if error > 1e-8 * integral:
        raise AccuracyError(f"time integral for W_(-{beta},{rho})(-{z}) has error {error:.2e}")
    logger.debug("W_(-%s,%s)(-%s) through the time integral of the M-Wright kernel", beta, rho, z)
    return integral * rgamma(order)


def m_wright_complement(beta: float, z: float) -> float:
    """
    W_{-beta,1}(-z) = (1/pi) int_0^pi exp(-z^(1/(1-beta)) A(phi)) dphi for z >= 0.

    Equals P{L > z} for the inverse stable subordinator at unit time.
    """
    _check_m_wright_arguments(beta, z)
    if z == 0.0:
        return 1.0
    log_scale = math.log(z) / (1.0 - beta)
    if log_scale > SpecialFunctionsConstants.LOG_FLOAT_MAX:
        return 0.0
    scale = math.exp(log_scale)

    def integrand(angle: float) -> float:
        log_a = log_kanter_function(beta, angle)
        if log_a > SpecialFunctionsConstants.LOG_FLOAT_MAX:
            return 0.0
        exponent = -scale * math.exp(log_a)
        return math.exp(exponent) if exponent > _LOG_UNDERFLOW else 0.0

    integral, _ = integrate_interval(integrand, 0.0, math.pi, abs_tol=1e-15,
                                     rel_tol=SpecialFunctionsConstants.KANTER_QUAD_RELATIVE_TOLERANCE)
    return integral / math.pi


def m_wright_complement_array(beta: float, z: np.ndarray) -> np.ndarray:
    """
    Vectorised W_{-beta,1}(-z) on a fixed Gauss-Legendre rule clustered at both ends of (0, pi).

    Intended for large batches (goodness-of-fit tests); absolute error is about 1e-7.
    """
    if not 0.0 < beta < 1.0:
        raise DomainError(f"M-Wright exponent must lie in (0, 1): {beta}")
    z = np.asarray(z, dtype=float)
    if np.any(z < 0.0) or not np.all(np.isfinite(z)):
        raise DomainError("M-Wright arguments must be finite and non-negative")
    nodes, weights = np.polynomial.legendre.leggauss(SpecialFunctionsConstants.KANTER_GAUSS_NODES)
    v = 0.5 * (nodes + 1.0)
    angle = np.pi * v * v * (3.0 - 2.0 * v)
    jacobian = 0.5 * weights * np.pi * 6.0 * v * (1.0 - v)
    log_a = log_kanter_function(beta, angle)
    flat = z.ravel()
    result = np.empty_like(flat)
    chunk = 4096
    with np.errstate(over="ignore", under="ignore", divide="ignore"):
        for start in range(0, flat.size, chunk):
            block = flat[start:start + chunk]
            scale = np.power(block, 1.0 / (1.0 - beta))[:, None]
            values = np.exp(-scale * np.exp(log_a)[None, :])
            result[start:start + chunk] = values @ jacobian / np.pi
    result[flat == 0.0] = 1.0
    return result.reshape(z.shape)
