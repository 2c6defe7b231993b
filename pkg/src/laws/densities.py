import logging
import math
from typing import Union

import numpy as np
from scipy import special

from src.exceptions import DomainError, QuadratureError
from src.laws.frac_params import check_exponent, check_time
from src.laws.laws_constants import LawsConstants
from src.laws.laws_utils import wright_argument_cutoff
from src.numerics.quadrature_utils import integrate_half_line
from src.special_functions.wright import m_wright, m_wright_complement, m_wright_complement_array

logger = logging.getLogger(__name__)

ArrayOrFloat = Union[float, np.ndarray]


def _check_non_negative(name: str, value: float) -> float:
    if not (math.isfinite(value) and value >= 0.0):
        raise DomainError(f"{name} must be finite and non-negative: {value}")
    return float(value)


def _check_positive(name: str, value: float) -> float:
    if not (math.isfinite(value) and value > 0.0):
        raise DomainError(f"{name} must be finite and positive: {value}")
    return float(value)


def density_l(beta: float, x: float, t: float) -> float:
    """
    Density of the inverse stable subordinator L^beta_t:

        l_beta(x, t) = t^(-beta) W_{-beta,1-beta}(-x / t^beta).

    :param beta: Exponent in (0, 1).
    :param x: Point x >= 0.
    :param t: Time t > 0.
    :return: Density value.
    """
    beta = check_exponent("beta", beta, allow_one=False)
    x = _check_non_negative("x", x)
    t = check_time(t)
    scale = t ** beta
    return m_wright(beta, x / scale) / scale


def density_h(alpha: float, x: float, t: float) -> float:
    """
    Density of the stable subordinator H^alpha_t from the ratio identity
    h_alpha(x, t) = (alpha t / x) l_alpha(t, x).

    :param alpha: Exponent in (0, 1).
    :param x: Point x > 0.
    :param t: Time t > 0.
    :return: Density value.
    """
    alpha = check_exponent("alpha", alpha, allow_one=False)
    x = _check_positive("x", x)
    t = check_time(t)
    return alpha * t / x * density_l(alpha, t, x)


def density_U(alpha: float, beta: float, x: float, t: float) -> float:
    """
    Subordinated law U^alpha_beta(x, t) = int_0^inf h_alpha(x, s) l_beta(s, t) ds.

    The integral runs in log-scale, split at s = t^beta, and stops where either kernel's
    M-Wright argument passes its tail cutoff. Near the origin U behaves like
    x^(alpha-1) / (Gamma(alpha) Gamma(1-beta) t^beta), so x = 0 returns +inf.

    :raises QuadratureError: when the error estimate exceeds 1e-6.
    """
    alpha = check_exponent("alpha", alpha, allow_one=False)
    beta = check_exponent("beta", beta, allow_one=False)
    x = _check_non_negative("x", x)
    t = check_time(t)
    if x == 0.0:
        return math.inf
    upper = min(wright_argument_cutoff(beta) * t ** beta, wright_argument_cutoff(alpha) * x ** alpha)

    def integrand(s: float) -> float:
        return density_h(alpha, x, s) * density_l(beta, s, t)

    split = min(t ** beta, 0.5 * upper)
    value, error = integrate_half_line(integrand, split, upper=upper,
                                       abs_tol=LawsConstants.QUAD_ABSOLUTE_TOLERANCE,
                                       rel_tol=LawsConstants.QUAD_RELATIVE_TOLERANCE)
    if error > LawsConstants.SUBORDINATION_TOLERANCE:
        raise QuadratureError(f"subordination integral at alpha={alpha}, beta={beta}, x={x}, t={t} "
                              f"has error estimate {error:.2e}")
    return max(value, 0.0)


def density_lamperti(beta: float, x: float, t: float) -> float:
    """
    Lamperti law, the density of t H_1 / H_2 for independent stable subordinators:

        (sin(beta pi)/pi) x^(beta-1) t^beta / (x^(2 beta) + 2 x^beta t^beta cos(beta pi) + t^(2 beta)).

    :raises DomainError: for beta = 1 and at x = 0, where the density diverges.
    """
    if beta == 1.0:
        raise DomainError("the Lamperti law degenerates at beta = 1")
    beta = check_exponent("beta", beta, allow_one=False)
    x = _check_positive("x", x)
    t = check_time(t)
    x_beta = x ** beta
    t_beta = t ** beta
    denominator = x_beta * x_beta + 2.0 * x_beta * t_beta * math.cos(beta * math.pi) + t_beta * t_beta
    return math.sin(beta * math.pi) / math.pi * x ** (beta - 1.0) * t_beta / denominator


def cdf_lamperti(beta: float, x: ArrayOrFloat, t: float) -> ArrayOrFloat:
    """
    Distribution function of the Lamperti law,
    (1/(beta pi)) [arctan(((x/t)^beta + cos(beta pi)) / sin(beta pi)) - pi/2 + beta pi].
    """
    beta = check_exponent("beta", beta, allow_one=False)
    t = check_time(t)
    ratio = np.power(np.maximum(np.asarray(x, dtype=float), 0.0) / t, beta)
    value = (np.arctan((ratio + math.cos(beta * math.pi)) / math.sin(beta * math.pi))
             - 0.5 * math.pi + beta * math.pi) / (beta * math.pi)
    return float(value) if np.ndim(value) == 0 else value


def cdf_l(beta: float, x: ArrayOrFloat, t: float) -> ArrayOrFloat:
    """
    P{L^beta_t <= x} = 1 - W_{-beta,1}(-x / t^beta).

    Arrays go through the vectorised fixed rule, scalars through adaptive quadrature.
    """
    beta = check_exponent("beta", beta, allow_one=False)
    t = check_time(t)
    scale = t ** beta
    if np.ndim(x) == 0:
        return 1.0 - m_wright_complement(beta, _check_non_negative("x", float(x)) / scale)
    return 1.0 - m_wright_complement_array(beta, np.asarray(x, dtype=float) / scale)


def cdf_h(alpha: float, x: ArrayOrFloat, t: float) -> ArrayOrFloat:
    """
    P{H^alpha_t <= x} = P{L^alpha_x >= t} = W_{-alpha,1}(-t / x^alpha).
    """
    alpha = check_exponent("alpha", alpha, allow_one=False)
    t = check_time(t)
    if np.ndim(x) == 0:
        x = _check_positive("x", float(x))
        return m_wright_complement(alpha, t / x ** alpha)
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise DomainError("stable subordinator distribution function needs x > 0")
    return m_wright_complement_array(alpha, t / np.power(x, alpha))


def moment_l(beta: float, k: int, t: float) -> float:
    """
    E (L^beta_t)^k = k! t^(k beta) / Gamma(k beta + 1).
    """
    beta = check_exponent("beta", beta)
    t = check_time(t)
    if k < 0:
        raise DomainError(f"moment order must be non-negative: {k}")
    return math.exp(special.gammaln(k + 1.0) - special.gammaln(k * beta + 1.0)) * t ** (k * beta)
