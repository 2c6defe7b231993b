import math

from scipy import special, stats

from src.exceptions import DomainError, QuadratureError
from src.laws.densities import density_l
from src.laws.frac_params import check_exponent, check_time
from src.laws.laws_constants import LawsConstants
from src.laws.laws_utils import wright_argument_cutoff
from src.numerics.quadrature_utils import integrate_half_line
from src.special_functions.function_specs import MLSpec
from src.special_functions.mittag_leffler import mittag_leffler


def _check_rate(rate: float) -> float:
    if not (math.isfinite(rate) and rate > 0.0):
        raise DomainError(f"Poisson rate must be positive: {rate}")
    return float(rate)


def pmf_frac_poisson(beta: float, rate: float, k: int, t: float) -> float:
    """
    Probability of k events for the fractional Poisson process N(L^beta_t):

        p_k(t) = int_0^inf exp(-lambda s) (lambda s)^k / k! l_beta(s, t) ds.

    beta = 1 is the classical Poisson law.
    """
    beta = check_exponent("beta", beta)
    rate = _check_rate(rate)
    t = check_time(t)
    if k < 0 or int(k) != k:
        raise DomainError(f"event count must be a non-negative integer: {k}")
    k = int(k)
    if beta == 1.0:
        return float(stats.poisson.pmf(k, rate * t))
    log_factorial = special.gammaln(k + 1.0)

    def integrand(s: float) -> float:
        mean = rate * s
        log_poisson = -mean + k * math.log(mean) - log_factorial if k > 0 else -mean
        return math.exp(log_poisson) * density_l(beta, s, t)

    upper = wright_argument_cutoff(beta) * t ** beta
    value, error = integrate_half_line(integrand, t ** beta, upper=upper,
                                       abs_tol=LawsConstants.QUAD_ABSOLUTE_TOLERANCE,
                                       rel_tol=LawsConstants.QUAD_RELATIVE_TOLERANCE)
    if error > LawsConstants.SUBORDINATION_TOLERANCE:
        raise QuadratureError(f"fractional Poisson probability k={k} has error estimate {error:.2e}")
    return value


def pgf_frac_poisson(beta: float, rate: float, z: float, t: float) -> float:
    """
    Generating function sum_k z^k p_k(t) = E_beta(-lambda (1 - z) t^beta).
    """
    beta = check_exponent("beta", beta)
    rate = _check_rate(rate)
    t = check_time(t)
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"generating function argument must lie in [0, 1]: {z}")
    return mittag_leffler(MLSpec(beta), -rate * (1.0 - z) * t ** beta)
