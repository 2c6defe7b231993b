import math
from typing import Callable

from src.laws.laws_constants import LawsConstants
from src.numerics.quadrature_utils import integrate_interval, require_accuracy
from src.special_functions.kanter_function import kanter_minimum


def wright_argument_cutoff(beta: float) -> float:
    """
    Argument z beyond which the M-Wright kernel W_{-beta,1-beta}(-z) is below the tail epsilon.

    Uses the envelope exp(-A_min z^(1/(1-beta))) with A_min the minimum of Kanter's function.
    """
    if beta >= 1.0:
        return 1.0 + LawsConstants.TAIL_MARGIN
    level = -math.log(LawsConstants.TAIL_EPSILON) + LawsConstants.TAIL_MARGIN
    return (level / kanter_minimum(beta)) ** (1.0 - beta)


def convolve_in_time(first: Callable[[float], float], second: Callable[[float], float], t: float,
                     tolerance: float = LawsConstants.SUBORDINATION_TOLERANCE) -> float:
    """
    Laplace convolution int_0^t first(s) second(t - s) ds.

    :param first: Function of time on (0, t).
    :param second: Function of time on (0, t).
    :param t: Upper limit.
    :return: The convolution at t.
    """
    def integrand(s: float) -> float:
        if s <= 0.0 or s >= t:
            return 0.0
        return first(s) * second(t - s)

    value, error = integrate_interval(integrand, 0.0, t, abs_tol=LawsConstants.QUAD_ABSOLUTE_TOLERANCE,
                                      rel_tol=LawsConstants.QUAD_RELATIVE_TOLERANCE, points=[0.5 * t])
    return require_accuracy(value, error, tolerance, "time convolution")
