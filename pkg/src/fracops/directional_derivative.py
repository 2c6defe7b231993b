import logging
import math
from typing import Callable, Optional, Sequence

import numpy as np

from src.exceptions import QuadratureError, TailError
from src.fracops.operator_specs import DirDerivSpec
from src.numerics.quadrature_utils import integrate_interval
from src.special_functions.wright import rgamma

logger = logging.getLogger(__name__)

ScalarField = Callable[[np.ndarray], float]

_LOG_LARGEST_SHIFT = 690.0
# the difference quotient tends to a.grad f(x) at s = 0; it is sampled no closer than this
_QUOTIENT_FLOOR = 1e-8


def frac_dir_derivative(spec: DirDerivSpec, f: ScalarField, x: Sequence[float],
                        points: Optional[Sequence[float]] = None) -> float:
    """
    Fractional directional derivative

        (a.grad)^alpha f(x) = int_0^inf (f(x) - f(x - s a)) alpha s^(-alpha-1) / Gamma(1-alpha) ds.

    The integral has three pieces:
        - (0, 1): algebraic weight s^(-alpha) against the difference quotient (f(x) - f(x - s a)) / s.
        - (1, s_max): plain adaptive quadrature.
        - (s_max, inf): u = s^(-alpha) turns the measure into du, leaving a finite interval (0, s_max^(-alpha)).

    :param spec: Order, direction, split point and tolerance.
    :param f: Bounded scalar field on R^n.
    :param x: Evaluation point.
    :param points: Optional shift values s where f(x - s a) changes behaviour (support edges).
    :return: The derivative value.
    :raises TailError: when the tail piece cannot be resolved to the tolerance.
    :raises QuadratureError: when the total error estimate exceeds the tolerance.
    """
    alpha = spec.alpha
    a = spec.direction.a
    x = np.asarray(x, dtype=float).reshape(-1)
    center = float(f(x))
    tolerance = spec.tolerance
    sub_tolerance = 0.1 * tolerance

    def difference(s: float) -> float:
        return center - float(f(x - s * a))

    def quotient(s: float) -> float:
        s = max(s, _QUOTIENT_FLOOR)
        return difference(s) / s

    near_points = [p for p in (points or []) if 0.0 < p < 1.0]
    if near_points:
        near, near_error = 0.0, 0.0
        edges = [0.0] + sorted(near_points) + [1.0]
        for lower, upper in zip(edges[:-1], edges[1:]):
            value, error = integrate_interval(quotient, lower, upper, abs_tol=sub_tolerance,
                                              rel_tol=1e-10, weight="alg", wvar=(-alpha, 0.0))
            near += value
            near_error += error
    else:
        near, near_error = integrate_interval(quotient, 0.0, 1.0, abs_tol=sub_tolerance,
                                              rel_tol=1e-10, weight="alg", wvar=(-alpha, 0.0))
    middle, middle_error = integrate_interval(lambda s: difference(s) * s ** (-alpha - 1.0), 1.0, spec.s_max,
                                              abs_tol=sub_tolerance, rel_tol=1e-10, points=points)

    tail_limit = spec.s_max ** (-alpha)

    def tail_integrand(u: float) -> float:
        if u <= 0.0:
            return 0.0
        log_s = -math.log(u) / alpha
        return difference(math.exp(min(log_s, _LOG_LARGEST_SHIFT)))

    tail, tail_error = integrate_interval(tail_integrand, 0.0, tail_limit, abs_tol=sub_tolerance, rel_tol=1e-10)
    scale = rgamma(1.0 - alpha)
    tail_error *= scale
    if tail_error > tolerance:
        raise TailError(f"tail beyond s_max={spec.s_max} unresolved: error estimate {tail_error:.2e}")
    logger.debug("Levy tail bound 2 sup|f| s_max^-alpha / Gamma(1-alpha) with sup|f| >= %s: %.3e",
                 abs(center), 2.0 * abs(center) * tail_limit * scale)
    total_error = alpha * scale * (near_error + middle_error) + tail_error
    if total_error > tolerance:
        raise QuadratureError(f"directional derivative error estimate {total_error:.2e} exceeds {tolerance:.1e}")
    return alpha * scale * (near + middle) + scale * tail
