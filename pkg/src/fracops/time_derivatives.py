import logging
import math
from typing import Callable, Optional, Union

import numpy as np

from src.exceptions import DomainError, QuadratureError
from src.fracops.fracops_constants import FracopsConstants
from src.fracops.operator_specs import CaputoSpec
from src.special_functions.wright import rgamma

logger = logging.getLogger(__name__)

TimeFunction = Callable[[float], float]


def central_difference(f: TimeFunction, s: float) -> float:
    """
    Central difference with step min(1e-5, 1e-3 s), so the stencil never leaves (0, inf).
    """
    step = min(FracopsConstants.DIFFERENCE_STEP, FracopsConstants.RELATIVE_DIFFERENCE_STEP * s)
    return (f(s + step) - f(s - step)) / (2.0 * step)


def _caputo_integral(order: float, derivative: TimeFunction, t: float, node_count: int) -> float:
    # s = t (1 - u^(1/(1-order))) removes the kernel singularity at s = t,
    # u = 1 - w^(1/order) absorbs the s^(order-1) behaviour of the derivative at s = 0
    nodes, weights = np.polynomial.legendre.leggauss(node_count)
    w = 0.5 * (nodes + 1.0)
    weights = 0.5 * weights
    epsilon = np.power(w, 1.0 / order)
    s = -t * np.expm1(np.log1p(-epsilon) / (1.0 - order))
    jacobian = t ** (1.0 - order) / (1.0 - order) / order * np.power(w, 1.0 / order - 1.0)
    total = 0.0
    for node_s, weight, jac in zip(s, weights, jacobian):
        if node_s <= 0.0:
            continue
        total += weight * jac * derivative(float(node_s))
    return total * rgamma(1.0 - order)


def caputo_derivative(spec: CaputoSpec, f: TimeFunction, t: float,
                      derivative: Optional[TimeFunction] = None) -> float:
    """
    Caputo derivative (1/Gamma(1-beta)) int_0^t f'(s) (t-s)^(-beta) ds.

    :param spec: Order and quadrature settings.
    :param f: Function of time, differentiable on (0, t].
    :param t: Evaluation time, t >= spec.t_min.
    :param derivative: Analytic f'; central differences are used when omitted.
    :return: The derivative value.
    :raises QuadratureError: when the full and the half Gauss-Legendre rule disagree beyond the tolerance.
    """
    if not (math.isfinite(t) and t >= spec.t_min):
        raise DomainError(f"evaluation time must be at least {spec.t_min}: {t}")
    if derivative is None:
        derivative = lambda s: central_difference(f, s)
    value = _caputo_integral(spec.order, derivative, t, spec.node_count)
    coarse = _caputo_integral(spec.order, derivative, t, spec.node_count // 2)
    discrepancy = abs(value - coarse)
    if not math.isfinite(value) or discrepancy > spec.tolerance * max(1.0, abs(value)):
        raise QuadratureError(f"Caputo quadrature of order {spec.order} at t={t} unresolved: "
                              f"rules differ by {discrepancy:.2e}")
    return value


def rl_derivative(spec: Union[CaputoSpec, float], f: TimeFunction, t: float,
                  derivative: Optional[TimeFunction] = None) -> float:
    """
    Riemann-Liouville derivative through its relation to the Caputo derivative,
    D^beta f(t) = Caputo f(t) + f(0+) t^(-beta) / Gamma(1-beta).

    :param spec: Caputo settings, or just the order.
    :raises DomainError: when f(0+) is not finite.
    """
    if not isinstance(spec, CaputoSpec):
        spec = CaputoSpec(spec)
    try:
        initial = float(f(0.0))
    except (ZeroDivisionError, OverflowError, ValueError) as error:
        raise DomainError(f"f(0+) is not finite: {error}") from error
    if not math.isfinite(initial):
        raise DomainError(f"f(0+) is not finite: {initial}")
    correction = initial * t ** (-spec.order) * rgamma(1.0 - spec.order)
    return caputo_derivative(spec, f, t, derivative) + correction
