import math
from typing import Sequence

import numpy as np

from src.exceptions import DomainError, QuadratureError
from src.laws.densities import density_l
from src.laws.direction import Direction
from src.laws.frac_params import check_exponent, check_time
from src.laws.laws_constants import LawsConstants
from src.laws.laws_utils import wright_argument_cutoff
from src.numerics.quadrature_utils import integrate_half_line
from src.special_functions.wright import m_wright, wright_negative_axis


def _half_line_projection(direction: Direction, x: Sequence[float]) -> float:
    x = np.asarray(x, dtype=float).reshape(-1)
    if np.any(x < 0.0):
        raise DomainError(f"point must lie in the positive orthant: {x.tolist()}")
    return direction.project(x)


def _is_integer(value: float) -> bool:
    return abs(value - round(value)) < 1e-12


def _check_nu(beta: float, nu: float) -> float:
    if nu > -1.0:
        return nu
    n = -nu / beta
    if n >= 1.0 and _is_integer(n):
        return nu
    n = (nu + 1.0) / (1.0 - beta)
    if n >= 1.0 and _is_integer(n):
        return nu
    raise DomainError(f"nu must exceed -1 or be one of -n beta, n - n beta - 1: {nu}")


def solution_v(beta: float, nu: float, direction: Direction, x: Sequence[float], t: float) -> float:
    """
    Solution of the time-fractional transport problem with boundary datum t^nu_+:

        v_beta(x, t) = t^nu W_{-beta,nu+1}(-a.x / t^beta).

    :param beta: Exponent in (0, 1).
    :param nu: Boundary exponent.
    :param direction: Unit vector a with non-negative components.
    :param x: Point of the positive orthant.
    :param t: Time t > 0.
    """
    beta = check_exponent("beta", beta, allow_one=False)
    nu = _check_nu(beta, nu)
    t = check_time(t)
    projection = _half_line_projection(direction, x)
    return t ** nu * wright_negative_axis(beta, nu + 1.0, projection / t ** beta)


def density_p_multivariate(beta: float, direction: Direction, x: Sequence[float], t: float) -> float:
    """
    Density on the positive orthant whose one-dimensional marginals are the inverse-subordinator laws:

        p_beta(x, t; n) = a_(n) t^(-n beta) W_{-beta,1-n beta}(-a.x / t^beta).
    """
    beta = check_exponent("beta", beta, allow_one=False)
    t = check_time(t)
    if np.any(direction.a <= 0.0):
        raise DomainError(f"every direction component must be positive: {direction}")
    projection = _half_line_projection(direction, x)
    n = direction.dim
    if n == 1:
        return density_l(beta, projection, t)
    return direction.product() * t ** (-n * beta) * wright_negative_axis(beta, 1.0 - n * beta, projection / t ** beta)


def marginal_p_multivariate(beta: float, direction: Direction, x_remaining: Sequence[float], t: float,
                            integrated_index: int) -> float:
    """
    Closed form of the density p_beta integrated over the coordinate ``integrated_index``:

        (a_(n) / a_l) t^(-(n-1) beta) W_{-beta,1-(n-1) beta}(-sum_{j != l} a_j x_j / t^beta).
    """
    beta = check_exponent("beta", beta, allow_one=False)
    t = check_time(t)
    n = direction.dim
    if not 0 <= integrated_index < n or n < 2:
        raise DomainError(f"cannot integrate out coordinate {integrated_index} of a {n}-dimensional law")
    remaining = np.delete(direction.a, integrated_index)
    x_remaining = np.asarray(x_remaining, dtype=float).reshape(-1)
    if x_remaining.size != n - 1 or np.any(x_remaining < 0.0):
        raise DomainError(f"expected {n - 1} non-negative coordinates: {x_remaining.tolist()}")
    prefactor = direction.product() / direction.a[integrated_index]
    projection = float(np.dot(remaining, x_remaining))
    order = n - 1
    return prefactor * t ** (-order * beta) * wright_negative_axis(beta, 1.0 - order * beta, projection / t ** beta)


def solution_Un(beta: float, n: int, direction: Direction, x: Sequence[float], t: float) -> float:
    """
    U^n_beta(x, t) = t^(n - n beta - 1) W_{-beta,n-n beta}(-a.x / t^beta); n = 1 gives l_beta(a.x, t).
    """
    beta = check_exponent("beta", beta, allow_one=False)
    t = check_time(t)
    if n < 1 or int(n) != n:
        raise DomainError(f"order n must be a positive integer: {n}")
    if direction.dim != n:
        raise DomainError(f"direction dimension {direction.dim} must equal n = {n}")
    projection = _half_line_projection(direction, x)
    return t ** (n - n * beta - 1.0) * wright_negative_axis(beta, n - n * beta, projection / t ** beta)


def solution_g(beta: float, direction: Direction, x: Sequence[float], t: float) -> float:
    """
    Whole-space solution of the second-order problem in the projected coordinate y = a.x:

        g(x, t) = 1/2 t^(-beta/2) W_{-beta/2,1-beta/2}(-|y| / t^(beta/2)),

    normalised to unit mass over the real line and equal to the subordinated Gaussian form.
    """
    beta = check_exponent("beta", beta, allow_one=False)
    t = check_time(t)
    projection = abs(direction.project(x))
    scale = t ** (0.5 * beta)
    return 0.5 * m_wright(0.5 * beta, projection / scale) / scale


def solution_g_subordinated(beta: float, direction: Direction, x: Sequence[float], t: float) -> float:
    """
    int_0^inf exp(-y^2 / 4s) / sqrt(4 pi s) l_beta(s, t) ds with y = a.x.
    """
    beta = check_exponent("beta", beta, allow_one=False)
    t = check_time(t)
    projection = direction.project(x)
    upper = wright_argument_cutoff(beta) * t ** beta

    def integrand(s: float) -> float:
        gaussian = math.exp(-projection * projection / (4.0 * s)) / math.sqrt(4.0 * math.pi * s)
        return gaussian * density_l(beta, s, t)

    value, error = integrate_half_line(integrand, t ** beta, upper=upper,
                                       abs_tol=LawsConstants.QUAD_ABSOLUTE_TOLERANCE,
                                       rel_tol=LawsConstants.QUAD_RELATIVE_TOLERANCE)
    if error > LawsConstants.SUBORDINATION_TOLERANCE:
        raise QuadratureError(f"subordinated Gaussian at y={projection}, t={t} has error estimate {error:.2e}")
    return value
