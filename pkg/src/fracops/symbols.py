import math
from typing import Callable, Sequence, Tuple

import numpy as np

from src.exceptions import DomainError
from src.fracops.fracops_constants import FracopsConstants
from src.laws.direction import Direction
from src.numerics.quadrature_utils import integrate_interval, require_accuracy
from src.special_functions.wright import rgamma


def dir_symbol(alpha: float, direction: Direction, xi: Sequence[float]) -> complex:
    """
    Fourier symbol (-i a.xi)^alpha = |a.xi|^alpha exp(-i pi alpha sign(a.xi) / 2) on the principal branch.

    :param alpha: Order in (0, 1].
    :param direction: Unit vector a.
    :param xi: Frequency vector.
    :return: The symbol; 0 when a.xi = 0.
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1]: {alpha}")
    projection = direction.project(xi)
    if projection == 0.0:
        return 0j
    phase = -0.5 * math.pi * alpha * math.copysign(1.0, projection)
    return abs(projection) ** alpha * complex(math.cos(phase), math.sin(phase))


def laplacian_symbol(theta: float, xi: Sequence[float]) -> float:
    """
    Fourier symbol ||xi||^(2 theta) of the fractional Laplacian.
    """
    if not 0.0 < theta <= 1.0:
        raise DomainError(f"theta must lie in (0, 1]: {theta}")
    norm = float(np.linalg.norm(np.asarray(xi, dtype=float)))
    return norm ** (2.0 * theta) if norm > 0.0 else 0.0


def homogeneous_plus(eta: float, z: float) -> float:
    """
    Homogeneous distribution z^eta_+ = z^eta / Gamma(1 + eta) for z > 0, 0 otherwise.
    """
    if not eta > -1.0:
        raise DomainError(f"eta must exceed -1: {eta}")
    if z <= 0.0:
        return 0.0
    return z ** eta * rgamma(1.0 + eta)


def laplace_transform(f: Callable[[float], float], lam: float,
                      support: Tuple[float, float] = (0.0, math.inf)) -> float:
    """
    int_support exp(-lam t) f(t) dt by adaptive quadrature, split at t = 1 for infinite supports.

    :raises QuadratureError: when the error estimate exceeds 1e-7.
    """
    if not lam > 0.0:
        raise DomainError(f"Laplace variable must be positive: {lam}")
    lower, upper = support

    def integrand(t: float) -> float:
        return math.exp(-lam * t) * f(t)

    pieces = [(lower, upper)]
    if math.isinf(upper) and lower < 1.0:
        pieces = [(lower, 1.0), (1.0, upper)]
    total = 0.0
    total_error = 0.0
    for piece_lower, piece_upper in pieces:
        value, error = integrate_interval(integrand, piece_lower, piece_upper, abs_tol=1e-12, rel_tol=1e-11)
        total += value
        total_error += error
    return require_accuracy(total, total_error, FracopsConstants.LAPLACE_TOLERANCE, "Laplace transform")
