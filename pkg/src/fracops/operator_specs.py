import math

from src.exceptions import DomainError
from src.fracops.fracops_constants import FracopsConstants
from src.laws.direction import Direction


class CaputoSpec:
    """
    Settings of the Caputo/Riemann-Liouville quadrature.

    :param order: Derivative order beta in (0, 1).
    :param node_count: Gauss-Legendre nodes, at least 64.
    :param t_min: Smallest evaluation time accepted.
    :param tolerance: Largest admissible difference between the full and half rule.
    """

    def __init__(self, order: float, node_count: int = FracopsConstants.DEFAULT_NODE_COUNT,
                 t_min: float = FracopsConstants.DEFAULT_T_MIN,
                 tolerance: float = FracopsConstants.CAPUTO_TOLERANCE):
        if not (math.isfinite(order) and 0.0 < order < 1.0):
            raise DomainError(f"Caputo order must lie in (0, 1): {order}")
        if node_count < FracopsConstants.MIN_NODE_COUNT:
            raise DomainError(f"node count must be at least {FracopsConstants.MIN_NODE_COUNT}: {node_count}")
        if not t_min > 0.0:
            raise DomainError(f"t_min must be positive: {t_min}")
        self.order = float(order)
        self.node_count = int(node_count)
        self.t_min = float(t_min)
        self.tolerance = float(tolerance)


class DirDerivSpec:
    """
    Settings of the fractional directional derivative (a.grad)^alpha.

    :param alpha: Order in (0, 1).
    :param direction: Unit direction a.
    :param s_max: Split point between the direct and the tail quadrature.
    :param tolerance: Absolute error target in [1e-12, 1e-4].
    """

    def __init__(self, alpha: float, direction: Direction, s_max: float = FracopsConstants.DEFAULT_S_MAX,
                 tolerance: float = FracopsConstants.DEFAULT_DIR_TOLERANCE):
        if not (math.isfinite(alpha) and 0.0 < alpha < 1.0):
            raise DomainError(f"directional derivative order must lie in (0, 1): {alpha}")
        if not (FracopsConstants.MIN_DIR_TOLERANCE <= tolerance <= FracopsConstants.MAX_DIR_TOLERANCE):
            raise DomainError(f"tolerance must lie in [{FracopsConstants.MIN_DIR_TOLERANCE}, "
                              f"{FracopsConstants.MAX_DIR_TOLERANCE}]: {tolerance}")
        if not s_max > 1.0:
            raise DomainError(f"s_max must exceed 1: {s_max}")
        self.alpha = float(alpha)
        self.direction = direction
        self.s_max = float(s_max)
        self.tolerance = float(tolerance)
