import math

from src.exceptions import DomainError
from src.special_functions.special_functions_constants import SpecialFunctionsConstants


def _check_precision_target(precision_target: float) -> None:
    if not (SpecialFunctionsConstants.MIN_PRECISION_TARGET <= precision_target
            <= SpecialFunctionsConstants.MAX_PRECISION_TARGET):
        raise DomainError(f"precision target must lie in "
                          f"[{SpecialFunctionsConstants.MIN_PRECISION_TARGET}, "
                          f"{SpecialFunctionsConstants.MAX_PRECISION_TARGET}]: {precision_target}")


class WrightSpec:
    """
    Parameters of the Wright function W_{mu,rho}.

    :param mu: Series parameter, mu > -1.
    :param rho: Shift parameter, any real.
    :param precision_target: Relative error target of the evaluation.
    :param absolute_floor: Absolute error accepted when the value itself is below the relative reach.
    """

    def __init__(self, mu: float, rho: float,
                 precision_target: float = SpecialFunctionsConstants.DEFAULT_PRECISION_TARGET,
                 absolute_floor: float = SpecialFunctionsConstants.ABSOLUTE_FLOOR):
        if not (math.isfinite(mu) and mu > -1.0):
            raise DomainError(f"Wright parameter mu must be finite and > -1: {mu}")
        if not math.isfinite(rho):
            raise DomainError(f"Wright parameter rho must be finite: {rho}")
        _check_precision_target(precision_target)
        self.mu = float(mu)
        self.rho = float(rho)
        self.precision_target = precision_target
        self.absolute_floor = absolute_floor

    def __repr__(self) -> str:
        return f"WrightSpec(mu={self.mu}, rho={self.rho}, precision_target={self.precision_target})"


class MLSpec:
    """
    Parameters of the two-parameter Mittag-Leffler function E_{beta,gamma}.
    """

    def __init__(self, beta: float, gamma: float = 1.0,
                 precision_target: float = SpecialFunctionsConstants.ML_SERIES_PRECISION_TARGET,
                 absolute_floor: float = SpecialFunctionsConstants.ABSOLUTE_FLOOR):
        if not (math.isfinite(beta) and beta > 0.0):
            raise DomainError(f"Mittag-Leffler parameter beta must be > 0: {beta}")
        if not math.isfinite(gamma):
            raise DomainError(f"Mittag-Leffler parameter gamma must be finite: {gamma}")
        _check_precision_target(precision_target)
        self.beta = float(beta)
        self.gamma = float(gamma)
        self.precision_target = precision_target
        self.absolute_floor = absolute_floor

    def __repr__(self) -> str:
        return f"MLSpec(beta={self.beta}, gamma={self.gamma})"
