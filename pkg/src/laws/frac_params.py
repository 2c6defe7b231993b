import math

from src.exceptions import DomainError
from src.laws.laws_constants import LawsConstants


def check_exponent(name: str, value: float, allow_one: bool = True) -> float:
    """
    Validate a fractional exponent in (0, 1] (or (0, 1) when ``allow_one`` is False).

    :return: The exponent as float.
    """
    upper_ok = value <= 1.0 if allow_one else value < 1.0
    if not (math.isfinite(value) and value > 0.0 and upper_ok):
        interval = "(0, 1]" if allow_one else "(0, 1)"
        raise DomainError(f"{name} must lie in {interval}: {value}")
    return float(value)


def check_time(t: float) -> float:
    if not (math.isfinite(t) and t > 0.0):
        raise DomainError(f"time must be positive: {t}")
    return float(t)


class FracParams:
    """
    Exponents and Poisson parameters shared by the advection-diffusion and transport laws.

    :param alpha: Order of the fractional directional derivative, in (0, 1].
    :param beta: Order of the Caputo time derivative, in (0, 1].
    :param theta: Order of the fractional Laplacian, in (0, 1].
    :param rate: Poisson rate lambda >= 0.
    :param tau: Jump size tau > 0.
    """

    def __init__(self, alpha: float = LawsConstants.DEFAULT_EXPONENT, beta: float = LawsConstants.DEFAULT_EXPONENT,
                 theta: float = LawsConstants.DEFAULT_EXPONENT, rate: float = 0.0, tau: float = 1.0):
        self.alpha = check_exponent("alpha", alpha)
        self.beta = check_exponent("beta", beta)
        self.theta = check_exponent("theta", theta)
        if not (math.isfinite(rate) and rate >= 0.0):
            raise DomainError(f"Poisson rate must be non-negative: {rate}")
        if not (math.isfinite(tau) and tau > 0.0):
            raise DomainError(f"jump size tau must be positive: {tau}")
        self.rate = float(rate)
        self.tau = float(tau)

    def __repr__(self) -> str:
        return (f"FracParams(alpha={self.alpha}, beta={self.beta}, theta={self.theta}, "
                f"rate={self.rate}, tau={self.tau})")
