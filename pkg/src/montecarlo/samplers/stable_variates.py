import numpy as np

from src.special_functions.kanter_function import log_kanter_function


def unit_stable_variates(alpha: float, rng: np.random.Generator, size: int) -> np.ndarray:
    """
    Kanter's representation of the one-sided stable law at unit time,
    H = (A(pi U) / E)^((1-alpha)/alpha) with U uniform on (0, 1] and E standard exponential.

    alpha = 1 is the deterministic subordinator H_1 = 1.
    """
    if alpha == 1.0:
        return np.ones(size)
    uniform = 1.0 - rng.random(size)
    exponential = rng.standard_exponential(size)
    log_a = log_kanter_function(alpha, np.pi * uniform)
    return np.exp((1.0 - alpha) / alpha * (log_a - np.log(exponential)))


def stable_variates(alpha: float, t: float, rng: np.random.Generator, size: int) -> np.ndarray:
    """
    H^alpha_t = t^(1/alpha) H^alpha_1.
    """
    if alpha == 1.0:
        return np.full(size, float(t))
    return t ** (1.0 / alpha) * unit_stable_variates(alpha, rng, size)


def inverse_stable_variates(beta: float, t: float, rng: np.random.Generator, size: int) -> np.ndarray:
    """
    L^beta_t = (t / H^beta_1)^beta, from P{L_t < x} = P{H_x > t} and stable scaling.
    """
    if beta == 1.0:
        return np.full(size, float(t))
    return np.exp(beta * (np.log(t) - np.log(unit_stable_variates(beta, rng, size))))


def subordinated_stable_variates(alpha: float, times: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """
    H^alpha evaluated at the random times ``times``: times^(1/alpha) H^alpha_1.
    """
    if alpha == 1.0:
        return np.asarray(times, dtype=float).copy()
    return np.power(times, 1.0 / alpha) * unit_stable_variates(alpha, rng, times.size)
