import cmath
from typing import Optional, Sequence

import numpy as np

from src.fracops.symbols import dir_symbol, laplacian_symbol
from src.laws.direction import Direction
from src.laws.frac_params import FracParams, check_time
from src.special_functions.function_specs import MLSpec
from src.special_functions.mittag_leffler import mittag_leffler_complex


def advdiff_exponent(params: FracParams, direction: Direction, xi: Sequence[float]) -> complex:
    """
    ||xi||^(2 theta) + (-i a.xi)^alpha, the Fourier symbol of the advection-diffusion operator.
    """
    return laplacian_symbol(params.theta, xi) + dir_symbol(params.alpha, direction, xi)


def charfn_advdiff(params: FracParams, direction: Direction, xi: Sequence[float], t: float) -> complex:
    """
    Characteristic function E exp(i xi.W(t)) = E_beta(-t^beta ||xi||^(2 theta) - t^beta (-i a.xi)^alpha)
    of the fractional advection-diffusion process.

    :raises AccuracyError: when the Mittag-Leffler argument leaves the validated disc.
    """
    t = check_time(t)
    argument = -t ** params.beta * advdiff_exponent(params, direction, xi)
    return mittag_leffler_complex(MLSpec(params.beta), argument)


def poisson_transport_exponent(params: FracParams, direction: Optional[Direction], xi: Sequence[float]) -> complex:
    """
    lambda (1 - exp(i tau 1.xi)) / tau + (-i a.xi)^alpha for jumps of size tau along every axis.
    """
    xi = np.asarray(xi, dtype=float).reshape(-1)
    jump = params.rate * (1.0 - cmath.exp(1j * params.tau * float(np.sum(xi)))) / params.tau
    if direction is None:
        return jump
    return jump + dir_symbol(params.alpha, direction, xi)


def charfn_frac_poisson_transport(params: FracParams, direction: Optional[Direction], xi: Sequence[float],
                                  t: float) -> complex:
    """
    Characteristic function of Y_t = tau N(L_t / tau) 1 + a H^alpha_{L_t}:
    E_beta(-t^beta [lambda (1 - e^(i tau 1.xi)) / tau + (-i a.xi)^alpha]).
    """
    t = check_time(t)
    argument = -t ** params.beta * poisson_transport_exponent(params, direction, xi)
    return mittag_leffler_complex(MLSpec(params.beta), argument)
