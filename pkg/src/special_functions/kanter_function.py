import math
from typing import Union

import numpy as np

ArrayOrFloat = Union[float, np.ndarray]


def log_kanter_function(exponent: float, angle: ArrayOrFloat) -> ArrayOrFloat:
    """
    Logarithm of Kanter's function on (0, pi):

        A(phi) = sin(a phi)^(a/(1-a)) * sin((1-a) phi) / sin(phi)^(1/(1-a)),   a = exponent.

    A increases from (1-a) a^(a/(1-a)) at phi -> 0 to infinity at phi -> pi. It drives both the
    Zolotarev integrals of the one-sided stable law and the Kanter sampler.

    :param exponent: Stability index a in (0, 1).
    :param angle: phi in (0, pi), scalar or array.
    :return: log A(phi).
    """
    ratio = exponent / (1.0 - exponent)
    if isinstance(angle, np.ndarray):
        return (ratio * np.log(np.sin(exponent * angle)) + np.log(np.sin((1.0 - exponent) * angle))
                - np.log(np.sin(angle)) / (1.0 - exponent))
    return (ratio * math.log(math.sin(exponent * angle)) + math.log(math.sin((1.0 - exponent) * angle))
            - math.log(math.sin(angle)) / (1.0 - exponent))


def kanter_minimum(exponent: float) -> float:
    """
    lim_{phi -> 0} A(phi) = (1-a) a^(a/(1-a)).
    """
    return (1.0 - exponent) * exponent ** (exponent / (1.0 - exponent))
