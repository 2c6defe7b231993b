from enum import Enum


class ProcessTag(Enum):
    """
    Processes that can be sampled.

    - H_alpha: stable subordinator at time t.
    - L_beta: inverse stable subordinator at time t.
    - S_2theta: isotropic stable process with exponent 2 theta.
    - W_advdiff: fractional advection-diffusion process.
    - Y_fracpoisson: fractional Poisson transport process.
    - ratio_HH: t H_1 / H_2 for independent stable subordinators.
    - B_driftless: Brownian motion run by the inverse subordinator.
    """
    H_alpha = "H_alpha"
    L_beta = "L_beta"
    S_2theta = "S_2theta"
    W_advdiff = "W_advdiff"
    Y_fracpoisson = "Y_fracpoisson"
    ratio_HH = "ratio_HH"
    B_driftless = "B_driftless"
