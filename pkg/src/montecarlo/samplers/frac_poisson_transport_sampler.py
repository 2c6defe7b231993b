from typing import Optional

import numpy as np

from src.laws.direction import Direction
from src.laws.frac_params import FracParams
from src.montecarlo.montecarlo_enums.process_tag import ProcessTag
from src.montecarlo.samplers.process_sampler import ProcessSampler
from src.montecarlo.samplers.stable_variates import inverse_stable_variates, subordinated_stable_variates


class FracPoissonTransportSampler(ProcessSampler):
    """
    Y_t = tau N(L^beta_t / tau) 1 + a H^alpha_(L^beta_t).

    The count and the drift subordinator share the L draw and are conditionally independent given it.
    Without a direction the process is the one-dimensional scaled count.
    """

    def __init__(self, params: FracParams, direction: Optional[Direction], t: float):
        super().__init__(t)
        self.params = params
        self.direction = direction

    @property
    def process_tag(self) -> ProcessTag:
        return ProcessTag.Y_fracpoisson

    @property
    def dim(self) -> int:
        return 1 if self.direction is None else self.direction.dim

    def draw(self, rng: np.random.Generator, size: int) -> np.ndarray:
        clock = inverse_stable_variates(self.params.beta, self.t, rng, size)
        counts = rng.poisson(self.params.rate * clock / self.params.tau)
        jumps = np.repeat((self.params.tau * counts)[:, None], self.dim, axis=1).astype(float)
        if self.direction is None:
            return jumps
        drift = subordinated_stable_variates(self.params.alpha, clock, rng)
        return jumps + drift[:, None] * self.direction.a[None, :]
