import numpy as np

from src.laws.direction import Direction
from src.laws.frac_params import check_exponent
from src.montecarlo.montecarlo_enums.process_tag import ProcessTag
from src.montecarlo.samplers.process_sampler import ProcessSampler
from src.montecarlo.samplers.stable_variates import inverse_stable_variates


class SubordinatedBrownianSampler(ProcessSampler):
    """
    B(L^beta_t) a, with B a one-dimensional Brownian motion of variance 2s at time s.

    The projection a.x has the density 1/2 l_(beta/2)(|y|, t).
    """

    def __init__(self, beta: float, direction: Direction, t: float):
        super().__init__(t)
        self.beta = check_exponent("beta", beta)
        self.direction = direction

    @property
    def process_tag(self) -> ProcessTag:
        return ProcessTag.B_driftless

    @property
    def dim(self) -> int:
        return self.direction.dim

    def draw(self, rng: np.random.Generator, size: int) -> np.ndarray:
        clock = inverse_stable_variates(self.beta, self.t, rng, size)
        position = np.sqrt(2.0 * clock) * rng.standard_normal(size)
        return position[:, None] * self.direction.a[None, :]
