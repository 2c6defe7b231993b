import numpy as np

from src.laws.direction import Direction
from src.laws.frac_params import FracParams
from src.montecarlo.montecarlo_enums.process_tag import ProcessTag
from src.montecarlo.samplers.isotropic_stable_sampler import isotropic_stable_variates
from src.montecarlo.samplers.process_sampler import ProcessSampler
from src.montecarlo.samplers.stable_variates import inverse_stable_variates, subordinated_stable_variates


class AdvectionDiffusionSampler(ProcessSampler):
    """
    W(t) = S_(2 theta)(L^beta_t) + a H^alpha_(L^beta_t).

    One inverse-subordinator draw per sample; the stable process and the drift subordinator are
    drawn independently at that random time.
    """

    def __init__(self, params: FracParams, direction: Direction, t: float):
        super().__init__(t)
        self.params = params
        self.direction = direction

    @property
    def process_tag(self) -> ProcessTag:
        return ProcessTag.W_advdiff

    @property
    def dim(self) -> int:
        return self.direction.dim

    def draw(self, rng: np.random.Generator, size: int) -> np.ndarray:
        clock = inverse_stable_variates(self.params.beta, self.t, rng, size)
        diffusion = isotropic_stable_variates(self.params.theta, clock, self.dim, rng)
        drift = subordinated_stable_variates(self.params.alpha, clock, rng)
        return diffusion + drift[:, None] * self.direction.a[None, :]
