import numpy as np

from src.laws.frac_params import check_exponent
from src.montecarlo.montecarlo_enums.process_tag import ProcessTag
from src.montecarlo.samplers.process_sampler import ProcessSampler
from src.montecarlo.samplers.stable_variates import stable_variates


class StableSubordinatorSampler(ProcessSampler):
    def __init__(self, alpha: float, t: float):
        super().__init__(t)
        self.alpha = check_exponent("alpha", alpha)

    @property
    def process_tag(self) -> ProcessTag:
        return ProcessTag.H_alpha

    @property
    def dim(self) -> int:
        return 1

    def draw(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return stable_variates(self.alpha, self.t, rng, size)
