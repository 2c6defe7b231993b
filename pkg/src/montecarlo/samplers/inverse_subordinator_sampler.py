import numpy as np

from src.laws.frac_params import check_exponent
from src.montecarlo.montecarlo_enums.process_tag import ProcessTag
from src.montecarlo.samplers.process_sampler import ProcessSampler
from src.montecarlo.samplers.stable_variates import inverse_stable_variates


class InverseSubordinatorSampler(ProcessSampler):
    def __init__(self, beta: float, t: float):
        super().__init__(t)
        self.beta = check_exponent("beta", beta)

    @property
    def process_tag(self) -> ProcessTag:
        return ProcessTag.L_beta

    @property
    def dim(self) -> int:
        return 1

    def draw(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return inverse_stable_variates(self.beta, self.t, rng, size)
