import numpy as np

from src.laws.frac_params import check_exponent
from src.montecarlo.montecarlo_enums.process_tag import ProcessTag
from src.montecarlo.samplers.process_sampler import ProcessSampler
from src.montecarlo.samplers.stable_variates import unit_stable_variates


class SubordinatorRatioSampler(ProcessSampler):
    """
    t H_1 / H_2 for two independent stable subordinators at unit time; Lamperti distributed.
    """

    def __init__(self, beta: float, t: float):
        super().__init__(t)
        self.beta = check_exponent("beta", beta, allow_one=False)

    @property
    def process_tag(self) -> ProcessTag:
        return ProcessTag.ratio_HH

    @property
    def dim(self) -> int:
        return 1

    def draw(self, rng: np.random.Generator, size: int) -> np.ndarray:
        numerator = unit_stable_variates(self.beta, rng, size)
        denominator = unit_stable_variates(self.beta, rng, size)
        return self.t * numerator / denominator
