import numpy as np

from src.exceptions import DomainError
from src.laws.frac_params import check_exponent
from src.montecarlo.montecarlo_enums.process_tag import ProcessTag
from src.montecarlo.samplers.process_sampler import ProcessSampler
from src.montecarlo.samplers.stable_variates import subordinated_stable_variates


def isotropic_stable_variates(theta: float, times: np.ndarray, dim: int, rng: np.random.Generator) -> np.ndarray:
    """
    S_(2 theta)(times) = sqrt(2 H^theta_times) Z with Z a standard Gaussian vector.
    """
    variance = 2.0 * subordinated_stable_variates(theta, times, rng)
    gaussian = rng.standard_normal((times.size, dim))
    return np.sqrt(variance)[:, None] * gaussian


class IsotropicStableSampler(ProcessSampler):
    """
    Isotropic R^n-valued stable process with E exp(i xi.S(t)) = exp(-t ||xi||^(2 theta)).
    """

    def __init__(self, theta: float, t: float, dim: int = 1):
        super().__init__(t)
        self.theta = check_exponent("theta", theta)
        if int(dim) != dim or dim < 1:
            raise DomainError(f"dimension must be a positive integer: {dim}")
        self._dim = int(dim)

    @property
    def process_tag(self) -> ProcessTag:
        return ProcessTag.S_2theta

    @property
    def dim(self) -> int:
        return self._dim

    def draw(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return isotropic_stable_variates(self.theta, np.full(size, self.t), self._dim, rng)
