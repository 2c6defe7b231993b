from typing import Optional

from src.laws.direction import Direction
from src.laws.frac_params import FracParams
from src.montecarlo.batch_config import BatchConfig
from src.montecarlo.sample_batch import SampleBatch
from src.montecarlo.samplers.advection_diffusion_sampler import AdvectionDiffusionSampler
from src.montecarlo.samplers.frac_poisson_transport_sampler import FracPoissonTransportSampler
from src.montecarlo.samplers.inverse_subordinator_sampler import InverseSubordinatorSampler
from src.montecarlo.samplers.isotropic_stable_sampler import IsotropicStableSampler
from src.montecarlo.samplers.stable_subordinator_sampler import StableSubordinatorSampler
from src.montecarlo.samplers.subordinated_brownian_sampler import SubordinatedBrownianSampler
from src.montecarlo.samplers.subordinator_ratio_sampler import SubordinatorRatioSampler


def sample_stable_subordinator(alpha: float, t: float, config: BatchConfig) -> SampleBatch:
    return StableSubordinatorSampler(alpha, t).sample(config)


def sample_inverse_subordinator(beta: float, t: float, config: BatchConfig) -> SampleBatch:
    return InverseSubordinatorSampler(beta, t).sample(config)


def sample_isotropic_stable(theta: float, t: float, dim: int, config: BatchConfig) -> SampleBatch:
    return IsotropicStableSampler(theta, t, dim).sample(config)


def sample_advdiff(params: FracParams, direction: Direction, t: float, config: BatchConfig) -> SampleBatch:
    return AdvectionDiffusionSampler(params, direction, t).sample(config)


def sample_frac_poisson_transport(params: FracParams, direction: Optional[Direction], t: float,
                                  config: BatchConfig) -> SampleBatch:
    return FracPoissonTransportSampler(params, direction, t).sample(config)


def sample_ratio(beta: float, t: float, config: BatchConfig) -> SampleBatch:
    return SubordinatorRatioSampler(beta, t).sample(config)


def sample_subordinated_brownian(beta: float, t: float, direction: Direction, config: BatchConfig) -> SampleBatch:
    return SubordinatedBrownianSampler(beta, direction, t).sample(config)
