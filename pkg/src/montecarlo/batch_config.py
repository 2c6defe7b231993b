from src.exceptions import SeedError
from src.montecarlo.montecarlo_constants import MonteCarloConstants


class BatchConfig:
    """
    Size, seed and parallelism of a sampling run; (seed, n_samples, worker_count) is the reproducibility key.
    """

    def __init__(self, n_samples: int, seed: int = MonteCarloConstants.DEFAULT_SEED,
                 worker_count: int = MonteCarloConstants.DEFAULT_WORKERS):
        if int(n_samples) != n_samples or n_samples < 1:
            raise SeedError(f"a batch needs at least one sample: {n_samples}")
        if int(seed) != seed or not 0 <= seed <= MonteCarloConstants.MAX_SEED:
            raise SeedError(f"seed must be a 64-bit unsigned integer: {seed}")
        if int(worker_count) != worker_count or worker_count < 1:
            raise SeedError(f"worker count must be a positive integer: {worker_count}")
        self.n_samples = int(n_samples)
        self.seed = int(seed)
        self.worker_count = int(worker_count)

    def __repr__(self) -> str:
        return f"BatchConfig(n_samples={self.n_samples}, seed={self.seed}, worker_count={self.worker_count})"
