import logging
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from src.laws.frac_params import check_time
from src.montecarlo.batch_config import BatchConfig
from src.montecarlo.montecarlo_enums.process_tag import ProcessTag
from src.montecarlo.random_streams import stream_generator, stream_indices
from src.montecarlo.sample_batch import SampleBatch

logger = logging.getLogger(__name__)


class ProcessSampler(ABC):
    """
    Base class of the process samplers.

    Subclasses draw ``size`` independent realisations from one generator; ``sample`` spreads a
    batch over ``worker_count`` Philox streams and writes each stream's block into its own
    slice of the output array.
    """

    def __init__(self, t: float):
        self.t = check_time(t)

    @property
    @abstractmethod
    def process_tag(self) -> ProcessTag:
        pass

    @property
    @abstractmethod
    def dim(self) -> int:
        pass

    @abstractmethod
    def draw(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """
        Draw ``size`` realisations as an array of shape (size, dim).
        """
        pass

    def sample(self, config: BatchConfig) -> SampleBatch:
        """
        Draw a reproducible batch: sample i comes from stream i mod worker_count.

        :param config: Batch size, seed and worker count.
        :return: The batch of realisations.
        """
        values = np.empty((config.n_samples, self.dim))
        partitions = stream_indices(config.n_samples, config.worker_count)

        def fill(stream: int) -> None:
            indices = partitions[stream]
            if indices.size == 0:
                return
            rng = stream_generator(config.seed, stream)
            values[indices] = np.reshape(self.draw(rng, indices.size), (indices.size, self.dim))

        logger.debug("sampling %s: %s", self.process_tag.value, config)
        if config.worker_count == 1:
            fill(0)
        else:
            with ThreadPoolExecutor(max_workers=config.worker_count) as executor:
                list(executor.map(fill, range(config.worker_count)))
        return SampleBatch(self.process_tag, self.t, config.seed, values, config.worker_count)
