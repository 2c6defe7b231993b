import zlib
from typing import List

import numpy as np

from src.montecarlo.montecarlo_constants import MonteCarloConstants


def stream_generator(seed: int, stream_index: int) -> np.random.Generator:
    """
    Counter-based Philox generator keyed by the 128-bit value (seed, stream_index).

    :param seed: 64-bit run seed.
    :param stream_index: Index of the worker stream.
    :return: A generator whose draws depend only on (seed, stream_index).
    """
    return np.random.Generator(np.random.Philox(key=(seed << 64) | stream_index))


def stream_indices(n_samples: int, worker_count: int) -> List[np.ndarray]:
    """
    Sample indices owned by every stream: sample i belongs to stream i mod worker_count,
    at position i div worker_count inside that stream.
    """
    return [np.arange(stream, n_samples, worker_count) for stream in range(worker_count)]


def derive_seed(seed: int, label: str, attempt: int = 0) -> int:
    """
    Deterministic 64-bit child seed for a named consumer and retry attempt.
    """
    sequence = np.random.SeedSequence([seed, zlib.crc32(label.encode("utf-8")), attempt])
    return int(sequence.generate_state(1, dtype=np.uint64)[0]) & MonteCarloConstants.MAX_SEED
