import csv
import io
from typing import List, TextIO, Tuple, Union

import numpy as np

from src.exceptions import IoError, SeedError
from src.montecarlo.montecarlo_enums.process_tag import ProcessTag


class SampleBatch:
    """
    Realisations of one process at one time.

    :param process_tag: Sampled process.
    :param t: Time of the realisations.
    :param seed: Seed the batch was drawn with.
    :param values: Array of shape (n_samples, dim).
    :param worker_count: Number of streams used.
    """

    def __init__(self, process_tag: ProcessTag, t: float, seed: int, values: np.ndarray, worker_count: int = 1):
        values = np.asarray(values, dtype=float)
        if values.ndim == 1:
            values = values[:, None]
        if values.ndim != 2 or values.shape[0] < 1 or values.shape[1] < 1:
            raise SeedError(f"sample array must have shape (n_samples >= 1, dim >= 1): {values.shape}")
        self.process_tag = process_tag
        self.t = t
        self.seed = seed
        self.values = values
        self.worker_count = worker_count

    @property
    def n_samples(self) -> int:
        return int(self.values.shape[0])

    @property
    def dim(self) -> int:
        return int(self.values.shape[1])

    def component(self, index: int = 0) -> np.ndarray:
        return self.values[:, index]

    def summary(self) -> List[Tuple[float, float]]:
        """
        Sample mean and standard deviation of every component.
        """
        means = self.values.mean(axis=0)
        stds = self.values.std(axis=0, ddof=1) if self.n_samples > 1 else np.zeros(self.dim)
        return [(float(mean), float(std)) for mean, std in zip(means, stds)]

    def header(self) -> List[str]:
        return ["index"] + [f"component_{k}" for k in range(self.dim)]

    def write_csv(self, stream: TextIO) -> None:
        """
        Write ``index,component_0..`` rows; floats use their shortest round-trip representation.
        """
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.header())
        for index, row in enumerate(self.values):
            writer.writerow([index] + [repr(float(value)) for value in row])

    def to_csv(self, path: Union[str, None] = None) -> str:
        """
        Serialise to ``path`` (when given) and return the CSV text.

        :raises IoError: when the file cannot be written.
        """
        buffer = io.StringIO()
        self.write_csv(buffer)
        text = buffer.getvalue()
        if path is not None:
            try:
                with open(path, "w", newline="") as handle:
                    handle.write(text)
            except OSError as error:
                raise IoError(f"cannot write sample file {path}: {error}") from error
        return text

    @classmethod
    def from_csv(cls, text: str, process_tag: ProcessTag, t: float, seed: int) -> "SampleBatch":
        rows = list(csv.reader(io.StringIO(text)))
        values = np.array([[float(cell) for cell in row[1:]] for row in rows[1:]], dtype=float)
        return cls(process_tag, t, seed, values)
