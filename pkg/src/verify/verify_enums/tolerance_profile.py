from enum import Enum


class ToleranceProfile(Enum):
    """
    Tolerance profiles; the value is the loosening factor.

    - strict: thresholds as listed, full sample counts.
    - fast: error thresholds 10x looser, p-value thresholds 10x lower, 10x fewer samples.
    """
    strict = 1.0
    fast = 10.0

    def error_threshold(self, threshold: float) -> float:
        return threshold * self.value

    def p_value_threshold(self, threshold: float) -> float:
        return threshold / self.value

    def sample_count(self, n_samples: int) -> int:
        return max(1, int(n_samples / self.value))
