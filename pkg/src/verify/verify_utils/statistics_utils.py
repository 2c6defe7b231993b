import math
from typing import Callable, Sequence, Tuple

import numpy as np
from scipy import stats


def z_score(estimate: complex, target: complex, standard_error: float) -> float:
    """
    Distance between a Monte Carlo estimate and its target in standard errors.
    """
    difference = abs(estimate - target)
    if standard_error > 0:
        return difference / standard_error
    return 0.0 if difference == 0 else math.inf


def empirical_laplace(values: np.ndarray, xi: float) -> Tuple[float, float]:
    """
    :return: sample mean of exp(-xi * X) and its standard error.
    """
    weights = np.exp(-xi * np.asarray(values, dtype=float))
    return float(weights.mean()), float(weights.std(ddof=1) / math.sqrt(weights.size))


def empirical_mean(values: np.ndarray) -> Tuple[float, float]:
    values = np.asarray(values, dtype=float)
    return float(values.mean()), float(values.std(ddof=1) / math.sqrt(values.size))


def empirical_charfn(values: np.ndarray, xi: Sequence[float]) -> Tuple[complex, float]:
    """
    Sample mean of exp(i xi.X) for rows of ``values`` with the standard error of the complex mean.
    """
    values = np.asarray(values, dtype=float)
    if values.ndim == 1:
        values = values[:, None]
    phase = values @ np.asarray(xi, dtype=float)
    cosine, sine = np.cos(phase), np.sin(phase)
    variance = cosine.var(ddof=1) + sine.var(ddof=1)
    return complex(cosine.mean(), sine.mean()), math.sqrt(variance / phase.size)


def empirical_probability(flags: np.ndarray) -> Tuple[float, float]:
    flags = np.asarray(flags, dtype=float)
    p = float(flags.mean())
    return p, math.sqrt(max(p * (1.0 - p), 1.0 / flags.size) / flags.size)


def ks_p_value(samples: np.ndarray, cdf: Callable[[np.ndarray], np.ndarray]) -> float:
    return float(stats.kstest(np.asarray(samples, dtype=float), cdf).pvalue)


def two_sample_ks_p_value(first: np.ndarray, second: np.ndarray) -> float:
    return float(stats.ks_2samp(np.asarray(first, dtype=float), np.asarray(second, dtype=float)).pvalue)


def pooled_chisquare_p_value(counts: np.ndarray, probabilities: Sequence[float]) -> float:
    """
    Pearson chi-square test of integer counts against pmf values for 0..K, with everything above K pooled.

    :param counts: Non-negative integer observations.
    :param probabilities: pmf at 0..K.
    """
    counts = np.asarray(counts, dtype=np.int64)
    probabilities = np.asarray(probabilities, dtype=float)
    top = probabilities.size
    observed = np.bincount(np.minimum(counts, top), minlength=top + 1)[:top + 1].astype(float)
    expected = np.empty(top + 1)
    expected[:top] = counts.size * probabilities
    expected[top] = counts.size - expected[:top].sum()
    if expected[top] <= 0:
        observed[top - 1] += observed[top]
        observed, expected = observed[:top], expected[:top] * (counts.size / expected[:top].sum())
    return float(stats.chisquare(observed, expected).pvalue)
