import cmath
import logging
import math
from abc import ABC, abstractmethod
from typing import Optional, Tuple, Union

import numpy as np
from scipy import special

from src.exceptions import AccuracyError
from src.numerics.numerics_constants import NumericsConstants
from src.numerics.precision_utils import KahanAccumulator, mp_context
from src.special_functions.special_functions_constants import SpecialFunctionsConstants

logger = logging.getLogger(__name__)

Number = Union[float, complex]


class SeriesEstimate:
    """
    Outcome of one summation pass.

    :param value: Partial sum at termination.
    :param error: Estimated absolute rounding plus truncation error.
    :param term_count: Number of terms consumed.
    """

    def __init__(self, value: Number, error: float, term_count: int):
        self.value = value
        self.error = error
        self.term_count = term_count


class GammaSeries(ABC):
    """
    Power series sum_k c_k z^k whose coefficients are products of reciprocal gamma functions.

    The float pass sums terms with Kahan compensation and tracks a running error estimate.
    When that estimate misses the target, the series is re-summed in an mpmath context whose
    precision covers the largest term; the result is kept once two precisions agree.

    Subclasses provide the coefficients in two forms:
        - _log_abs_coefficients: vectorised log|c_k| and sign(c_k), zero sign at gamma poles.
        - _coefficient_mp: c_k in a given mpmath context.
    """

    def __init__(self, precision_target: float, absolute_floor: float):
        self.precision_target = precision_target
        self.absolute_floor = absolute_floor

    @abstractmethod
    def _log_abs_coefficients(self, k: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        pass

    @abstractmethod
    def _coefficient_mp(self, context, k: int):
        pass

    def evaluate(self, z: Number) -> Number:
        """
        Sum the series at ``z`` to the precision target, escalating precision when needed.

        :param z: Real or complex argument.
        :return: The series value, same kind as ``z``.
        """
        if z == 0:
            return self._zero_value(z)
        estimate = self._sum_float(z)
        if estimate is not None and self._accepted(estimate.value, estimate.error):
            return estimate.value
        return self._sum_escalated(z)

    def evaluate_float_only(self, z: Number) -> Optional[Number]:
        """
        Float pass only; ``None`` when its error estimate misses the target.
        """
        if z == 0:
            return self._zero_value(z)
        estimate = self._sum_float(z)
        if estimate is not None and self._accepted(estimate.value, estimate.error):
            return estimate.value
        return None

    def _zero_value(self, z: Number) -> Number:
        log_c, sign = self._log_abs_coefficients(np.zeros(1))
        value = float(sign[0] * math.exp(log_c[0])) if sign[0] != 0 else 0.0
        return complex(value) if isinstance(z, complex) else value

    def _accepted(self, value: Number, error: float) -> bool:
        return error <= max(self.precision_target * abs(value), self.absolute_floor)

    def _sum_float(self, z: Number) -> Optional[SeriesEstimate]:
        is_complex = isinstance(z, complex)
        log_modulus = math.log(abs(z))
        angle = cmath.phase(z) if is_complex else 0.0
        accumulator = KahanAccumulator(0j if is_complex else 0.0)
        rounding = 0.0
        peak = -math.inf
        small_run = 0
        chunk = SpecialFunctionsConstants.CHUNK_SIZE
        for start in range(0, SpecialFunctionsConstants.MAX_TERMS, chunk):
            k = np.arange(start, start + chunk, dtype=float)
            log_c, sign = self._log_abs_coefficients(k)
            log_terms = log_c + k * log_modulus
            if np.any(log_terms > SpecialFunctionsConstants.LOG_FLOAT_MAX):
                logger.debug("float series overflows at k >= %d, z=%s", start, z)
                return None
            magnitudes = np.exp(log_terms)
            conditioning = np.where(magnitudes > 0.0, np.abs(log_c) + np.abs(k * log_modulus), 0.0)
            if is_complex:
                terms = sign * magnitudes * np.exp(1j * k * angle)
            else:
                terms = sign * magnitudes * (1.0 if z > 0 else np.where(k % 2 == 0, 1.0, -1.0))
            for index in range(chunk):
                magnitude = float(magnitudes[index])
                accumulator.add(complex(terms[index]) if is_complex else float(terms[index]))
                rounding += magnitude * (4.0 + float(conditioning[index]))
                if log_terms[index] > peak:
                    peak = float(log_terms[index])
                    small_run = 0
                    continue
                if magnitude <= max(self.precision_target * abs(accumulator.value), self.absolute_floor):
                    small_run += 1
                else:
                    small_run = 0
                if small_run >= SpecialFunctionsConstants.SMALL_TERM_RUN:
                    error = rounding * NumericsConstants.MACHINE_EPSILON + magnitude
                    return SeriesEstimate(accumulator.value, error, start + index + 1)
        raise AccuracyError(f"series did not terminate within {SpecialFunctionsConstants.MAX_TERMS} terms at z={z}")

    def _log_terms(self, z: Number) -> np.ndarray:
        k = np.arange(SpecialFunctionsConstants.MAX_TERMS, dtype=float)
        log_c, sign = self._log_abs_coefficients(k)
        return np.where(sign == 0.0, -np.inf, log_c + k * math.log(abs(z)))

    @staticmethod
    def _term_count(log_terms: np.ndarray, peak_index: int, cutoff: float) -> int:
        # first index past the peak after which no term reaches the cutoff
        tail_max = np.maximum.accumulate(log_terms[::-1])[::-1]
        below = np.nonzero(tail_max[peak_index + 1:] < cutoff)[0]
        if below.size == 0:
            raise AccuracyError(f"series terms stay above e^{cutoff:.1f} for "
                                f"{SpecialFunctionsConstants.MAX_TERMS} terms")
        return peak_index + 1 + int(below[0])

    def _sum_mp(self, z: Number, dps: int, term_count: int):
        context = mp_context(dps)
        argument = context.mpc(z.real, z.imag) if isinstance(z, complex) else context.mpf(z)
        total = context.mpf(0)
        power = context.mpf(1)
        for k in range(term_count):
            total += self._coefficient_mp(context, k) * power
            power *= argument
        return total

    def _sum_escalated(self, z: Number) -> Number:
        """
        Sum in extended precision until two working precisions agree to the target.

        The first precision covers the largest term, located in log space, plus the target digits.
        Each pass sums every term above the rounding level of its precision.
        """
        log_terms = self._log_terms(z)
        peak_index = int(np.argmax(log_terms))
        log10_peak = max(float(log_terms[peak_index]) / math.log(10.0), 0.0)
        digits = -math.log10(self.precision_target)
        dps = int(math.ceil(log10_peak + digits + SpecialFunctionsConstants.GUARD_DIGITS))
        previous = None
        for attempt in range(SpecialFunctionsConstants.MAX_ESCALATIONS):
            dps = min(max(dps, 20), SpecialFunctionsConstants.MAX_DPS)
            cutoff = (log10_peak - dps - SpecialFunctionsConstants.GUARD_DIGITS) * math.log(10.0)
            term_count = self._term_count(log_terms, peak_index, cutoff)
            logger.debug("escalating series at z=%s to %d digits over %d terms (attempt %d)", z, dps, term_count,
                         attempt)
            total = self._sum_mp(z, dps, term_count)
            shortfall = 0.0
            if previous is not None:
                context = mp_context(dps)
                difference = abs(total - previous)
                allowed = max(self.precision_target * abs(total), context.mpf(self.absolute_floor))
                if difference <= allowed:
                    return complex(total) if isinstance(z, complex) else float(total)
                shortfall = float(context.log10(difference / allowed))
            if dps >= SpecialFunctionsConstants.MAX_DPS:
                break
            previous = total
            dps += int(math.ceil(shortfall)) + SpecialFunctionsConstants.GUARD_DIGITS
        raise AccuracyError(f"precision target {self.precision_target} not reached at z={z} "
                            f"within {SpecialFunctionsConstants.MAX_DPS} digits")


class WrightSeries(GammaSeries):
    """
    W_{mu,rho}(z) = sum_k z^k / (k! Gamma(mu k + rho)).
    """

    def __init__(self, mu: float, rho: float, precision_target: float, absolute_floor: float):
        super().__init__(precision_target, absolute_floor)
        self.mu = mu
        self.rho = rho

    def _log_abs_coefficients(self, k: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        argument = self.mu * k + self.rho
        with np.errstate(over="ignore", divide="ignore"):
            sign = np.sign(special.rgamma(argument))
            log_c = -special.gammaln(k + 1.0) - special.gammaln(argument)
        return np.where(sign == 0.0, -np.inf, log_c), sign

    def _coefficient_mp(self, context, k: int):
        return context.rgamma(context.mpf(self.mu) * k + context.mpf(self.rho)) / context.factorial(k)


class MittagLefflerSeries(GammaSeries):
    """
    E_{beta,gamma}(z) = sum_k z^k / Gamma(beta k + gamma).
    """

    def __init__(self, beta: float, gamma: float, precision_target: float, absolute_floor: float):
        super().__init__(precision_target, absolute_floor)
        self.beta = beta
        self.gamma = gamma

    def _log_abs_coefficients(self, k: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        argument = self.beta * k + self.gamma
        with np.errstate(over="ignore", divide="ignore"):
            sign = np.sign(special.rgamma(argument))
            log_c = -special.gammaln(argument)
        return np.where(sign == 0.0, -np.inf, log_c), sign

    def _coefficient_mp(self, context, k: int):
        return context.rgamma(context.mpf(self.beta) * k + context.mpf(self.gamma))
