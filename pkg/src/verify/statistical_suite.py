import logging
import math
from typing import Callable, List, Optional

import numpy as np

from src.laws.characteristic_functions import charfn_advdiff, charfn_frac_poisson_transport
from src.laws.densities import cdf_l, cdf_lamperti, moment_l
from src.laws.direction import Direction
from src.laws.frac_params import FracParams
from src.laws.frac_poisson import pmf_frac_poisson
from src.montecarlo.batch_config import BatchConfig
from src.montecarlo.random_streams import derive_seed
from src.montecarlo.sampling import (sample_advdiff, sample_frac_poisson_transport, sample_inverse_subordinator,
                                     sample_isotropic_stable, sample_ratio, sample_stable_subordinator,
                                     sample_subordinated_brownian)
from src.special_functions.function_specs import MLSpec
from src.special_functions.mittag_leffler import mittag_leffler
from src.verify.verification_suite import Check, CheckOutcome, VerificationSuite
from src.verify.verify_constants import VerifyConstants
from src.verify.verify_enums.check_kind import CheckKind
from src.verify.verify_enums.suite_type import SuiteType
from src.verify.verify_enums.tolerance_profile import ToleranceProfile
from src.verify.verify_utils.statistics_utils import (empirical_charfn, empirical_laplace, empirical_mean,
                                                      empirical_probability, ks_p_value, pooled_chisquare_p_value,
                                                      two_sample_ks_p_value, z_score)

logger = logging.getLogger(__name__)

_AXIS = Direction([1.0])
_PLANE = Direction([0.6, 0.8])
_ADVDIFF_PROBES = ((0.3, 0.4), (0.6, 0.8), (0.5, -0.3), (-0.4, 0.2), (1.0, 1.0))


class StatisticalSuite(VerificationSuite):
    """
    Monte Carlo checks of the samplers against the laws, accepted by KS, chi-square or standard-error tests.

    :param n_samples: Samples per batch; defaults to the profile's share of 10^5.
    """

    def __init__(self, seed: int, profile: ToleranceProfile = ToleranceProfile.strict, worker_count: int = 1,
                 record_timing: bool = True, n_samples: Optional[int] = None):
        super().__init__(seed, profile, worker_count, record_timing)
        if n_samples is None:
            n_samples = profile.sample_count(VerifyConstants.STRICT_SAMPLES)
        self.n_samples = n_samples

    @property
    def suite_type(self) -> SuiteType:
        return SuiteType.statistics

    def config(self, seed: int, label: str = "") -> BatchConfig:
        if label:
            seed = derive_seed(seed, label)
        return BatchConfig(self.n_samples, seed, self.worker_count)

    def z_check(self, name: str, paper_anchor: str, evaluate: Callable[[int], CheckOutcome]) -> Check:
        return Check(f"{self.suite_type.value}.{name}", paper_anchor, VerifyConstants.STANDARD_ERRORS,
                     CheckKind.error, evaluate, VerifyConstants.MAX_RERUNS)

    def ks_check(self, name: str, paper_anchor: str, evaluate: Callable[[int], CheckOutcome]) -> Check:
        return self.p_value_check(name, paper_anchor, VerifyConstants.P_VALUE_THRESHOLD, evaluate,
                                  VerifyConstants.MAX_RERUNS)

    def relative_check(self, name: str, paper_anchor: str, threshold: float,
                       evaluate: Callable[[int], CheckOutcome]) -> Check:
        return self.error_check(name, paper_anchor, threshold, evaluate, VerifyConstants.MAX_RERUNS)

    def subordinator_laplace(self, seed: int) -> CheckOutcome:
        alpha, t = 0.5, 1.0
        values = sample_stable_subordinator(alpha, t, self.config(seed)).component()
        scores = []
        for xi in (0.5, 1.0, 2.0):
            mean, error = empirical_laplace(values, xi)
            scores.append(z_score(mean, math.exp(-t * xi ** alpha), error))
        return max(scores), f"alpha={alpha}, max z over xi in (0.5, 1, 2), n={self.n_samples}"

    def subordinator_scaling(self, seed: int) -> CheckOutcome:
        alpha = 0.5
        later = sample_stable_subordinator(alpha, 2.0, self.config(seed, "t=2")).component()
        unit = sample_stable_subordinator(alpha, 1.0, self.config(seed, "t=1")).component()
        return two_sample_ks_p_value(later, 2.0 ** (1.0 / alpha) * unit), f"alpha={alpha}, H_2 vs 2^(1/alpha) H_1"

    def subordinator_elementary_limit(self, seed: int) -> CheckOutcome:
        t = 1.5
        values = sample_stable_subordinator(0.999, t, self.config(seed)).component()
        median = float(np.median(values))
        return abs(median / t - 1.0), f"alpha=0.999, median={median:.5g}, t={t}"

    def inverse_ks(self, beta: float, seed: int) -> CheckOutcome:
        values = sample_inverse_subordinator(beta, 1.0, self.config(seed)).component()
        return ks_p_value(values, lambda x: cdf_l(beta, x, 1.0)), f"beta={beta}, n={values.size}"

    def inverse_moments(self, seed: int) -> CheckOutcome:
        beta, t = 0.5, 1.0
        values = sample_inverse_subordinator(beta, t, self.config(seed)).component()
        mean, mean_error = empirical_mean(values)
        laplace, laplace_error = empirical_laplace(values, 1.0)
        scores = {
            "mean": z_score(mean, moment_l(beta, 1, t), mean_error),
            "laplace": z_score(laplace, mittag_leffler(MLSpec(beta), -t ** beta), laplace_error),
        }
        worst = max(scores, key=scores.get)
        return scores[worst], f"beta={beta}, worst={worst}"

    def ratio_ks(self, beta: float, seed: int) -> CheckOutcome:
        values = sample_ratio(beta, 1.0, self.config(seed)).component()
        return ks_p_value(values, lambda x: cdf_lamperti(beta, x, 1.0)), f"beta={beta}, n={values.size}"

    def ratio_median(self, seed: int) -> CheckOutcome:
        values = sample_ratio(0.5, 1.0, self.config(seed)).component()
        median = float(np.median(values))
        return abs(median - 1.0), f"beta=0.5, median={median:.5g}"

    def ratio_scaling(self, seed: int) -> CheckOutcome:
        beta = 0.5
        later = sample_ratio(beta, 2.0, self.config(seed, "t=2")).component()
        unit = sample_ratio(beta, 1.0, self.config(seed, "t=1")).component()
        return two_sample_ks_p_value(later, 2.0 * unit), f"beta={beta}, ratio at t=2 vs twice the ratio at t=1"

    def isotropic_charfn(self, seed: int) -> CheckOutcome:
        scores = []
        line = sample_isotropic_stable(0.5, 1.0, 1, self.config(seed, "dim=1")).values
        mean, error = empirical_charfn(line, [1.0])
        scores.append(z_score(mean, math.exp(-1.0), error))
        plane = sample_isotropic_stable(0.7, 1.0, 2, self.config(seed, "dim=2")).values
        for xi in ((0.5, 0.0), (0.0, 0.5), (0.5, 0.5), (1.0, 0.0), (-0.7, 0.7)):
            mean, error = empirical_charfn(plane, xi)
            scores.append(z_score(mean, math.exp(-float(np.linalg.norm(xi)) ** 1.4), error))
        return max(scores), "theta=0.5 in R and theta=0.7 in R^2"

    def isotropic_gaussian_variance(self, seed: int) -> CheckOutcome:
        t = 1.5
        values = sample_isotropic_stable(1.0, t, 1, self.config(seed)).component()
        variance = float(values.var(ddof=1))
        return abs(variance / (2.0 * t) - 1.0), f"theta=1, variance={variance:.5g}, expected {2.0 * t}"

    def advdiff_charfn(self, seed: int) -> CheckOutcome:
        params = FracParams(alpha=0.5, beta=0.8, theta=0.7)
        values = sample_advdiff(params, _PLANE, 1.0, self.config(seed)).values
        scores = []
        for xi in _ADVDIFF_PROBES:
            mean, error = empirical_charfn(values, xi)
            scores.append(z_score(mean, charfn_advdiff(params, _PLANE, xi, 1.0), error))
        return max(scores), f"{params}, a={_PLANE.a.tolist()}, {len(_ADVDIFF_PROBES)} probes"

    def advdiff_classical(self, seed: int) -> CheckOutcome:
        t = 2.0
        values = sample_advdiff(FracParams(alpha=1.0, beta=1.0, theta=1.0), _AXIS, t, self.config(seed)).component()
        mean, variance = float(values.mean()), float(values.var(ddof=1))
        deviation = max(abs(mean / t - 1.0), abs(variance / (2.0 * t) - 1.0))
        return deviation, f"mean={mean:.5g} (t={t}), variance={variance:.5g} (2t={2.0 * t})"

    def drift_lamperti(self, seed: int) -> CheckOutcome:
        beta, t = 0.5, 1.0
        params = FracParams(alpha=beta, beta=beta, rate=0.0)
        values = sample_frac_poisson_transport(params, _AXIS, t, self.config(seed)).component()
        return ks_p_value(values, lambda x: cdf_lamperti(beta, x, t)), "H^beta at L^beta_t against the Lamperti law"

    def subordination_composition(self, seed: int) -> CheckOutcome:
        scores = []
        for alpha, beta in ((0.5, 0.5), (0.7, 0.4)):
            params = FracParams(alpha=alpha, beta=beta, rate=0.0)
            label = f"alpha={alpha},beta={beta}"
            values = sample_frac_poisson_transport(params, _AXIS, 1.0, self.config(seed, label)).component()
            for xi in (0.5, 1.0):
                mean, error = empirical_laplace(values, xi)
                scores.append(z_score(mean, mittag_leffler(MLSpec(beta), -xi ** alpha), error))
        return max(scores), "E exp(-xi H^alpha(L^beta_1)) = E_beta(-xi^alpha)"

    def frac_poisson_zero(self, seed: int) -> CheckOutcome:
        scores = {}
        for beta in (0.5, 1.0):
            params = FracParams(beta=beta, rate=1.0)
            counts = sample_frac_poisson_transport(params, None, 1.0, self.config(seed, f"beta={beta}")).component()
            probability, error = empirical_probability(counts == 0.0)
            scores[f"beta={beta}"] = z_score(probability, mittag_leffler(MLSpec(beta), -1.0), error)
        worst = max(scores, key=scores.get)
        return scores[worst], f"P(N=0) against E_beta(-lambda t^beta), worst {worst}"

    def frac_poisson_chisquare(self, seed: int) -> CheckOutcome:
        beta, rate = 0.5, 1.0
        counts = sample_frac_poisson_transport(FracParams(beta=beta, rate=rate), None, 1.0,
                                               self.config(seed)).component()
        probabilities = [pmf_frac_poisson(beta, rate, k, 1.0) for k in range(11)]
        return pooled_chisquare_p_value(np.rint(counts).astype(int), probabilities), "k = 0..10, tail pooled"

    def frac_poisson_charfn(self, seed: int) -> CheckOutcome:
        params = FracParams(alpha=0.5, beta=0.5, rate=1.0, tau=1.0)
        values = sample_frac_poisson_transport(params, _AXIS, 1.0, self.config(seed)).values
        scores = []
        for xi in (0.25, 0.5):
            mean, error = empirical_charfn(values, [xi])
            scores.append(z_score(mean, charfn_frac_poisson_transport(params, _AXIS, [xi], 1.0), error))
        return max(scores), f"{params}, xi in (0.25, 0.5)"

    def subordinated_brownian_ks(self, seed: int) -> CheckOutcome:
        beta, t = 0.6, 1.0
        values = np.abs(sample_subordinated_brownian(beta, t, _AXIS, self.config(seed)).component())
        return ks_p_value(values, lambda x: cdf_l(0.5 * beta, x, t)), f"|B(L^{beta}_t)| against l_{0.5 * beta}"

    def checks(self) -> List[Check]:
        checks = [
            self.z_check("subordinator_laplace", "E exp(-xi H^alpha_t) = exp(-t xi^alpha)",
                         self.subordinator_laplace),
            self.ks_check("subordinator_scaling", "H^alpha_t has the law of t^(1/alpha) H^alpha_1",
                          self.subordinator_scaling),
            self.relative_check("subordinator_elementary_limit", "H^alpha_t tends to t as alpha -> 1",
                                VerifyConstants.MOMENT_RELATIVE_TOLERANCE, self.subordinator_elementary_limit),
            self.z_check("inverse_moments", "mean and Laplace transform of L^beta_t", self.inverse_moments),
            self.relative_check("ratio_median", "H_1/H_2 has the law of H_2/H_1",
                                VerifyConstants.MEDIAN_TOLERANCE, self.ratio_median),
            self.ks_check("ratio_scaling", "the ratio law scales linearly in t", self.ratio_scaling),
            self.z_check("isotropic_charfn", "E exp(i xi.S(t)) = exp(-t ||xi||^(2 theta))", self.isotropic_charfn),
            self.relative_check("isotropic_gaussian_variance", "theta = 1 is Brownian motion with variance 2t",
                                VerifyConstants.MOMENT_RELATIVE_TOLERANCE, self.isotropic_gaussian_variance),
            self.z_check("advdiff_charfn", "advection-diffusion characteristic function", self.advdiff_charfn),
            self.relative_check("advdiff_classical", "alpha = beta = theta = 1 is drifted Brownian motion",
                                VerifyConstants.MOMENT_RELATIVE_TOLERANCE, self.advdiff_classical),
            self.ks_check("drift_lamperti", "H^beta(L^beta_t) follows the Lamperti law", self.drift_lamperti),
            self.z_check("subordination_composition", "Laplace transform of H^alpha(L^beta_t)",
                         self.subordination_composition),
            self.z_check("frac_poisson_zero", "P(N(L^beta_t) = 0) = E_beta(-lambda t^beta)", self.frac_poisson_zero),
            self.ks_check("frac_poisson_chisquare", "fractional Poisson probabilities",
                          self.frac_poisson_chisquare),
            self.z_check("frac_poisson_charfn", "characteristic function of the Poisson transport process",
                         self.frac_poisson_charfn),
            self.ks_check("subordinated_brownian", "B(L^beta_t) has the law of the g solution",
                          self.subordinated_brownian_ks),
        ]
        for beta in (0.3, 0.5):
            checks.append(self.ks_check(f"inverse_ks_beta_{beta}", "L^beta_t has density l_beta",
                                        lambda seed, beta=beta: self.inverse_ks(beta, seed)))
            checks.append(self.ks_check(f"ratio_ks_beta_{beta}", "t H_1/H_2 follows the Lamperti law",
                                        lambda seed, beta=beta: self.ratio_ks(beta, seed)))
        return checks
