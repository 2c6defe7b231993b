import logging
import time
from typing import Optional

from src.verify.identity_suite import IdentitySuite
from src.verify.residual_suite import ResidualSuite
from src.verify.statistical_suite import StatisticalSuite
from src.verify.verification_report import VerificationReport
from src.verify.verify_constants import VerifyConstants
from src.verify.verify_enums.suite_type import SuiteType
from src.verify.verify_enums.tolerance_profile import ToleranceProfile

logger = logging.getLogger(__name__)


def run_identity_suite(profile: ToleranceProfile = ToleranceProfile.strict, worker_count: int = 1,
                       seed: int = VerifyConstants.DEFAULT_SEED, record_timing: bool = True) -> VerificationReport:
    return IdentitySuite(seed, profile, worker_count, record_timing).run()


def run_statistical_suite(seed: int = VerifyConstants.DEFAULT_SEED, n_samples: Optional[int] = None,
                          profile: ToleranceProfile = ToleranceProfile.strict, worker_count: int = 1,
                          record_timing: bool = True) -> VerificationReport:
    return StatisticalSuite(seed, profile, worker_count, record_timing, n_samples).run()


def run_residual_suite(profile: ToleranceProfile = ToleranceProfile.strict, worker_count: int = 1,
                       seed: int = VerifyConstants.DEFAULT_SEED, record_timing: bool = True) -> VerificationReport:
    return ResidualSuite(seed, profile, worker_count, record_timing).run()


def run_all(seed: int = VerifyConstants.DEFAULT_SEED, n_samples: Optional[int] = None,
            profile: ToleranceProfile = ToleranceProfile.strict, worker_count: int = 1,
            record_timing: bool = True) -> VerificationReport:
    """
    Run the identity, statistical and residual suites and merge their results into one report.
    """
    start = time.perf_counter()
    reports = [
        run_identity_suite(profile, worker_count, seed, record_timing),
        run_statistical_suite(seed, n_samples, profile, worker_count, record_timing),
        run_residual_suite(profile, worker_count, seed, record_timing),
    ]
    wall_time = time.perf_counter() - start if record_timing else 0.0
    return VerificationReport.combine(reports, seed, wall_time)


def run_suite(suite: SuiteType, seed: int = VerifyConstants.DEFAULT_SEED, n_samples: Optional[int] = None,
              profile: ToleranceProfile = ToleranceProfile.strict, worker_count: int = 1,
              record_timing: bool = True) -> VerificationReport:
    logger.info("verification suite %s, seed %s, profile %s", suite.value, seed, profile.name)
    if suite is SuiteType.identities:
        return run_identity_suite(profile, worker_count, seed, record_timing)
    if suite is SuiteType.statistics:
        return run_statistical_suite(seed, n_samples, profile, worker_count, record_timing)
    if suite is SuiteType.residuals:
        return run_residual_suite(profile, worker_count, seed, record_timing)
    return run_all(seed, n_samples, profile, worker_count, record_timing)
