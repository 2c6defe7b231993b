import logging
import time
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Tuple

from src.exceptions import FractionalError
from src.montecarlo.random_streams import derive_seed
from src.verify.check_result import CheckResult
from src.verify.verification_report import VerificationReport
from src.verify.verify_enums.check_kind import CheckKind
from src.verify.verify_enums.suite_type import SuiteType
from src.verify.verify_enums.tolerance_profile import ToleranceProfile

logger = logging.getLogger(__name__)

CheckOutcome = Tuple[float, str]


class Check:
    """
    One named check. ``evaluate`` receives a seed and returns (metric, detail).

    :param reruns: Extra attempts with freshly derived seeds before a check is reported failed.
    """

    def __init__(self, name: str, paper_anchor: str, threshold: float, kind: CheckKind,
                 evaluate: Callable[[int], CheckOutcome], reruns: int = 0):
        self.name = name
        self.paper_anchor = paper_anchor
        self.threshold = threshold
        self.kind = kind
        self.evaluate = evaluate
        self.reruns = reruns

    def run(self, seed: int) -> CheckResult:
        result = None
        for attempt in range(self.reruns + 1):
            attempt_seed = seed if attempt == 0 else derive_seed(seed, self.name, attempt)
            try:
                metric, detail = self.evaluate(attempt_seed)
            except (FractionalError, ArithmeticError, ValueError) as error:
                logger.warning("check %s raised %s: %s", self.name, type(error).__name__, error)
                return CheckResult.from_exception(self.name, self.paper_anchor, self.threshold, self.kind, error)
            if self.reruns:
                detail = f"{detail}; attempts={attempt + 1}"
            result = CheckResult(self.name, self.paper_anchor, metric, self.threshold, self.kind, detail)
            if result.passed:
                break
            logger.info("check %s attempt %d failed: %s", self.name, attempt + 1, result)
        return result


class VerificationSuite(ABC):
    """
    Base class for the verification suites. Subclasses list their checks; running them is shared.
    """

    def __init__(self, seed: int, profile: ToleranceProfile = ToleranceProfile.strict, worker_count: int = 1,
                 record_timing: bool = True):
        if worker_count < 1:
            raise ValueError(f"worker_count must be positive: {worker_count}")
        self.seed = seed
        self.profile = profile
        self.worker_count = worker_count
        self.record_timing = record_timing

    @property
    @abstractmethod
    def suite_type(self) -> SuiteType:
        pass

    @abstractmethod
    def checks(self) -> List[Check]:
        pass

    def error_check(self, name: str, paper_anchor: str, threshold: float,
                    evaluate: Callable[[int], CheckOutcome], reruns: int = 0) -> Check:
        return Check(f"{self.suite_type.value}.{name}", paper_anchor, self.profile.error_threshold(threshold),
                     CheckKind.error, evaluate, reruns)

    def p_value_check(self, name: str, paper_anchor: str, threshold: float,
                      evaluate: Callable[[int], CheckOutcome], reruns: int = 0) -> Check:
        return Check(f"{self.suite_type.value}.{name}", paper_anchor, self.profile.p_value_threshold(threshold),
                     CheckKind.p_value, evaluate, reruns)

    def run(self) -> VerificationReport:
        start = time.perf_counter()
        checks = self.checks()
        logger.info("running %d %s checks, profile %s", len(checks), self.suite_type.value, self.profile.name)
        if self.worker_count == 1:
            results = [check.run(self.seed) for check in checks]
        else:
            with ThreadPoolExecutor(max_workers=self.worker_count) as executor:
                results = list(executor.map(lambda check: check.run(self.seed), checks))
        for result in results:
            logger.debug(result)
        wall_time = time.perf_counter() - start if self.record_timing else 0.0
        report = VerificationReport(self.suite_type, self.seed, results, wall_time)
        logger.info("%s: %d of %d checks failed", self.suite_type.value, len(report.failures()), len(results))
        return report
