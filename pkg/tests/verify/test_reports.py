import json
import math
import unittest

from src.exceptions import QuadratureError
from src.verify.check_result import CheckResult
from src.verify.verification_report import VerificationReport
from src.verify.verification_suite import Check, VerificationSuite
from src.verify.verify_enums.check_kind import CheckKind
from src.verify.verify_enums.suite_type import SuiteType
from src.verify.verify_enums.tolerance_profile import ToleranceProfile


class _FlakySuite(VerificationSuite):

    @property
    def suite_type(self):
        return SuiteType.statistics

    def checks(self):
        return [
            self.p_value_check("passes_on_retry", "retry", 0.01, lambda seed: (0.0 if seed == self.seed else 0.5, ""),
                               reruns=2),
            self.error_check("raises", "exception", 1e-6, self._raise),
            self.error_check("accurate", "error", 1e-6, lambda seed: (1e-7, "ok")),
        ]

    @staticmethod
    def _raise(seed):
        raise QuadratureError("unresolved")


class TestCheckResult(unittest.TestCase):

    def test_pass_rules(self):
        self.assertTrue(CheckResult.from_error("a", "x", 1e-7, 1e-6).passed)
        self.assertFalse(CheckResult.from_error("a", "x", 1e-5, 1e-6).passed)
        self.assertTrue(CheckResult.from_p_value("a", "x", 0.2, 0.01).passed)
        self.assertFalse(CheckResult.from_p_value("a", "x", 0.001, 0.01).passed)
        self.assertFalse(CheckResult("a", "x", math.nan, 1.0, CheckKind.error).passed)

    def test_dictionary(self):
        result = CheckResult.from_error("identities.gaussian_identity", "anchor", 1e-12, 1e-10, "detail")
        self.assertEqual(list(result.to_dict()), ["name", "paper_anchor", "metric", "threshold", "passed", "detail"])


class TestToleranceProfile(unittest.TestCase):

    def test_fast_profile(self):
        self.assertAlmostEqual(ToleranceProfile.fast.error_threshold(1e-6), 1e-5, places=15)
        self.assertAlmostEqual(ToleranceProfile.fast.p_value_threshold(0.01), 0.001, places=15)
        self.assertEqual(ToleranceProfile.fast.sample_count(100_000), 10_000)
        self.assertEqual(ToleranceProfile.strict.error_threshold(1e-6), 1e-6)


class TestVerificationSuite(unittest.TestCase):

    def setUp(self):
        self.report = _FlakySuite(11, record_timing=False).run()

    def test_results_sorted_and_exceptions_captured(self):
        names = [result.name for result in self.report.results]
        self.assertEqual(names, sorted(names))
        by_name = {result.name: result for result in self.report.results}
        self.assertTrue(by_name["statistics.passes_on_retry"].passed)
        self.assertIn("attempts=2", by_name["statistics.passes_on_retry"].detail)
        self.assertFalse(by_name["statistics.raises"].passed)
        self.assertIn("QuadratureError", by_name["statistics.raises"].detail)
        self.assertFalse(self.report.passed)
        self.assertEqual(len(self.report.failures()), 1)

    def test_json(self):
        document = json.loads(self.report.to_json())
        self.assertEqual(list(document), ["suite", "seed", "results", "wall_time_s"])
        self.assertEqual(document["suite"], "statistics")
        self.assertEqual(document["wall_time_s"], 0.0)
        self.assertTrue(math.isnan(document["results"][2]["metric"]))

    def test_parallel_run_is_deterministic(self):
        parallel = _FlakySuite(11, worker_count=3, record_timing=False).run()
        self.assertEqual(parallel.to_json(), self.report.to_json())

    def test_combine(self):
        combined = VerificationReport.combine([self.report], 11, 0.0)
        self.assertEqual(combined.suite, SuiteType.all)
        with self.assertRaises(ValueError):
            VerificationReport(SuiteType.all, 11, [], 0.0)

    def test_check_direct(self):
        check = Check("x", "anchor", 1.0, CheckKind.error, lambda seed: (0.5, ""))
        self.assertTrue(check.run(1).passed)


if __name__ == '__main__':
    unittest.main()
