import unittest

from src.verify import identity_suite, residual_suite
from src.verify.residual_suite import ResidualSuite, relaxation_residual
from src.verify.statistical_suite import StatisticalSuite
from src.verify.verify_constants import VerifyConstants
from src.verify.verify_enums.suite_type import SuiteType
from src.verify.verify_enums.tolerance_profile import ToleranceProfile


class TestIdentityChecks(unittest.TestCase):

    def test_special_function_goldens(self):
        metric, _ = identity_suite.check_special_function_goldens(0)
        self.assertLessEqual(metric, VerifyConstants.GOLDEN_TOLERANCE)

    def test_gaussian_identity(self):
        metric, _ = identity_suite.check_gaussian_identity(0)
        self.assertLessEqual(metric, VerifyConstants.GAUSSIAN_TOLERANCE)

    def test_closed_form_reductions(self):
        metric, _ = identity_suite.check_closed_form_reductions(0)
        self.assertLessEqual(metric, VerifyConstants.REDUCTION_TOLERANCE)

    def test_laplace_transforms(self):
        metric, _ = identity_suite.check_laplace_transforms(0)
        self.assertLessEqual(metric, VerifyConstants.LAPLACE_TOLERANCE)

    def test_subordinated_gaussian(self):
        metric, _ = identity_suite.check_subordinated_gaussian(0)
        self.assertLessEqual(metric, VerifyConstants.SUBORDINATED_GAUSSIAN_TOLERANCE)

    def test_self_similarity(self):
        metric, _ = identity_suite.check_self_similarity(0)
        self.assertLessEqual(metric, VerifyConstants.SELF_SIMILARITY_TOLERANCE)

    def test_lamperti_time_scaling(self):
        metric, _ = identity_suite.check_lamperti_time_scaling(0)
        self.assertLessEqual(metric, VerifyConstants.LAMPERTI_SCALING_TOLERANCE)

    def test_rl_caputo_relation(self):
        metric, _ = identity_suite.check_rl_caputo_relation(0)
        self.assertLessEqual(metric, VerifyConstants.RL_CAPUTO_TOLERANCE)

    def test_wright_positivity(self):
        metric, detail = identity_suite.check_wright_positivity(0)
        self.assertLessEqual(metric, VerifyConstants.POSITIVITY_TOLERANCE, detail)

    def test_check_names_are_unique(self):
        checks = identity_suite.IdentitySuite(1).checks()
        names = [check.name for check in checks]
        self.assertEqual(len(names), len(set(names)))
        self.assertTrue(all(name.startswith("identities.") for name in names))


class TestResidualSuite(unittest.TestCase):

    def test_relaxation_residual(self):
        self.assertLessEqual(relaxation_residual(0.6, complex(1.0), 1.0), VerifyConstants.RESIDUAL_TOLERANCE)
        self.assertLessEqual(relaxation_residual(1.0, complex(0.25, -0.5), 1.0),
                             VerifyConstants.CLASSICAL_RESIDUAL_TOLERANCE)

    def test_directional_transport(self):
        metric, _ = residual_suite.check_directional_transport(0)
        self.assertLessEqual(metric, VerifyConstants.RESIDUAL_TOLERANCE)

    def test_suite_passes(self):
        report = ResidualSuite(5, ToleranceProfile.fast, record_timing=False).run()
        self.assertEqual(report.suite, SuiteType.residuals)
        self.assertTrue(report.passed, [str(result) for result in report.failures()])


class TestStatisticalSuite(unittest.TestCase):

    def setUp(self):
        self.suite = StatisticalSuite(42, ToleranceProfile.fast, worker_count=2, record_timing=False,
                                      n_samples=20_000)

    def test_default_sample_count(self):
        self.assertEqual(StatisticalSuite(1).n_samples, 100_000)
        self.assertEqual(StatisticalSuite(1, ToleranceProfile.fast).n_samples, 10_000)

    def test_inverse_subordinator_ks(self):
        p_value, _ = self.suite.inverse_ks(0.5, 42)
        self.assertGreater(p_value, 1e-4)

    def test_frac_poisson_chisquare(self):
        p_value, _ = self.suite.frac_poisson_chisquare(42)
        self.assertGreater(p_value, 1e-4)

    def test_advdiff_charfn(self):
        z_score, _ = self.suite.advdiff_charfn(42)
        self.assertLess(z_score, 5.0)

    def test_deterministic_for_fixed_seed(self):
        first = self.suite.checks()[0].run(42)
        second = self.suite.checks()[0].run(42)
        self.assertEqual(first.to_dict(), second.to_dict())


if __name__ == '__main__':
    unittest.main()
