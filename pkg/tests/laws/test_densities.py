import math
import unittest

import numpy as np

from src.exceptions import DomainError
from src.laws.densities import (cdf_h, cdf_l, cdf_lamperti, density_h, density_l, density_lamperti, density_U,
                                moment_l)
from src.numerics.quadrature_utils import integrate_half_line


class TestInverseSubordinatorDensity(unittest.TestCase):

    def test_gaussian_identity(self):
        # e^(-1/4) / sqrt(pi) = 0.43939128946772...
        self.assertAlmostEqual(density_l(0.5, 1.0, 1.0), math.exp(-0.25) / math.sqrt(math.pi), places=10)
        for t in (0.5, 2.0):
            for x in (0.0, 1.5, 4.0):
                expected = 2.0 * math.exp(-x * x / (4.0 * t)) / math.sqrt(4.0 * math.pi * t)
                self.assertAlmostEqual(density_l(0.5, x, t), expected, places=10)

    def test_self_similarity(self):
        for beta in (0.3, 0.7):
            self.assertAlmostEqual(density_l(beta, 1.2, 2.0), 2.0 ** -beta * density_l(beta, 1.2 / 2.0 ** beta, 1.0),
                                   places=12)

    def test_tail(self):
        value = density_l(0.99, 100.0, 1.0)
        self.assertGreaterEqual(value, 0.0)
        self.assertLessEqual(value, 1e-8)

    def test_normalization(self):
        mass, _ = integrate_half_line(lambda x: density_l(0.3, x, 1.0), 1.0)
        self.assertAlmostEqual(mass, 1.0, places=6)

    def test_domain(self):
        with self.assertRaises(DomainError):
            density_l(1.0, 1.0, 1.0)
        with self.assertRaises(DomainError):
            density_l(0.5, -1.0, 1.0)
        with self.assertRaises(DomainError):
            density_l(0.5, 1.0, 0.0)

    def test_distribution_function(self):
        self.assertAlmostEqual(cdf_l(0.5, 1.0, 1.0), math.erf(0.5), places=10)
        np.testing.assert_allclose(cdf_l(0.5, np.array([0.0, 1.0, 3.0]), 1.0),
                                   [0.0, math.erf(0.5), math.erf(1.5)], atol=1e-7)

    def test_moments(self):
        self.assertAlmostEqual(moment_l(0.5, 1, 1.0), 2.0 / math.sqrt(math.pi), places=12)
        self.assertEqual(moment_l(0.4, 0, 3.0), 1.0)
        self.assertAlmostEqual(moment_l(1.0, 2, 2.0), 4.0, places=12)


class TestStableSubordinatorDensity(unittest.TestCase):

    def test_levy_density(self):
        # h_1/2(x, t) = t / (2 sqrt(pi)) x^(-3/2) exp(-t^2 / 4x)
        for x, t in ((1.0, 1.0), (0.3, 2.0), (5.0, 0.5)):
            expected = t / (2.0 * math.sqrt(math.pi)) * x ** -1.5 * math.exp(-t * t / (4.0 * x))
            self.assertAlmostEqual(density_h(0.5, x, t), expected, places=10)

    def test_self_similarity(self):
        # h(x, t) = t^(-1/alpha) h(x t^(-1/alpha), 1)
        for alpha in (0.3, 0.6):
            scale = 2.0 ** (1.0 / alpha)
            for x in (0.7, 3.0):
                self.assertAlmostEqual(density_h(alpha, x, 2.0) / (density_h(alpha, x / scale, 1.0) / scale), 1.0,
                                       places=10)

    def test_normalization(self):
        mass, _ = integrate_half_line(lambda x: density_h(0.7, x, 1.0), 1.0)
        self.assertAlmostEqual(mass, 1.0, places=6)

    def test_distribution_function(self):
        self.assertAlmostEqual(cdf_h(0.5, 1.0, 1.0), math.erfc(0.5), places=10)
        with self.assertRaises(DomainError):
            density_h(0.5, 0.0, 1.0)


class TestSubordinatedLaws(unittest.TestCase):

    def test_lamperti_reference_value(self):
        self.assertAlmostEqual(density_lamperti(0.5, 1.0, 1.0), 1.0 / (2.0 * math.pi), places=14)
        self.assertAlmostEqual(density_U(0.5, 0.5, 1.0, 1.0), 1.0 / (2.0 * math.pi), places=6)

    def test_lamperti_normalization(self):
        mass, _ = integrate_half_line(lambda x: density_lamperti(0.3, x, 1.0), 1.0)
        self.assertAlmostEqual(mass, 1.0, places=6)

    def test_lamperti_median_is_t(self):
        for beta in (0.2, 0.5, 0.9):
            self.assertAlmostEqual(cdf_lamperti(beta, 2.5, 2.5), 0.5, places=12)

    def test_lamperti_domain(self):
        with self.assertRaises(DomainError):
            density_lamperti(1.0, 1.0, 1.0)
        with self.assertRaises(DomainError):
            density_lamperti(0.5, 0.0, 1.0)

    def test_lamperti_time_scaling(self):
        for beta in (0.3, 0.8):
            for x in (0.05, 1.0, 7.0):
                self.assertAlmostEqual(density_lamperti(beta, x, 4.0) / (density_lamperti(beta, x / 4.0, 1.0) / 4.0),
                                       1.0, places=12)

    def test_subordination_matches_lamperti(self):
        for x in (0.2, 3.0):
            self.assertAlmostEqual(density_U(0.4, 0.4, x, 1.0), density_lamperti(0.4, x, 1.0), places=6)

    def test_subordination_near_origin(self):
        # U ~ x^(alpha-1) / (Gamma(alpha) Gamma(1-beta) t^beta) as x -> 0
        self.assertEqual(density_U(0.6, 0.4, 0.0, 1.0), math.inf)
        x = 1e-4
        expected = x ** -0.4 / (math.gamma(0.6) * math.gamma(0.6))
        self.assertAlmostEqual(density_U(0.6, 0.4, x, 1.0) / expected, 1.0, places=2)
        with self.assertRaises(DomainError):
            density_U(0.6, 0.4, -1.0, 1.0)


if __name__ == '__main__':
    unittest.main()
