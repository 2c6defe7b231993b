import cmath
import math
import unittest

from scipy import integrate, special

from src.exceptions import AccuracyError, DomainError
from src.special_functions.function_specs import MLSpec
from src.special_functions.mittag_leffler import (mittag_leffler, mittag_leffler_complex, mittag_leffler_series,
                                                  mittag_leffler_spectral)


class TestMittagLeffler(unittest.TestCase):

    def test_exponential(self):
        self.assertEqual(mittag_leffler(MLSpec(1.0), -1.0), math.exp(-1.0))

    def test_half_order(self):
        # E_1/2(-x) = exp(x^2) erfc(x)
        self.assertAlmostEqual(mittag_leffler(MLSpec(0.5), -1.0), 0.42758357615580705, places=10)
        for x in (2.0, 10.0, 40.0):
            self.assertAlmostEqual(mittag_leffler(MLSpec(0.5), -x) / special.erfcx(x), 1.0, places=8)

    def test_series_and_spectral_paths_agree(self):
        for beta in (0.3, 0.5, 0.8):
            for x in (0.5, 3.0, 6.0):
                self.assertAlmostEqual(mittag_leffler_series(MLSpec(beta), -x), mittag_leffler_spectral(beta, x),
                                       places=7)

    def test_small_orders_at_large_negative_arguments(self):
        # E_beta(-x) ~ sum_k (-1)^(k+1) x^(-k) / Gamma(1 - beta k) for large x
        for beta in (0.1, 0.2, 0.3):
            for x in (5.5, 20.0, 50.0):
                expected = sum((-1.0) ** (k + 1) * x ** -k * special.rgamma(1.0 - beta * k) for k in range(1, 41))
                self.assertAlmostEqual(mittag_leffler(MLSpec(beta), -x) / expected, 1.0, places=8)
                self.assertAlmostEqual(mittag_leffler_spectral(beta, x) / expected, 1.0, places=8)

    def test_escalated_series_under_heavy_cancellation(self):
        # largest term near e^900: the result comes from extended precision
        self.assertAlmostEqual(mittag_leffler_series(MLSpec(0.5), -30.0) / special.erfcx(30.0), 1.0, places=8)
        # E_{1/2,2}(-x) = int_0^1 E_{1/2}(-x s^(1/2)) ds = 2 int_0^1 u erfcx(x u) du
        expected, _ = integrate.quad(lambda u: 2.0 * u * special.erfcx(30.0 * u), 0.0, 1.0, epsabs=0.0, epsrel=1e-12)
        self.assertAlmostEqual(mittag_leffler(MLSpec(0.5, 2.0), -30.0) / expected, 1.0, places=8)
        with self.assertRaises(AccuracyError):
            mittag_leffler(MLSpec(0.1, 2.0), -50.0)

    def test_two_parameter(self):
        self.assertAlmostEqual(mittag_leffler(MLSpec(2.0), -1.0), math.cos(1.0), places=10)
        self.assertAlmostEqual(mittag_leffler(MLSpec(1.0, 2.0), 0.5), (math.exp(0.5) - 1.0) / 0.5, places=10)

    def test_complex(self):
        value = mittag_leffler_complex(MLSpec(1.0), 1j)
        self.assertAlmostEqual(abs(value - cmath.exp(1j)), 0.0, places=12)
        value = mittag_leffler_complex(MLSpec(0.5), complex(-1.0, 0.0))
        self.assertAlmostEqual(value.real, 0.42758357615580705, places=9)
        self.assertAlmostEqual(value.imag, 0.0, places=12)
        with self.assertRaises(AccuracyError):
            mittag_leffler_complex(MLSpec(0.5), complex(6.0, 0.0))

    def test_domain(self):
        with self.assertRaises(DomainError):
            MLSpec(0.0)
        with self.assertRaises(DomainError):
            mittag_leffler(MLSpec(0.5), math.inf)
        with self.assertRaises(DomainError):
            mittag_leffler_spectral(1.0, 1.0)


if __name__ == '__main__':
    unittest.main()
