import math
import unittest

import numpy as np
from scipy import special

from src.exceptions import DomainError
from src.special_functions.function_specs import WrightSpec
from src.special_functions.special_functions_constants import SpecialFunctionsConstants
from src.special_functions.wright import (m_wright, m_wright_complement, m_wright_complement_array, rgamma, wright,
                                         wright_negative_axis)


class TestWright(unittest.TestCase):

    def test_exponential_case(self):
        self.assertAlmostEqual(wright(WrightSpec(0.0, 1.0), 1.0), math.e, places=12)
        for z in (-10.0, -3.5, 0.0, 2.0, 10.0):
            self.assertAlmostEqual(wright(WrightSpec(0.0, 1.0), z) / math.exp(z), 1.0, places=10)

    def test_gaussian_case(self):
        expected = math.exp(-0.25) / math.sqrt(math.pi)
        self.assertAlmostEqual(wright(WrightSpec(-0.5, 0.5), -1.0), expected, places=12)

    def test_cancelling_series_is_escalated(self):
        # W_{-1/2,1/2}(-z) = exp(-z^2/4) / sqrt(pi) is far below the size of its terms at z = 9
        value = wright(WrightSpec(-0.5, 0.5), -9.0)
        expected = math.exp(-81.0 / 4.0) / math.sqrt(math.pi)
        self.assertAlmostEqual(value / expected, 1.0, places=8)

    def test_domain(self):
        with self.assertRaises(DomainError):
            WrightSpec(-1.0, 1.0)
        with self.assertRaises(DomainError):
            WrightSpec(0.5, 1.0, precision_target=1e-20)
        with self.assertRaises(DomainError):
            wright(WrightSpec(0.0, 1.0), 31.0)
        with self.assertRaises(DomainError):
            wright(WrightSpec(0.0, 1.0), math.nan)

    def test_rgamma_poles(self):
        self.assertEqual(rgamma(-1.0), 0.0)
        self.assertEqual(rgamma(0.0), 0.0)
        self.assertAlmostEqual(rgamma(0.5), 1.0 / math.sqrt(math.pi), places=14)


class TestWrightNegativeAxis(unittest.TestCase):

    def test_complement_beyond_series_domain(self):
        # W_{-1/2,1}(-z) = erfc(z/2)
        for z in (5.0, 40.0, 50.0):
            self.assertAlmostEqual(wright_negative_axis(0.5, 1.0, z) / special.erfc(0.5 * z), 1.0, places=7)

    def test_negative_order_recurrence(self):
        # W_{-1/2,0}(-z) = -d/dz M_{1/2}(z) = z exp(-z^2/4) / (2 sqrt(pi))
        for z in (3.0, 40.0):
            expected = z * math.exp(-z * z / 4.0) / (2.0 * math.sqrt(math.pi))
            self.assertAlmostEqual(wright_negative_axis(0.5, 0.0, z) / expected, 1.0, places=7)

    def test_agrees_with_complement_integral(self):
        self.assertAlmostEqual(wright_negative_axis(0.7, 1.0, 4.0) / m_wright_complement(0.7, 4.0), 1.0, places=6)
        self.assertAlmostEqual(wright_negative_axis(0.3, 0.7, 35.0) / m_wright(0.3, 35.0), 1.0, places=8)

    def test_density_kernels_are_non_negative(self):
        for beta in (0.25, 0.75):
            for rho in (1.0 - beta, 1.0, 2.0 * (1.0 - beta)):
                values = [wright_negative_axis(beta, rho, z) for z in np.linspace(0.0, 40.0, 17)]
                self.assertGreaterEqual(min(values), -SpecialFunctionsConstants.ABSOLUTE_FLOOR, (beta, rho))
                self.assertGreater(values[0], 0.0)

    def test_domain(self):
        with self.assertRaises(DomainError):
            wright_negative_axis(1.0, 1.0, 2.0)
        with self.assertRaises(DomainError):
            wright_negative_axis(0.5, 1.0, -2.0)


class TestMWright(unittest.TestCase):

    def test_half_order_is_gaussian(self):
        for z in (0.5, 2.0, 6.0, 10.0, 20.0):
            expected = math.exp(-z * z / 4.0) / math.sqrt(math.pi)
            self.assertAlmostEqual(m_wright(0.5, z) / expected, 1.0, places=8)

    def test_value_at_zero(self):
        self.assertAlmostEqual(m_wright(0.3, 0.0), 1.0 / math.gamma(0.7), places=14)

    def test_far_tail_is_zero(self):
        self.assertEqual(m_wright(0.5, 1e6), 0.0)
        value = m_wright(0.99, 100.0)
        self.assertGreaterEqual(value, 0.0)
        self.assertLess(value, 1e-8)

    def test_domain(self):
        with self.assertRaises(DomainError):
            m_wright(1.0, 1.0)
        with self.assertRaises(DomainError):
            m_wright(0.5, -1.0)

    def test_complement_half_order(self):
        for z in (0.0, 0.3, 1.0, 4.0):
            self.assertAlmostEqual(m_wright_complement(0.5, z), math.erfc(z / 2.0), places=10)

    def test_complement_array(self):
        z = np.array([0.0, 0.5, 1.0, 2.0, 5.0])
        np.testing.assert_allclose(m_wright_complement_array(0.5, z), special.erfc(z / 2.0), atol=1e-7)
        with self.assertRaises(DomainError):
            m_wright_complement_array(0.5, np.array([-1.0]))


if __name__ == '__main__':
    unittest.main()
