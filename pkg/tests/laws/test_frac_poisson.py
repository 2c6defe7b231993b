import math
import unittest

from src.exceptions import DomainError
from src.laws.frac_poisson import pgf_frac_poisson, pmf_frac_poisson


class TestFracPoisson(unittest.TestCase):

    def test_classical_case(self):
        self.assertAlmostEqual(pmf_frac_poisson(1.0, 2.0, 3, 1.0), math.exp(-2.0) * 8.0 / 6.0, places=14)

    def test_zero_count_is_mittag_leffler(self):
        self.assertAlmostEqual(pmf_frac_poisson(0.5, 1.0, 0, 1.0), 0.42758357615580705, places=7)

    def test_normalization(self):
        total = sum(pmf_frac_poisson(0.7, 2.0, k, 1.0) for k in range(61))
        self.assertAlmostEqual(total, 1.0, places=6)

    def test_generating_function(self):
        self.assertEqual(pgf_frac_poisson(0.6, 1.5, 1.0, 2.0), 1.0)
        series = sum(0.5 ** k * pmf_frac_poisson(0.7, 2.0, k, 1.0) for k in range(61))
        self.assertAlmostEqual(series, pgf_frac_poisson(0.7, 2.0, 0.5, 1.0), places=6)

    def test_domain(self):
        with self.assertRaises(DomainError):
            pmf_frac_poisson(0.5, 1.0, -1, 1.0)
        with self.assertRaises(DomainError):
            pmf_frac_poisson(0.5, 0.0, 1, 1.0)
        with self.assertRaises(DomainError):
            pgf_frac_poisson(0.5, 1.0, 1.5, 1.0)


if __name__ == '__main__':
    unittest.main()
