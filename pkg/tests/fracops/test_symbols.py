import cmath
import math
import unittest

from src.exceptions import DomainError
from src.fracops.symbols import dir_symbol, homogeneous_plus, laplace_transform, laplacian_symbol
from src.laws.densities import density_l
from src.laws.direction import Direction
from src.special_functions.function_specs import MLSpec
from src.special_functions.mittag_leffler import mittag_leffler


class TestSymbols(unittest.TestCase):

    def setUp(self):
        self.axis = Direction([1.0])

    def test_directional_symbol(self):
        self.assertAlmostEqual(abs(dir_symbol(0.5, self.axis, [1.0]) - cmath.exp(-0.25j * math.pi)), 0.0, places=14)
        self.assertAlmostEqual(abs(dir_symbol(0.5, self.axis, [-4.0]) - 2.0 * cmath.exp(0.25j * math.pi)), 0.0,
                               places=14)
        self.assertEqual(dir_symbol(0.5, self.axis, [0.0]), 0j)
        self.assertAlmostEqual(abs(dir_symbol(1.0, self.axis, [2.0]) + 2.0j), 0.0, places=14)

    def test_laplacian_symbol(self):
        self.assertAlmostEqual(laplacian_symbol(0.5, [3.0, 4.0]), 5.0, places=14)
        self.assertEqual(laplacian_symbol(0.7, [0.0, 0.0]), 0.0)
        with self.assertRaises(DomainError):
            laplacian_symbol(1.5, [1.0])

    def test_homogeneous_distribution(self):
        self.assertAlmostEqual(homogeneous_plus(0.5, 4.0), 2.0 / math.gamma(1.5), places=14)
        self.assertEqual(homogeneous_plus(0.5, -1.0), 0.0)
        with self.assertRaises(DomainError):
            homogeneous_plus(-1.0, 1.0)

    def test_laplace_transform(self):
        self.assertAlmostEqual(laplace_transform(lambda t: t, 2.0), 0.25, places=10)
        self.assertAlmostEqual(laplace_transform(lambda z: homogeneous_plus(0.5, z), 2.0), 2.0 ** -1.5, places=8)
        self.assertAlmostEqual(laplace_transform(lambda x: density_l(0.5, x, 1.0), 1.0),
                               mittag_leffler(MLSpec(0.5), -1.0), places=8)
        with self.assertRaises(DomainError):
            laplace_transform(lambda t: t, 0.0)


if __name__ == '__main__':
    unittest.main()
