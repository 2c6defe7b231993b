import cmath
import math
import unittest

from src.exceptions import AccuracyError
from src.laws.characteristic_functions import (advdiff_exponent, charfn_advdiff, charfn_frac_poisson_transport,
                                               poisson_transport_exponent)
from src.laws.direction import Direction
from src.laws.frac_params import FracParams


class TestCharacteristicFunctions(unittest.TestCase):

    def setUp(self):
        self.axis = Direction([1.0])

    def test_zero_frequency(self):
        params = FracParams(0.5, 0.5, 0.5)
        self.assertEqual(charfn_advdiff(params, self.axis, [0.0], 1.0), 1.0)

    def test_classical_drift_diffusion(self):
        params = FracParams(1.0, 1.0, 1.0)
        expected = cmath.exp(-0.25 + 0.5j)
        self.assertAlmostEqual(abs(charfn_advdiff(params, self.axis, [0.5], 1.0) - expected), 0.0, places=12)
        self.assertAlmostEqual(abs(advdiff_exponent(params, self.axis, [0.5]) - (0.25 - 0.5j)), 0.0, places=14)

    def test_hermitian_symmetry(self):
        params = FracParams(0.5, 0.8, 0.7)
        plane = Direction([0.6, 0.8])
        value = charfn_advdiff(params, plane, [0.3, 0.4], 1.0)
        mirrored = charfn_advdiff(params, plane, [-0.3, -0.4], 1.0)
        self.assertAlmostEqual(abs(value - mirrored.conjugate()), 0.0, places=10)

    def test_outside_validated_disc(self):
        with self.assertRaises(AccuracyError):
            charfn_advdiff(FracParams(0.5, 0.5, 1.0), self.axis, [4.0], 1.0)

    def test_poisson_transport_without_drift(self):
        params = FracParams(beta=1.0, rate=1.0, tau=1.0)
        exponent = poisson_transport_exponent(params, None, [0.5])
        self.assertAlmostEqual(abs(exponent - (1.0 - cmath.exp(0.5j))), 0.0, places=14)
        # beta = 1 is the compound Poisson characteristic function
        value = charfn_frac_poisson_transport(params, None, [0.5], 2.0)
        self.assertAlmostEqual(abs(value - cmath.exp(-2.0 * (1.0 - cmath.exp(0.5j)))), 0.0, places=12)

    def test_poisson_transport_with_drift(self):
        params = FracParams(alpha=0.5, beta=0.5, rate=1.0)
        value = charfn_frac_poisson_transport(params, self.axis, [0.0], 1.0)
        self.assertAlmostEqual(abs(value - 1.0), 0.0, places=14)
        self.assertLess(abs(charfn_frac_poisson_transport(params, self.axis, [0.5], 1.0)), 1.0)


if __name__ == '__main__':
    unittest.main()
