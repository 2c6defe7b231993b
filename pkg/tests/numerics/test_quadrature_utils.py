import math
import unittest

from src.exceptions import QuadratureError
from src.numerics.precision_utils import KahanAccumulator, mp_context
from src.numerics.quadrature_utils import integrate_half_line, integrate_interval, require_accuracy


class TestQuadratureUtils(unittest.TestCase):

    def test_integrate_interval(self):
        value, error = integrate_interval(math.sin, 0.0, math.pi)
        self.assertAlmostEqual(value, 2.0, places=12)
        self.assertLess(error, 1e-10)
        self.assertEqual(integrate_interval(math.sin, 1.0, 1.0), (0.0, 0.0))

    def test_algebraic_weight(self):
        value, _ = integrate_interval(lambda s: 1.0, 0.0, 1.0, weight="alg", wvar=(-0.5, 0.0))
        self.assertAlmostEqual(value, 2.0, places=12)

    def test_integrate_half_line(self):
        value, _ = integrate_half_line(lambda s: math.exp(-s), 1.0)
        self.assertAlmostEqual(value, 1.0, places=10)
        value, _ = integrate_half_line(lambda s: 1.0 / (1.0 + s) ** 2, 1.0, upper=1.0)
        self.assertAlmostEqual(value, 0.5, places=10)

    def test_require_accuracy(self):
        self.assertEqual(require_accuracy(1.5, 1e-9, 1e-6, "value"), 1.5)
        with self.assertRaises(QuadratureError):
            require_accuracy(1.5, 1e-3, 1e-6, "value")
        with self.assertRaises(QuadratureError):
            require_accuracy(math.nan, 0.0, 1e-6, "value")

    def test_integrate_half_line_reaches_infinity(self):
        value, error = integrate_half_line(lambda s: 1.0 / (1.0 + s) ** 2, 1.0)
        self.assertAlmostEqual(value, 1.0, places=9)
        self.assertLess(error, 1e-8)
        value, _ = integrate_half_line(lambda s: 0.5 * math.exp(-0.5 * s), 2.0)
        self.assertAlmostEqual(value, 1.0, places=10)


class TestPrecisionUtils(unittest.TestCase):

    def test_kahan_accumulator(self):
        accumulator = KahanAccumulator(0.0)
        accumulator.add(1.0)
        for _ in range(10):
            accumulator.add(1e-16)
        self.assertAlmostEqual(accumulator.value - 1.0, 1e-15, places=15)

    def test_mp_context(self):
        context = mp_context(50)
        self.assertEqual(context.dps, 50)
        self.assertIs(mp_context(50), context)


if __name__ == '__main__':
    unittest.main()
