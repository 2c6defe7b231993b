import math
import unittest

from src.exceptions import DomainError
from src.fracops.operator_specs import CaputoSpec
from src.fracops.time_derivatives import caputo_derivative, central_difference, rl_derivative
from src.special_functions.function_specs import MLSpec
from src.special_functions.mittag_leffler import mittag_leffler


class TestCaputoDerivative(unittest.TestCase):

    def test_linear_function(self):
        # D^beta t = t^(1-beta) / Gamma(2-beta)
        for beta in (0.3, 0.5, 0.9):
            expected = 2.0 ** (1.0 - beta) / math.gamma(2.0 - beta)
            self.assertAlmostEqual(caputo_derivative(CaputoSpec(beta), lambda s: s, 2.0, lambda s: 1.0), expected,
                                   delta=1e-6)
            self.assertAlmostEqual(caputo_derivative(CaputoSpec(beta), lambda s: s, 2.0), expected, delta=1e-6)

    def test_mittag_leffler_eigenfunction(self):
        beta = 0.6
        value = caputo_derivative(CaputoSpec(beta), lambda s: mittag_leffler(MLSpec(beta), -s ** beta), 1.0)
        self.assertAlmostEqual(value, -mittag_leffler(MLSpec(beta), -1.0), places=5)

    def test_analytic_derivative(self):
        beta = 0.5

        def derivative(s: float) -> float:
            return -s ** (beta - 1.0) * mittag_leffler(MLSpec(beta, beta), -s ** beta)

        value = caputo_derivative(CaputoSpec(beta), None, 0.7, derivative)
        self.assertAlmostEqual(value, -mittag_leffler(MLSpec(beta), -0.7 ** beta), places=6)

    def test_riemann_liouville_of_constant(self):
        value = rl_derivative(0.4, lambda s: 1.0, 2.0, lambda s: 0.0)
        self.assertAlmostEqual(value, 2.0 ** -0.4 / math.gamma(0.6), places=12)
        with self.assertRaises(DomainError):
            rl_derivative(0.4, lambda s: 1.0 / s, 1.0)

    def test_riemann_liouville_caputo_relation(self):
        # (1+t)^2: the Riemann-Liouville derivative exceeds the Caputo one by t^(-beta) / Gamma(1-beta)
        beta, t = 0.4, 1.5
        spec = CaputoSpec(beta)
        riemann_liouville = rl_derivative(spec, lambda s: (1.0 + s) ** 2, t, lambda s: 2.0 * (1.0 + s))
        caputo = caputo_derivative(spec, lambda s: (1.0 + s) ** 2, t, lambda s: 2.0 * (1.0 + s))
        initial_term = t ** -beta / math.gamma(1.0 - beta)
        self.assertAlmostEqual(riemann_liouville - caputo, initial_term, places=12)
        power_rule = (initial_term + 2.0 * t ** (1.0 - beta) / math.gamma(2.0 - beta)
                      + 2.0 * t ** (2.0 - beta) / math.gamma(3.0 - beta))
        self.assertAlmostEqual(riemann_liouville, power_rule, delta=1e-6)

    def test_central_difference(self):
        self.assertAlmostEqual(central_difference(math.sin, 1.0), math.cos(1.0), places=9)
        self.assertAlmostEqual(central_difference(math.sqrt, 1e-6), 0.5 / math.sqrt(1e-6), delta=1e-3)

    def test_domain(self):
        with self.assertRaises(DomainError):
            CaputoSpec(1.0)
        with self.assertRaises(DomainError):
            CaputoSpec(0.5, node_count=16)
        with self.assertRaises(DomainError):
            caputo_derivative(CaputoSpec(0.5), lambda s: s, 1e-10)


if __name__ == '__main__':
    unittest.main()
