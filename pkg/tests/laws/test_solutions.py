import math
import unittest

from scipy import special

from src.exceptions import DomainError
from src.laws.densities import density_l
from src.laws.direction import Direction
from src.laws.laws_utils import convolve_in_time, wright_argument_cutoff
from src.laws.solutions import (density_p_multivariate, marginal_p_multivariate, solution_g,
                                solution_g_subordinated, solution_Un, solution_v)
from src.numerics.quadrature_utils import integrate_interval


class TestSolutions(unittest.TestCase):

    def setUp(self):
        self.axis = Direction([1.0])
        self.diagonal = Direction([math.sqrt(0.5), math.sqrt(0.5)])

    def test_v_reduces_to_inverse_subordinator_density(self):
        for beta in (0.3, 0.6):
            for x in (0.0, 0.7, 2.0):
                self.assertAlmostEqual(solution_v(beta, -beta, self.axis, [x], 1.5), density_l(beta, x, 1.5),
                                       places=12)

    def test_v_boundary_datum(self):
        # at x = 0 the solution is t^nu / Gamma(nu + 1)
        self.assertAlmostEqual(solution_v(0.5, 2.0, self.axis, [0.0], 3.0), 9.0 / 2.0, places=12)

    def test_v_rejects_inadmissible_nu(self):
        with self.assertRaises(DomainError):
            solution_v(0.5, -1.3, self.axis, [1.0], 1.0)
        solution_v(0.5, -1.0, self.axis, [1.0], 1.0)

    def test_p_one_dimension(self):
        self.assertEqual(density_p_multivariate(0.4, self.axis, [1.1], 2.0), density_l(0.4, 1.1, 2.0))

    def test_p_needs_positive_components(self):
        with self.assertRaises(DomainError):
            density_p_multivariate(0.5, Direction([1.0, 0.0]), [1.0, 1.0], 1.0)
        with self.assertRaises(DomainError):
            density_p_multivariate(0.5, self.diagonal, [-1.0, 1.0], 1.0)

    def test_p_marginal(self):
        edge = wright_argument_cutoff(0.5) / self.diagonal.a[1]
        integrated, _ = integrate_interval(lambda x2: density_p_multivariate(0.5, self.diagonal, [0.5, x2], 1.0),
                                           0.0, edge, abs_tol=1e-12, rel_tol=1e-11)
        self.assertAlmostEqual(integrated, marginal_p_multivariate(0.5, self.diagonal, [0.5], 1.0, 1), places=5)
        with self.assertRaises(DomainError):
            marginal_p_multivariate(0.5, self.diagonal, [0.5], 1.0, 2)

    def test_Un_convolution(self):
        a1, a2 = self.diagonal.a
        convolution = convolve_in_time(lambda s: density_l(0.5, a1, s), lambda s: density_l(0.5, a2, s), 2.0)
        self.assertAlmostEqual(convolution, solution_Un(0.5, 2, self.diagonal, [1.0, 1.0], 2.0), places=4)

    def test_far_orthant_points(self):
        x = [35.5, 35.5]
        z = self.diagonal.project(x)
        self.assertGreater(z, 50.0)
        self.assertAlmostEqual(solution_v(0.5, 0.0, self.axis, [z], 1.0) / special.erfc(0.5 * z), 1.0, places=6)
        self.assertAlmostEqual(solution_Un(0.5, 2, self.diagonal, x, 1.0) / special.erfc(0.5 * z), 1.0, places=6)
        # W_{-1/2,0}(-z) = z exp(-z^2/4) / (2 sqrt(pi))
        expected = 0.5 * z * math.exp(-z * z / 4.0) / (2.0 * math.sqrt(math.pi))
        self.assertAlmostEqual(density_p_multivariate(0.5, self.diagonal, x, 1.0) / expected, 1.0, places=6)

    def test_Un_dimension(self):
        self.assertAlmostEqual(solution_Un(0.5, 1, self.axis, [1.0], 1.0), density_l(0.5, 1.0, 1.0), places=12)
        with self.assertRaises(DomainError):
            solution_Un(0.5, 2, self.axis, [1.0], 1.0)

    def test_g_value_at_origin(self):
        self.assertAlmostEqual(solution_g(0.5, self.axis, [0.0], 1.0), 0.5 / math.gamma(0.75), places=12)

    def test_g_symmetry(self):
        self.assertEqual(solution_g(0.6, Direction([1.0], require_non_negative=False), [-1.3], 0.7),
                         solution_g(0.6, self.axis, [1.3], 0.7))

    def test_g_subordination_form(self):
        self.assertAlmostEqual(solution_g(0.6, self.axis, [1.3], 0.7),
                               solution_g_subordinated(0.6, self.axis, [1.3], 0.7), places=6)


if __name__ == '__main__':
    unittest.main()
