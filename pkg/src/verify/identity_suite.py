import logging
import math
from typing import List

import numpy as np

from src.fracops.directional_derivative import frac_dir_derivative
from src.fracops.operator_specs import CaputoSpec, DirDerivSpec
from src.fracops.symbols import dir_symbol, homogeneous_plus, laplace_transform
from src.fracops.time_derivatives import caputo_derivative, rl_derivative
from src.laws.densities import density_h, density_l, density_lamperti, density_U
from src.laws.direction import Direction
from src.laws.frac_poisson import pgf_frac_poisson, pmf_frac_poisson
from src.laws.laws_utils import convolve_in_time, wright_argument_cutoff
from src.laws.solutions import (density_p_multivariate, marginal_p_multivariate, solution_g,
                                solution_g_subordinated, solution_Un, solution_v)
from src.numerics.quadrature_utils import integrate_half_line, integrate_interval
from src.special_functions.function_specs import MLSpec, WrightSpec
from src.special_functions.mittag_leffler import mittag_leffler, mittag_leffler_series, mittag_leffler_spectral
from src.special_functions.wright import m_wright, wright, wright_negative_axis
from src.verify.verification_suite import Check, CheckOutcome, VerificationSuite
from src.verify.verify_constants import VerifyConstants
from src.verify.verify_enums.suite_type import SuiteType

logger = logging.getLogger(__name__)

_DIAGONAL = Direction([math.sqrt(0.5), math.sqrt(0.5)])
_AXIS = Direction([1.0])
_EXPONENTS = (0.3, 0.5, 0.7)
_CONVOLUTION_POINTS = ((0.5, 0.5, 1.0), (1.0, 1.0, 2.0), (0.5, 1.5, 1.0), (1.0, 0.5, 1.5), (2.0, 1.0, 2.0),
                       (0.2, 0.8, 0.5), (1.5, 1.5, 3.0), (0.3, 0.3, 0.4), (1.0, 2.0, 1.0), (2.0, 2.0, 2.5))


def _relative_error(value: float, expected: float) -> float:
    return abs(value - expected) / abs(expected)


def _bump(x: float) -> float:
    if abs(x) >= 1.0:
        return 0.0
    return math.exp(-1.0 / (1.0 - x * x))


def _bump_derivative(x: float) -> float:
    if abs(x) >= 1.0:
        return 0.0
    return -2.0 * x / (1.0 - x * x) ** 2 * _bump(x)


def check_special_function_goldens(seed: int) -> CheckOutcome:
    errors = {
        "W(0,1;1)=e": _relative_error(wright(WrightSpec(0.0, 1.0), 1.0), math.e),
        "W(-1/2,1/2;-1)": _relative_error(wright(WrightSpec(-0.5, 0.5), -1.0), math.exp(-0.25) / math.sqrt(math.pi)),
        "E_1(-1)": _relative_error(mittag_leffler(MLSpec(1.0), -1.0), math.exp(-1.0)),
        "E_1/2(-1)": _relative_error(mittag_leffler(MLSpec(0.5), -1.0), math.e * math.erfc(1.0)),
    }
    exponential = max(_relative_error(wright(WrightSpec(0.0, 1.0), z), math.exp(z)) for z in np.linspace(-10, 10, 41))
    errors["W(0,1;z)=exp(z)"] = exponential
    worst = max(errors, key=errors.get)
    return errors[worst], f"worst={worst}"


def check_gaussian_identity(seed: int) -> CheckOutcome:
    worst = 0.0
    for t in (0.5, 1.0, 2.0):
        for x in np.linspace(-5.0, 5.0, 41):
            gaussian = 2.0 * math.exp(-x * x / (4.0 * t)) / math.sqrt(4.0 * math.pi * t)
            worst = max(worst, abs(density_l(0.5, abs(x), t) - gaussian))
    return worst, "sup |l_1/2(|x|,t) - 2 exp(-x^2/4t)/sqrt(4 pi t)| over 123 points"


def check_lamperti_subordination(beta: float) -> CheckOutcome:
    grid = np.geomspace(0.05, 20.0, 20)
    errors = [abs(density_U(beta, beta, x, 1.0) - density_lamperti(beta, x, 1.0)) for x in grid]
    index = int(np.argmax(errors))
    return errors[index], f"beta={beta}, worst x={grid[index]:.4g}"


def check_lamperti_reference_point(seed: int) -> CheckOutcome:
    value = density_U(0.5, 0.5, 1.0, 1.0)
    return abs(value - 1.0 / (2.0 * math.pi)), f"U(1/2,1/2;1,1)={value!r}"


def check_convolution_semigroup(beta: float) -> CheckOutcome:
    a1, a2 = _DIAGONAL.a
    worst, worst_point = 0.0, None
    for x1, x2, t in _CONVOLUTION_POINTS:
        convolution = convolve_in_time(lambda s: density_l(beta, a1 * x1, s),
                                       lambda s: density_l(beta, a2 * x2, s), t)
        error = abs(convolution - solution_Un(beta, 2, _DIAGONAL, [x1, x2], t))
        if error >= worst:
            worst, worst_point = error, (x1, x2, t)
    return worst, f"beta={beta}, worst (x1,x2,t)={worst_point}"


def check_multivariate_mass(seed: int) -> CheckOutcome:
    beta = 0.5
    # p_beta depends on a.x only and is negligible beyond the M-Wright tail cutoff
    edge = wright_argument_cutoff(beta) / _DIAGONAL.a[0]

    def inner(x1: float) -> float:
        value, _ = integrate_interval(lambda x2: density_p_multivariate(beta, _DIAGONAL, [x1, x2], 1.0),
                                      0.0, edge - x1, abs_tol=1e-9, rel_tol=1e-8)
        return value

    mass, error = integrate_interval(inner, 0.0, edge, abs_tol=1e-8, rel_tol=1e-8)
    return abs(mass - 1.0), f"mass={mass!r}, quadrature error {error:.1e}"


def check_multivariate_marginal(seed: int) -> CheckOutcome:
    beta = 0.5
    edge = wright_argument_cutoff(beta) / _DIAGONAL.a[1]
    worst = 0.0
    for x1 in (0.2, 0.5, 1.0, 2.0):
        integrated, _ = integrate_interval(lambda x2: density_p_multivariate(beta, _DIAGONAL, [x1, x2], 1.0),
                                           0.0, edge, abs_tol=1e-12, rel_tol=1e-11)
        worst = max(worst, abs(integrated - marginal_p_multivariate(beta, _DIAGONAL, [x1], 1.0, 1)))
    return worst, "x2 integrated out at x1 in {0.2, 0.5, 1, 2}"


def check_directional_eigenfunctions(seed: int) -> CheckOutcome:
    worst, worst_case = 0.0, None
    for alpha in (0.25, 0.5, 0.75):
        spec = DirDerivSpec(alpha, _AXIS)
        for mu in (0.5, 1.0, 2.0, 4.0):
            for x in (-1.0, -0.5, 0.0, 0.5, 1.0):
                value = frac_dir_derivative(spec, lambda v: math.exp(mu * v[0]), [x])
                expected = mu ** alpha * math.exp(mu * x)
                error = abs(value - expected) / math.exp(mu * x)
                if error >= worst:
                    worst, worst_case = error, (alpha, mu, x)
    return worst, f"worst (alpha, mu, x)={worst_case}"


def check_directional_alpha_limit(seed: int) -> CheckOutcome:
    spec = DirDerivSpec(0.999, _AXIS, tolerance=1e-6)
    worst = 0.0
    for x in np.linspace(-0.9, 0.9, 7):
        value = frac_dir_derivative(spec, lambda v: _bump(v[0]), [x], points=[x - 1.0, x + 1.0])
        worst = max(worst, abs(value - _bump_derivative(x)))
    return worst, "alpha=0.999 against the classical derivative of a bump"


def _bump_derivative_transform(alpha: float, xi: float) -> complex:
    # int e^{i xi x} D f(x) dx: D f vanishes left of the support, decays like x^(-1-alpha) to the right
    def derivative(x: float) -> float:
        spec = DirDerivSpec(alpha, _AXIS, s_max=max(1e3, 2.0 * x + 2.0), tolerance=1e-8)
        return frac_dir_derivative(spec, lambda v: _bump(v[0]), [x], points=[x - 1.0, x + 1.0])

    real_inside, _ = integrate_interval(lambda x: math.cos(xi * x) * derivative(x), -1.0, 1.0, 1e-10, 1e-9)
    imag_inside, _ = integrate_interval(lambda x: math.sin(xi * x) * derivative(x), -1.0, 1.0, 1e-10, 1e-9)
    real_tail, _ = integrate_interval(derivative, 1.0, math.inf, 1e-9, 1e-8, weight="cos", wvar=xi)
    imag_tail, _ = integrate_interval(derivative, 1.0, math.inf, 1e-9, 1e-8, weight="sin", wvar=xi)
    return complex(real_inside + real_tail, imag_inside + imag_tail)


def check_symbol_consistency(seed: int) -> CheckOutcome:
    alpha = 0.5
    worst, worst_xi = 0.0, None
    for xi in (0.5, 1.0, 2.0):
        real, _ = integrate_interval(lambda x: math.cos(xi * x) * _bump(x), -1.0, 1.0, 1e-12, 1e-11)
        imag, _ = integrate_interval(lambda x: math.sin(xi * x) * _bump(x), -1.0, 1.0, 1e-12, 1e-11)
        expected = dir_symbol(alpha, _AXIS, [xi]) * complex(real, imag)
        error = abs(_bump_derivative_transform(alpha, xi) - expected)
        if error >= worst:
            worst, worst_xi = error, xi
    # f real: the transform at -xi is the conjugate, as is the symbol
    return worst, f"worst xi=+-{worst_xi}"


def _mass(density, split: float = 1.0) -> float:
    value, _ = integrate_half_line(density, split, abs_tol=1e-12, rel_tol=1e-11)
    return value


def check_normalization(seed: int) -> CheckOutcome:
    errors = {}
    for exponent in _EXPONENTS:
        errors[f"l_{exponent}"] = abs(_mass(lambda x: density_l(exponent, x, 1.0)) - 1.0)
        errors[f"h_{exponent}"] = abs(_mass(lambda x: density_h(exponent, x, 1.0)) - 1.0)
        errors[f"lamperti_{exponent}"] = abs(_mass(lambda x: density_lamperti(exponent, x, 1.0)) - 1.0)
        errors[f"g_{exponent}"] = abs(2.0 * _mass(lambda y: solution_g(exponent, _AXIS, [y], 1.0)) - 1.0)
    errors["U_0.6_0.4"] = abs(_mass(lambda x: density_U(0.6, 0.4, x, 1.0)) - 1.0)
    worst = max(errors, key=errors.get)
    return errors[worst], f"worst={worst}"


def check_laplace_transforms(seed: int) -> CheckOutcome:
    errors = {
        "l_1/2": abs(laplace_transform(lambda x: density_l(0.5, x, 1.0), 1.0) - mittag_leffler(MLSpec(0.5), -1.0)),
        "h_1/2": abs(laplace_transform(lambda x: density_h(0.5, x, 1.0) if x > 0.0 else 0.0, 1.0) - math.exp(-1.0)),
        "t^1/2_+": abs(laplace_transform(lambda z: homogeneous_plus(0.5, z), 2.0) - 2.0 ** -1.5),
        "one": abs(laplace_transform(lambda z: 1.0, 2.0) - 0.5),
    }
    worst = max(errors, key=errors.get)
    return errors[worst], f"worst={worst}"


def check_closed_form_reductions(seed: int) -> CheckOutcome:
    errors = []
    for beta in _EXPONENTS:
        for x in (0.0, 0.3, 1.0, 2.0):
            reference = density_l(beta, x, 1.0)
            errors.append(_relative_error(solution_v(beta, -beta, _AXIS, [x], 1.0), reference))
            errors.append(_relative_error(solution_Un(beta, 1, _AXIS, [x], 1.0), reference))
            errors.append(_relative_error(density_p_multivariate(beta, _AXIS, [x], 1.0), reference))
    return max(errors), "v with nu=-beta, U^1 and p at n=1 against l_beta"


def check_subordinated_gaussian(seed: int) -> CheckOutcome:
    worst = 0.0
    for beta, y, t in ((0.6, 1.3, 0.7), (0.5, 0.4, 1.0), (0.3, 2.0, 2.0), (0.8, -1.1, 0.5)):
        worst = max(worst, abs(solution_g(beta, _AXIS, [y], t) - solution_g_subordinated(beta, _AXIS, [y], t)))
    return worst, "closed form against the Gaussian subordination integral"


def check_mittag_leffler_agreement(beta: float, x_max: float) -> CheckOutcome:
    spec = MLSpec(beta)
    worst, worst_x = 0.0, None
    for x in np.linspace(0.0, x_max, 31):
        error = abs(mittag_leffler_series(spec, -x) - mittag_leffler_spectral(beta, x))
        if error >= worst:
            worst, worst_x = error, x
    return worst, f"beta={beta}, x in [0,{x_max}], worst x={worst_x:.4g}"


def check_frac_poisson(seed: int) -> CheckOutcome:
    probabilities = np.array([pmf_frac_poisson(0.7, 2.0, k, 1.0) for k in range(61)])
    errors = {"mass": abs(probabilities.sum() - 1.0)}
    for z in (0.25, 0.5):
        series = float(np.sum(probabilities * z ** np.arange(61)))
        errors[f"pgf_{z}"] = abs(series - pgf_frac_poisson(0.7, 2.0, z, 1.0))
    worst = max(errors, key=errors.get)
    return errors[worst], f"beta=0.7, lambda=2, worst={worst}"


def check_self_similarity(seed: int) -> CheckOutcome:
    errors = []
    for exponent in _EXPONENTS:
        for t in (0.5, 2.0):
            scale_l = t ** exponent
            scale_h = t ** (1.0 / exponent)
            for x in (0.1, 0.5, 1.0, 2.0, 3.0):
                expected = density_l(exponent, x / scale_l, 1.0) / scale_l
                errors.append(_relative_error(density_l(exponent, x, t), expected))
            for x in (0.5, 1.0, 2.0, 4.0):
                expected = density_h(exponent, x / scale_h, 1.0) / scale_h
                errors.append(_relative_error(density_h(exponent, x, t), expected))
    return max(errors), "l(x,t) = t^-beta l(x/t^beta,1) and h(x,t) = t^-1/alpha h(x/t^1/alpha,1)"


def check_lamperti_time_scaling(seed: int) -> CheckOutcome:
    worst, worst_case = 0.0, None
    for beta in _EXPONENTS:
        for t in (0.25, 2.0, 5.0):
            for x in np.geomspace(0.01, 50.0, 9):
                error = _relative_error(density_lamperti(beta, x, t), density_lamperti(beta, x / t, 1.0) / t)
                if error >= worst:
                    worst, worst_case = error, (beta, t, float(x))
    return worst, f"worst (beta, t, x)={worst_case}"


def check_rl_caputo_relation(seed: int) -> CheckOutcome:
    # f(t) = (1+t)^2, whose Riemann-Liouville derivative follows from the power rule term by term
    def f(s: float) -> float:
        return (1.0 + s) ** 2

    def derivative(s: float) -> float:
        return 2.0 * (1.0 + s)

    worst, worst_case = 0.0, None
    for beta in _EXPONENTS:
        spec = CaputoSpec(beta)
        for t in (0.5, 1.0, 2.0):
            riemann_liouville = rl_derivative(spec, f, t, derivative)
            caputo = caputo_derivative(spec, f, t, derivative)
            initial_term = t ** -beta / math.gamma(1.0 - beta)
            power_rule = (initial_term + 2.0 * t ** (1.0 - beta) / math.gamma(2.0 - beta)
                          + 2.0 * t ** (2.0 - beta) / math.gamma(3.0 - beta))
            error = max(abs(riemann_liouville - caputo - initial_term), abs(riemann_liouville - power_rule))
            if error >= worst:
                worst, worst_case = error, (beta, t)
    return worst, f"f=(1+t)^2, worst (beta, t)={worst_case}"


def check_wright_positivity(seed: int) -> CheckOutcome:
    # W_{-beta,n(1-beta)}(-z) is the n-fold time convolution of inverse-subordinator densities
    lowest, lowest_case = math.inf, None
    for beta in (0.2, 0.5, 0.8):
        for z in np.linspace(0.0, wright_argument_cutoff(beta), 25):
            values = {"M": m_wright(beta, z), "complement": wright_negative_axis(beta, 1.0, z)}
            for n in (2, 3):
                values[f"n={n}"] = wright_negative_axis(beta, n * (1.0 - beta), z)
            for name, value in values.items():
                if value < lowest:
                    lowest, lowest_case = value, (beta, float(z), name)
    return max(0.0, -lowest), f"smallest value {lowest!r} at (beta, z, kernel)={lowest_case}"


class IdentitySuite(VerificationSuite):
    """
    Deterministic checks of the laws and operators against closed forms and quadrature oracles.
    """

    @property
    def suite_type(self) -> SuiteType:
        return SuiteType.identities

    def checks(self) -> List[Check]:
        checks = [
            self.error_check("special_function_goldens", "Wright and Mittag-Leffler special values",
                             VerifyConstants.GOLDEN_TOLERANCE, check_special_function_goldens),
            self.error_check("gaussian_identity", "l_1/2 is the folded Gaussian",
                             VerifyConstants.GAUSSIAN_TOLERANCE, check_gaussian_identity),
            self.error_check("lamperti_reference_point", "U^beta_beta at x=t=1 equals 1/(2 pi)",
                             VerifyConstants.SUBORDINATED_GAUSSIAN_TOLERANCE, check_lamperti_reference_point),
            self.error_check("multivariate_mass", "p_beta has unit mass on the orthant",
                             VerifyConstants.MASS_TOLERANCE, check_multivariate_mass),
            self.error_check("multivariate_marginal", "p_beta marginal closed form",
                             VerifyConstants.MARGINAL_TOLERANCE, check_multivariate_marginal),
            self.error_check("directional_eigenfunctions", "(a.grad)^alpha e^(mu a.x) = mu^alpha e^(mu a.x)",
                             VerifyConstants.EIGEN_TOLERANCE, check_directional_eigenfunctions),
            self.error_check("directional_alpha_limit", "(a.grad)^alpha tends to a.grad as alpha -> 1",
                             VerifyConstants.ALPHA_LIMIT_TOLERANCE, check_directional_alpha_limit),
            self.error_check("directional_symbol", "Fourier symbol (-i a.xi)^alpha of (a.grad)^alpha",
                             VerifyConstants.SYMBOL_TOLERANCE, check_symbol_consistency),
            self.error_check("normalization", "unit mass of l, h, U, Lamperti and g",
                             VerifyConstants.NORMALIZATION_TOLERANCE, check_normalization),
            self.error_check("laplace_transforms", "Laplace transforms of l, h and t^eta_+",
                             VerifyConstants.LAPLACE_TOLERANCE, check_laplace_transforms),
            self.error_check("closed_form_reductions", "v_beta with nu=-beta and n=1 reduce to l_beta",
                             VerifyConstants.REDUCTION_TOLERANCE, check_closed_form_reductions),
            self.error_check("subordinated_gaussian", "g as a Gaussian subordinated to L^beta",
                             VerifyConstants.SUBORDINATED_GAUSSIAN_TOLERANCE, check_subordinated_gaussian),
            self.error_check("frac_poisson_pmf", "fractional Poisson mass and generating function",
                             VerifyConstants.POISSON_TOLERANCE, check_frac_poisson),
            self.error_check("self_similarity", "l_beta and h_alpha are self-similar in time",
                             VerifyConstants.SELF_SIMILARITY_TOLERANCE, check_self_similarity),
            self.error_check("lamperti_time_scaling", "Lamperti law of t H_1/H_2 scales as (1/t) u(x/t, 1)",
                             VerifyConstants.LAMPERTI_SCALING_TOLERANCE, check_lamperti_time_scaling),
            self.error_check("rl_caputo_relation", "Riemann-Liouville = Caputo + f(0) t^-beta / Gamma(1-beta)",
                             VerifyConstants.RL_CAPUTO_TOLERANCE, check_rl_caputo_relation),
            self.error_check("wright_positivity", "W_{-beta,rho}(-z) >= 0 for the density kernels",
                             VerifyConstants.POSITIVITY_TOLERANCE, check_wright_positivity),
        ]
        for beta in _EXPONENTS:
            checks.append(self.error_check(f"lamperti_subordination_beta_{beta}", "U^beta_beta is the Lamperti law",
                                           VerifyConstants.LAMPERTI_TOLERANCE,
                                           lambda seed, beta=beta: check_lamperti_subordination(beta)))
        for beta in (0.4, 0.6):
            checks.append(self.error_check(f"convolution_semigroup_beta_{beta}", "U^1 * U^1 = U^2 in time",
                                           VerifyConstants.CONVOLUTION_TOLERANCE,
                                           lambda seed, beta=beta: check_convolution_semigroup(beta)))
        for beta, x_max in ((0.3, 8.0), (0.5, 30.0), (0.8, 30.0)):
            checks.append(self.error_check(f"mittag_leffler_agreement_beta_{beta}",
                                           "series and spectral integral of E_beta(-x)",
                                           VerifyConstants.ML_AGREEMENT_TOLERANCE,
                                           lambda seed, beta=beta, x_max=x_max: check_mittag_leffler_agreement(beta,
                                                                                                               x_max)))
        return checks
