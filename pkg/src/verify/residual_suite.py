import logging
from typing import List, Sequence, Tuple

from src.fracops.operator_specs import CaputoSpec
from src.fracops.symbols import dir_symbol
from src.fracops.time_derivatives import caputo_derivative, central_difference
from src.laws.characteristic_functions import advdiff_exponent, poisson_transport_exponent
from src.laws.direction import Direction
from src.laws.frac_params import FracParams
from src.special_functions.function_specs import MLSpec
from src.special_functions.mittag_leffler import mittag_leffler, mittag_leffler_complex
from src.verify.verification_suite import Check, CheckOutcome, VerificationSuite
from src.verify.verify_constants import VerifyConstants
from src.verify.verify_enums.suite_type import SuiteType

logger = logging.getLogger(__name__)

_AXIS = Direction([1.0])
_TIMES = (0.5, 1.0)


def relaxation_residual(beta: float, symbol: complex, t: float, analytic: bool = True) -> float:
    """
    Relative residual of the fractional relaxation equation D^beta f = -symbol f for
    f(t) = E_beta(-t^beta symbol), the Caputo derivative taken of the real and imaginary parts separately.

    :param analytic: Use f'(t) = -symbol t^(beta-1) E_(beta,beta)(-t^beta symbol); otherwise central differences.
    """
    def f(s: float) -> complex:
        return mittag_leffler_complex(MLSpec(beta), -s ** beta * symbol)

    def derivative(s: float) -> complex:
        return -symbol * s ** (beta - 1.0) * mittag_leffler_complex(MLSpec(beta, beta), -s ** beta * symbol)

    expected = -symbol * f(t)
    if beta == 1.0:
        value = central_difference(f, t)
    else:
        spec = CaputoSpec(beta)
        real = caputo_derivative(spec, lambda s: f(s).real, t, (lambda s: derivative(s).real) if analytic else None)
        imag = caputo_derivative(spec, lambda s: f(s).imag, t, (lambda s: derivative(s).imag) if analytic else None)
        value = complex(real, imag)
    return abs(value - expected) / abs(expected)


def _worst(cases: Sequence[Tuple[str, float]]) -> CheckOutcome:
    label, residual = max(cases, key=lambda case: case[1])
    return residual, f"worst {label}"


def check_directional_transport(seed: int) -> CheckOutcome:
    alpha = beta = 0.5
    cases = [(f"xi={xi}, t={t}", relaxation_residual(beta, dir_symbol(alpha, _AXIS, [xi]), t))
             for xi in (-1.0, 0.5, 1.0) for t in _TIMES]
    return _worst(cases)


def check_advection_diffusion(seed: int) -> CheckOutcome:
    params = FracParams(alpha=0.5, beta=0.8, theta=0.7)
    cases = [(f"xi={xi}, t={t}", relaxation_residual(params.beta, advdiff_exponent(params, _AXIS, [xi]), t))
             for xi in (-0.5, 0.5, 1.0) for t in _TIMES]
    return _worst(cases)


def check_classical_advection_diffusion(seed: int) -> CheckOutcome:
    params = FracParams(alpha=1.0, beta=1.0, theta=1.0)
    cases = [(f"xi={xi}, t={t}", relaxation_residual(1.0, advdiff_exponent(params, _AXIS, [xi]), t))
             for xi in (0.5, 1.0) for t in _TIMES]
    return _worst(cases)


def check_inverse_subordinator_laplace(seed: int) -> CheckOutcome:
    beta = 0.6
    cases = [(f"xi={xi}, t={t}", relaxation_residual(beta, complex(xi), t)) for xi in (0.5, 1.0, 2.0) for t in _TIMES]
    return _worst(cases)


def check_poisson_transport(seed: int) -> CheckOutcome:
    params = FracParams(alpha=0.5, beta=0.5, rate=1.0, tau=1.0)
    cases = [(f"xi={xi}, t={t}", relaxation_residual(params.beta, poisson_transport_exponent(params, _AXIS, [xi]), t))
             for xi in (0.5, 1.0) for t in _TIMES]
    return _worst(cases)


def check_relaxation_eigenfunctions(seed: int) -> CheckOutcome:
    cases = []
    for beta in (0.4, 0.6, 0.8):
        for w in (0.5, 1.0, 2.0):
            for t in (0.1, 1.0, 3.0):
                rate = w ** beta
                value = caputo_derivative(CaputoSpec(beta), lambda s: mittag_leffler(MLSpec(beta), -(s * w) ** beta), t)
                expected = -rate * mittag_leffler(MLSpec(beta), -(t * w) ** beta)
                cases.append((f"beta={beta}, w={w}, t={t}", abs(value - expected) / abs(expected)))
    return _worst(cases)


class ResidualSuite(VerificationSuite):
    """
    Fourier/Laplace-side solutions put back into their time-fractional relaxation equations.
    """

    @property
    def suite_type(self) -> SuiteType:
        return SuiteType.residuals

    def checks(self) -> List[Check]:
        return [
            self.error_check("directional_transport", "E_beta(-t^beta (-i a.xi)^alpha) solves the transport problem",
                             VerifyConstants.RESIDUAL_TOLERANCE, check_directional_transport),
            self.error_check("advection_diffusion", "characteristic function of the advection-diffusion problem",
                             VerifyConstants.RESIDUAL_TOLERANCE, check_advection_diffusion),
            self.error_check("classical_advection_diffusion", "exp(-ct) solves d/dt f = -c f",
                             VerifyConstants.CLASSICAL_RESIDUAL_TOLERANCE, check_classical_advection_diffusion),
            self.error_check("inverse_subordinator_laplace", "E_beta(-t^beta xi) is the Laplace transform of l_beta",
                             VerifyConstants.RESIDUAL_TOLERANCE, check_inverse_subordinator_laplace),
            self.error_check("poisson_transport", "characteristic function of the Poisson transport problem",
                             VerifyConstants.RESIDUAL_TOLERANCE, check_poisson_transport),
            self.error_check("relaxation_eigenfunctions", "D^beta E_beta(-(wt)^beta) = -w^beta E_beta(-(wt)^beta)",
                             VerifyConstants.EIGEN_TOLERANCE, check_relaxation_eigenfunctions),
        ]
