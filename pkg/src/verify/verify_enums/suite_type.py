from enum import Enum


class SuiteType(Enum):
    """
    Verification suites.

    - identities: quadrature against closed forms.
    - statistics: Monte Carlo against laws.
    - residuals: Fourier/Laplace-side governing equations.
    - all: the three suites together.
    """
    identities = "identities"
    statistics = "statistics"
    residuals = "residuals"
    all = "all"
