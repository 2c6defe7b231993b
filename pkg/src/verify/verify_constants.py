class VerifyConstants:
    DEFAULT_SEED = 20240607
    STRICT_SAMPLES = 100_000
    MAX_RERUNS = 2
    P_VALUE_THRESHOLD = 0.01
    STANDARD_ERRORS = 3.0
    MOMENT_RELATIVE_TOLERANCE = 0.05
    MEDIAN_TOLERANCE = 0.03
    GOLDEN_TOLERANCE = 1e-10
    GAUSSIAN_TOLERANCE = 1e-10
    LAMPERTI_TOLERANCE = 1e-5
    CONVOLUTION_TOLERANCE = 1e-4
    MASS_TOLERANCE = 1e-4
    MARGINAL_TOLERANCE = 1e-5
    EIGEN_TOLERANCE = 1e-4
    ALPHA_LIMIT_TOLERANCE = 1e-2
    SYMBOL_TOLERANCE = 1e-3
    NORMALIZATION_TOLERANCE = 1e-5
    LAPLACE_TOLERANCE = 1e-7
    REDUCTION_TOLERANCE = 1e-12
    SUBORDINATED_GAUSSIAN_TOLERANCE = 1e-6
    ML_AGREEMENT_TOLERANCE = 1e-7
    POISSON_TOLERANCE = 1e-6
    SELF_SIMILARITY_TOLERANCE = 1e-9
    LAMPERTI_SCALING_TOLERANCE = 1e-12
    RL_CAPUTO_TOLERANCE = 1e-6
    # negative values only down to the absolute floor of the series
    POSITIVITY_TOLERANCE = 1e-300
    RESIDUAL_TOLERANCE = 1e-3
    CLASSICAL_RESIDUAL_TOLERANCE = 1e-6
