class NumericsConstants:
    MACHINE_EPSILON = 2.220446049250313e-16
    QUAD_SUBDIVISION_LIMIT = 200
    QUAD_DEFAULT_RELATIVE_TOLERANCE = 1e-10
    QUAD_DEFAULT_ABSOLUTE_TOLERANCE = 1e-12
    # half-line integrals ignore s > e^300
    HALF_LINE_LOG_CUTOFF = 300.0
