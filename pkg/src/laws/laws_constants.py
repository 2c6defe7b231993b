class LawsConstants:
    DEFAULT_TIME = 1.0
    DEFAULT_EXPONENT = 0.5
    UNIT_NORM_TOLERANCE = 1e-12
    # relative weight of the M-Wright tail below which subordination integrals are truncated
    TAIL_EPSILON = 1e-16
    TAIL_MARGIN = 8.0
    SUBORDINATION_TOLERANCE = 1e-6
    QUAD_ABSOLUTE_TOLERANCE = 1e-11
    QUAD_RELATIVE_TOLERANCE = 1e-10
