class SpecialFunctionsConstants:
    WRIGHT_MAX_ARGUMENT = 30.0
    DEFAULT_PRECISION_TARGET = 1e-12
    MIN_PRECISION_TARGET = 1e-14
    MAX_PRECISION_TARGET = 1e-4
    ABSOLUTE_FLOOR = 1e-300
    MAX_TERMS = 20_000
    SMALL_TERM_RUN = 3
    CHUNK_SIZE = 64
    GUARD_DIGITS = 10
    MAX_DPS = 4000
    MAX_ESCALATIONS = 6
    # log(1.8e308)
    LOG_FLOAT_MAX = 709.0
    ML_SPECTRAL_THRESHOLD = -5.0
    ML_SERIES_MAX_LOG_PEAK = 10.0
    ML_SPECTRAL_RELATIVE_TOLERANCE = 1e-12
    ML_SPECTRAL_ACCEPTED_ERROR = 1e-9
    ML_SPECTRAL_DECAY_LENGTH = 60.0
    ML_COMPLEX_MAX_MODULUS = 5.0
    ML_SERIES_PRECISION_TARGET = 1e-10
    KANTER_QUAD_RELATIVE_TOLERANCE = 1e-12
    KANTER_GAUSS_NODES = 256
    WRIGHT_ORDER_TOLERANCE = 1e-12
