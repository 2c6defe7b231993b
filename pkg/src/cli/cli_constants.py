class CliConstants:
    EXIT_OK = 0
    EXIT_VERIFICATION_FAILED = 1
    EXIT_USAGE = 2
    EXIT_IO = 3
    MAX_GRID_POINTS = 10 ** 6
    DIRECTION_RENORMALIZE_TOLERANCE = 1e-6
    DEFAULT_TIME = 1.0
    DEFAULT_EXPONENT = 0.5
    DEFAULT_SAMPLES = 100_000
    DEFAULT_LOG_LEVEL = "WARNING"
