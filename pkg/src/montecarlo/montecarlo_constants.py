class MonteCarloConstants:
    MAX_SEED = 2 ** 64 - 1
    DEFAULT_SEED = 7
    DEFAULT_WORKERS = 1
    DEFAULT_SAMPLES = 100_000
