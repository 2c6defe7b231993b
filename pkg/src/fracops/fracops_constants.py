class FracopsConstants:
    DEFAULT_NODE_COUNT = 512
    MIN_NODE_COUNT = 64
    DEFAULT_T_MIN = 1e-8
    CAPUTO_TOLERANCE = 1e-6
    DIFFERENCE_STEP = 1e-5
    RELATIVE_DIFFERENCE_STEP = 1e-3
    DEFAULT_S_MAX = 1e3
    DEFAULT_DIR_TOLERANCE = 1e-8
    MIN_DIR_TOLERANCE = 1e-12
    MAX_DIR_TOLERANCE = 1e-4
    LAPLACE_TOLERANCE = 1e-7
