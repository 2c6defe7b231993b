from enum import Enum


class SimulatedProcess(Enum):
    """
    Processes the ``simulate`` command samples.
    """
    subordinator = "subordinator"
    inverse = "inverse"
    stable = "stable"
    advdiff = "advdiff"
    fracpoisson = "fracpoisson"
    ratio = "ratio"
    brownian = "brownian"
