import math
from typing import Dict, Optional

import numpy as np

from src.cli.cli_constants import CliConstants
from src.cli.cli_enums.grid_variable import GridVariable
from src.exceptions import UsageError


class GridRequest:
    """
    Evenly spaced grid over one variable, the other coordinates held fixed.

    :param variable: Variable the grid runs over.
    :param start: First grid value.
    :param stop: Last grid value, stop > start (stop == start for a one-point grid).
    :param points: Number of grid values, 2..10^6 (1 for a one-point grid).
    :param fixed: Values of the remaining coordinates.
    """

    def __init__(self, variable: GridVariable, start: float, stop: float, points: int,
                 fixed: Optional[Dict[str, float]] = None):
        if not (math.isfinite(start) and math.isfinite(stop)):
            raise UsageError(f"grid limits must be finite: {start}, {stop}")
        if points > CliConstants.MAX_GRID_POINTS:
            raise UsageError(f"a grid has at most {CliConstants.MAX_GRID_POINTS} points: {points}")
        if points == 1:
            if start != stop:
                raise UsageError(f"a one-point grid needs start == stop: {start}, {stop}")
        elif points < 2 or not start < stop:
            raise UsageError(f"a grid needs start < stop and at least 2 points: {start}:{stop}:{points}")
        self.variable = variable
        self.start = float(start)
        self.stop = float(stop)
        self.points = int(points)
        self.fixed = dict(fixed or {})

    @classmethod
    def parse(cls, text: str, fixed: Optional[Dict[str, float]] = None) -> "GridRequest":
        """
        Parse ``variable:start:stop:points``, e.g. ``x:0:5:11``.
        """
        parts = text.split(":")
        if len(parts) != 4:
            raise UsageError(f"grid must read variable:start:stop:points: {text!r}")
        name, start, stop, points = parts
        try:
            variable = GridVariable(name)
        except ValueError:
            raise UsageError(f"unknown grid variable {name!r}, expected one of "
                             f"{[variable.value for variable in GridVariable]}") from None
        try:
            return cls(variable, float(start), float(stop), int(points), fixed)
        except ValueError as error:
            if isinstance(error, UsageError):
                raise
            raise UsageError(f"malformed grid {text!r}: {error}") from error

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.points)

    def __repr__(self) -> str:
        return f"GridRequest({self.variable.value}:{self.start}:{self.stop}:{self.points})"
