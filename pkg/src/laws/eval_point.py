from typing import Optional, Sequence

import numpy as np

from src.exceptions import DomainError
from src.laws.direction import Direction
from src.laws.frac_params import check_time


class EvalPoint:
    """
    Space-time point (x, t) at which a law or solution is evaluated.

    :param x: Spatial point (vector) or a scalar projection a.x.
    :param t: Time, t > 0.
    :param direction: Direction used to project a vector point.
    """

    def __init__(self, x, t: float, direction: Optional[Direction] = None):
        self.t = check_time(t)
        self.direction = direction
        if np.ndim(x) == 0:
            self.x = None
            self._projection = float(x)
        else:
            self.x = np.asarray(x, dtype=float).reshape(-1)
            if direction is None:
                raise DomainError("a vector point needs a direction to be projected")
            self._projection = direction.project(self.x)

    @classmethod
    def along(cls, direction: Direction, projection: float, t: float) -> "EvalPoint":
        """
        Point y a at time t, so that a.x = y.
        """
        return cls(direction.point_at(projection), t, direction)

    @property
    def projection(self) -> float:
        return self._projection

    def vector(self) -> Sequence[float]:
        if self.x is None:
            if self.direction is None:
                return np.array([self._projection])
            return self.direction.point_at(self._projection)
        return self.x

    def require_half_line(self) -> "EvalPoint":
        if self._projection < 0.0:
            raise DomainError(f"projected coordinate must be non-negative: {self._projection}")
        return self

    def __repr__(self) -> str:
        return f"EvalPoint(projection={self._projection}, t={self.t})"
