from enum import Enum


class GridVariable(Enum):
    """
    - x: projected coordinate a.x (or the point itself for one-dimensional laws).
    - t: time.
    - xi: frequency s along the direction, xi = s a.
    - z: argument of a special function.
    """
    x = "x"
    t = "t"
    xi = "xi"
    z = "z"
