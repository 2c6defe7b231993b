from typing import Sequence

import numpy as np

from src.exceptions import DomainError
from src.laws.laws_constants import LawsConstants


class Direction:
    """
    Unit vector a defining the drift direction and the projected coordinate a.x.

    :param components: Components of a; ||a|| must equal 1 within 1e-12.
    :param require_non_negative: Reject negative components (laws on the positive orthant).
    """

    def __init__(self, components: Sequence[float], require_non_negative: bool = True):
        a = np.asarray(components, dtype=float).reshape(-1)
        if a.size < 1:
            raise DomainError("direction needs at least one component")
        if not np.all(np.isfinite(a)):
            raise DomainError(f"direction components must be finite: {components}")
        norm = float(np.linalg.norm(a))
        if abs(norm - 1.0) > LawsConstants.UNIT_NORM_TOLERANCE:
            raise DomainError(f"direction must have unit norm, got ||a|| = {norm!r}")
        if require_non_negative and np.any(a < 0.0):
            raise DomainError(f"direction components must be non-negative: {components}")
        self.a = a
        self.require_non_negative = require_non_negative

    @classmethod
    def from_components(cls, components: Sequence[float], renormalize_tolerance: float,
                        require_non_negative: bool = True) -> "Direction":
        """
        Build a direction, renormalising when the norm is within ``renormalize_tolerance`` of 1.
        """
        a = np.asarray(components, dtype=float).reshape(-1)
        norm = float(np.linalg.norm(a)) if a.size else 0.0
        if abs(norm - 1.0) > renormalize_tolerance:
            raise DomainError(f"direction norm {norm!r} is not within {renormalize_tolerance} of 1")
        return cls(a / norm, require_non_negative=require_non_negative)

    @property
    def dim(self) -> int:
        return int(self.a.size)

    def product(self) -> float:
        """
        a_(n) = a_1 ... a_n.
        """
        return float(np.prod(self.a))

    def project(self, x: Sequence[float]) -> float:
        x = np.asarray(x, dtype=float).reshape(-1)
        if x.size != self.dim:
            raise DomainError(f"point has dimension {x.size}, direction has dimension {self.dim}")
        return float(np.dot(self.a, x))

    def point_at(self, projection: float) -> np.ndarray:
        """
        The point y a, whose projection a.(y a) equals y.
        """
        return projection * self.a

    def __repr__(self) -> str:
        return f"Direction({self.a.tolist()})"
