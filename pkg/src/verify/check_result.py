import math
from typing import Any, Dict

from src.verify.verify_enums.check_kind import CheckKind


class CheckResult:
    """
    Outcome of one verification check.

    :param name: Unique check name.
    :param paper_anchor: Identity or law the check exercises.
    :param metric: Observed error or p-value.
    :param threshold: Acceptance threshold.
    :param kind: Whether the metric is an error or a p-value.
    :param detail: Free-form diagnostic text.
    """

    def __init__(self, name: str, paper_anchor: str, metric: float, threshold: float, kind: CheckKind,
                 detail: str = ""):
        self.name = name
        self.paper_anchor = paper_anchor
        self.metric = float(metric)
        self.threshold = float(threshold)
        self.kind = kind
        self.detail = detail

    @classmethod
    def from_error(cls, name: str, paper_anchor: str, error: float, threshold: float,
                   detail: str = "") -> "CheckResult":
        return cls(name, paper_anchor, error, threshold, CheckKind.error, detail)

    @classmethod
    def from_p_value(cls, name: str, paper_anchor: str, p_value: float, threshold: float,
                     detail: str = "") -> "CheckResult":
        return cls(name, paper_anchor, p_value, threshold, CheckKind.p_value, detail)

    @classmethod
    def from_exception(cls, name: str, paper_anchor: str, threshold: float, kind: CheckKind,
                       error: Exception) -> "CheckResult":
        return cls(name, paper_anchor, math.nan, threshold, kind, f"{type(error).__name__}: {error}")

    @property
    def passed(self) -> bool:
        if math.isnan(self.metric):
            return False
        if self.kind is CheckKind.error:
            return self.metric <= self.threshold
        return self.metric >= self.threshold

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "paper_anchor": self.paper_anchor,
            "metric": self.metric,
            "threshold": self.threshold,
            "passed": self.passed,
            "detail": self.detail,
        }

    def __repr__(self) -> str:
        status = "passed" if self.passed else "FAILED"
        return f"CheckResult({self.name}: {self.kind.value}={self.metric:.3e} vs {self.threshold:.1e}, {status})"
