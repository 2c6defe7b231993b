import json
from typing import Any, Dict, List, Optional

from src.exceptions import IoError
from src.verify.check_result import CheckResult
from src.verify.verify_enums.suite_type import SuiteType


class VerificationReport:
    """
    Results of one suite run, ordered by check name.
    """

    def __init__(self, suite: SuiteType, seed: int, results: List[CheckResult], wall_time_s: float):
        if not results:
            raise ValueError(f"a verification report needs at least one result: suite {suite.value}")
        self.suite = suite
        self.seed = seed
        self.results = sorted(results, key=lambda result: result.name)
        self.wall_time_s = wall_time_s

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite.value,
            "seed": self.seed,
            "results": [result.to_dict() for result in self.results],
            "wall_time_s": self.wall_time_s,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def write(self, path: Optional[str]) -> str:
        """
        Serialise the report, writing it to ``path`` when given.

        :raises IoError: when the file cannot be written.
        """
        text = self.to_json()
        if path is not None:
            try:
                with open(path, "w") as handle:
                    handle.write(text)
            except OSError as error:
                raise IoError(f"cannot write report {path}: {error}") from error
        return text

    @classmethod
    def combine(cls, reports: List["VerificationReport"], seed: int, wall_time_s: float) -> "VerificationReport":
        results = [result for report in reports for result in report.results]
        return cls(SuiteType.all, seed, results, wall_time_s)
