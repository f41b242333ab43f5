"""
Verification report types shared by the catalog, family and aggregate checks.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd
from tabulate import tabulate

STATUS_PASS = "pass"
STATUS_ERRATUM = "erratum"
STATUS_FAIL = "fail"

PASSING_STATUSES = (STATUS_PASS, STATUS_ERRATUM)
REPORT_COLUMNS = ["check", "subject", "status", "detail"]


@dataclass(frozen=True)
class CheckResult:
    """
    One line of a verification report.

    Attributes:
        check: Check family, e.g. 'table1' or 'closed-form'
        subject: What was checked, e.g. 'G_12' or 'windmill4 n=3'
        status: 'pass', 'erratum' (printed value wrong, documented correction holds) or 'fail'
        detail: Human-readable expected/actual summary
    """

    check: str
    subject: str
    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status in PASSING_STATUSES

    @classmethod
    def from_condition(cls, check: str, subject: str, ok: bool, detail: str = "") -> "CheckResult":
        return cls(check, subject, STATUS_PASS if ok else STATUS_FAIL, detail)


@dataclass
class VerificationReport:
    """Ordered collection of check results with an overall verdict."""

    title: str
    results: List[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        return result

    def check(self, check: str, subject: str, ok: bool, detail: str = "") -> CheckResult:
        return self.add(CheckResult.from_condition(check, subject, ok, detail))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> List[CheckResult]:
        """Results with status fail."""
        return [r for r in self.results if not r.passed]

    def count(self, status: Optional[str] = None) -> int:
        """Number of results, optionally with one status."""
        if status is None:
            return len(self.results)
        return sum(1 for r in self.results if r.status == status)

    def merge(self, other: "VerificationReport", title: Optional[str] = None) -> "VerificationReport":
        """New report with the results of both, self first."""
        return VerificationReport(title or self.title, self.results + other.results)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([r.__dict__ for r in self.results], columns=REPORT_COLUMNS)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "passed": self.passed,
            "summary": {s: self.count(s) for s in (STATUS_PASS, STATUS_ERRATUM, STATUS_FAIL)},
            "results": [dict(r.__dict__) for r in self.results],
        }

    def render(self, only_failures: bool = False) -> str:
        """
        Plain-text table followed by a one-line verdict.

        Args:
            only_failures: List only failing lines

        Returns:
            Report text
        """
        rows = self.failures() if only_failures else self.results
        table = tabulate([[r.check, r.subject, r.status, r.detail] for r in rows], headers=REPORT_COLUMNS)
        verdict = "PASS" if self.passed else "FAIL"
        summary = (
            f"{self.title}: {verdict} ({self.count(STATUS_PASS)} pass, "
            f"{self.count(STATUS_ERRATUM)} erratum, {self.count(STATUS_FAIL)} fail)"
        )
        return f"{table}\n{summary}" if rows else summary
