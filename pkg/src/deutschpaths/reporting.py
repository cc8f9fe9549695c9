"""Structured results for the package's internal verification runs.

Every identity checker returns a VerificationReport: a list of CheckResult
rows, one per (identity, size) pair, each carrying a witness string when
the check failed.  Callers either inspect ``report.ok`` or call
``raise_if_failed`` to turn the first failure into a MismatchFound.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class MismatchFound(AssertionError):
    """An identity that should hold exactly failed at some size."""


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one exact check at one size/dimension."""

    name: str
    dimension: str
    passed: bool
    witness: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dimension": self.dimension,
            "passed": self.passed,
            "witness": self.witness,
        }


@dataclass
class VerificationReport:
    """Collected check results plus free-form summary data."""

    title: str
    checks: list[CheckResult] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, name: str, dimension, passed: bool, witness: str = "") -> None:
        self.checks.append(CheckResult(name, str(dimension), bool(passed), witness))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def raise_if_failed(self) -> None:
        bad = self.failures
        if bad:
            first = bad[0]
            exc = MismatchFound(
                f"{self.title}: {first.name} failed at {first.dimension}"
                + (f" ({first.witness})" if first.witness else "")
                + (f"; {len(bad) - 1} more failure(s)" if len(bad) > 1 else "")
            )
            exc.report = self
            raise exc

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
            "data": self.data,
        }
