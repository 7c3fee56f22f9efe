"""Inequality checks with their evidence."""

from __future__ import annotations

from dataclasses import dataclass, field

# an inequality lhs <= rhs passes if it holds up to this floating-point slack
CHECK_RTOL = 1e-9
CHECK_ATOL = 1e-12


@dataclass
class CheckReport:
    claim: str
    lhs: float
    rhs: float
    passed: bool | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.lhs = float(self.lhs)
        self.rhs = float(self.rhs)
        if self.passed is None:
            self.passed = self.lhs <= self.rhs + CHECK_ATOL + CHECK_RTOL * abs(self.rhs)

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    def to_dict(self) -> dict:
        d = {"claim": self.claim, "lhs": self.lhs, "rhs": self.rhs, "slack": self.slack,
             "pass": bool(self.passed)}
        if self.extra:
            d.update(self.extra)
        return d

    def __bool__(self):
        return bool(self.passed)


def all_passed(reports) -> bool:
    return all(bool(r) for r in reports)
