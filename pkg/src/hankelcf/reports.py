"""Check reports with a deterministic JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exactnum import format_rational

REPORT_SCHEMA_VERSION = 1


def jsonable(value: Any) -> Any:
    """Convert rationals (and containers of them) to ``"num/den"`` strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


@dataclass
class Check:
    name: str
    inputs: dict
    expected: Any
    actual: Any
    passed: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "inputs": jsonable(self.inputs),
                "expected": jsonable(self.expected), "actual": jsonable(self.actual),
                "passed": self.passed}


@dataclass
class CheckReport:
    """A named list of checks.

    ``discrepancies`` collects comparisons against printed formulas that are
    reported as data and do not decide ``passed``.
    """

    name: str
    checks: list[Check] = field(default_factory=list)
    discrepancies: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    degenerate: list[dict] = field(default_factory=list)

    def check(self, name: str, inputs: dict, expected, actual) -> bool:
        ok = expected == actual
        self.checks.append(Check(name, inputs, expected, actual, ok))
        return ok

    def compare_printed(self, name: str, inputs: dict, expected, actual) -> bool:
        ok = expected == actual
        if not ok:
            self.discrepancies.append(Check(name, inputs, expected, actual, False))
        return ok

    def extend(self, other: CheckReport) -> None:
        self.checks.extend(other.checks)
        self.discrepancies.extend(other.discrepancies)
        self.notes.extend(other.notes)
        self.degenerate.extend(other.degenerate)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def first_failure(self) -> Check | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def to_dict(self, config: dict | None = None) -> dict:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "suite": self.name,
            "config": jsonable(config or {}),
            "passed": self.passed,
            "summary": {"total": len(self.checks),
                        "failed": len(self.failures),
                        "discrepancies": len(self.discrepancies),
                        "degenerate": len(self.degenerate)},
            "checks": [c.to_dict() for c in self.checks],
            "discrepancies": [c.to_dict() for c in self.discrepancies],
            "degenerate": jsonable(self.degenerate),
            "notes": list(self.notes),
        }

    def to_json(self, config: dict | None = None) -> str:
        return json.dumps(self.to_dict(config), indent=2, sort_keys=True)
