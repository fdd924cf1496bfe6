"""Pass/fail reports produced by the verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    computed: Any = None
    predicted: Any = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name}"
        if self.computed is not None or self.predicted is not None:
            text += f": computed={_fmt(self.computed)} predicted={_fmt(self.predicted)}"
        if self.detail:
            text += f" ({self.detail})"
        return text


def _fmt(value: Any) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_fmt(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        inner = ", ".join(_fmt(v) for v in value)
        return f"[{inner}]" if isinstance(value, list) else f"({inner})"
    return str(value)


@dataclass
class Report:
    """A named collection of checks.  ``summary`` holds extra exact values
    (minima, witnesses) that a caller may want to display or assert on."""

    title: str
    checks: list[Check] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, passed: bool, detail: str = "", computed: Any = None,
            predicted: Any = None) -> bool:
        self.checks.append(Check(name, bool(passed), detail, computed, predicted))
        return bool(passed)

    def extend(self, other: "Report") -> None:
        for check in other.checks:
            self.checks.append(Check(f"{other.title}: {check.name}", check.passed, check.detail,
                                     check.computed, check.predicted))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __bool__(self) -> bool:
        return self.passed

    def render(self) -> str:
        lines = [f"== {self.title} =="]
        lines.extend(c.line() for c in self.checks)
        for key, value in self.summary.items():
            lines.append(f"  {key}: {_fmt(value)}")
        lines.append(f"-- {'PASS' if self.passed else 'FAIL'} "
                     f"({len(self.checks) - len(self.failures)}/{len(self.checks)} checks)")
        return "\n".join(lines)
