"""Report and configuration records shared by the suites, the CLI and the API."""

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from .lambda_linear import LambdaLinear
from .supertensor import SuperTensor, Slot
from .weight import Weight, format_rational

PASS = "pass"
FAIL = "fail"

SUITE_NAMES = ("prelim", "decomposition", "hwv", "joseph", "realization", "beta3")


def render_value(value: Any) -> Any:
    """Serialize exact values: rationals as "p/q", λ-polynomials as "a+b*lambda"."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, LambdaLinear):
        return value.to_text()
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, Weight):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [render_value(v) for v in value]
    if isinstance(value, dict):
        return {str(k): render_value(v) for k, v in value.items()}
    return str(value)


@dataclass
class CheckResult:
    name: str
    passed: bool
    expected: Any = None
    actual: Any = None
    detail: str = ""

    @property
    def status(self) -> str:
        return PASS if self.passed else FAIL

    """
    Create a dictionary representation of the check.

    Returns:
        Dictionary with name, status, expected and actual values.
    """
    def to_dict(self) -> Dict[str, Any]:
        data = {
            "name": self.name,
            "status": self.status,
            "expected": render_value(self.expected),
            "actual": render_value(self.actual),
        }
        if self.detail:
            data["detail"] = self.detail
        return data


def check_equal(name: str, expected: Any, actual: Any, detail: str = "") -> CheckResult:
    return CheckResult(name, expected == actual, expected, actual, detail)


def check_true(name: str, condition: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(condition), True, bool(condition), detail)


@dataclass
class SuiteReport:
    name: str
    checks: List[CheckResult] = field(default_factory=list)
    wall_time_ms: int = 0
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        return PASS if self.passed else FAIL

    def failing(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "name": self.name,
            "status": self.status,
            "checks": [c.to_dict() for c in self.checks],
            "wall_time_ms": self.wall_time_ms,
        }
        if self.error:
            data["error"] = self.error
        return data


@dataclass
class CaseReport:
    m: int
    n: int
    suites: List[SuiteReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def to_dict(self) -> Dict[str, Any]:
        return {"m": self.m, "n": self.n, "suites": [s.to_dict() for s in self.suites]}


@dataclass
class ReportDocument:
    cases: List[CaseReport] = field(default_factory=list)
    version: int = 1

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def counts(self) -> Dict[str, int]:
        checks = [c for case in self.cases for s in case.suites for c in s.checks]
        return {
            "checks": len(checks),
            "passed": sum(1 for c in checks if c.passed),
            "failed": sum(1 for c in checks if not c.passed),
        }

    def to_dict(self) -> Dict[str, Any]:
        return {"version": self.version, "cases": [c.to_dict() for c in self.cases]}


@dataclass
class WeightSpaceEntry:
    """One weight of ⊗ᵏg: weight-space dimension and highest-weight-vector count."""

    weight: Weight
    dimension: int
    hwv_dimension: int
    predicted: Optional[int] = None

    @property
    def matches_prediction(self) -> bool:
        return self.predicted is None or self.predicted == self.hwv_dimension

    def to_dict(self) -> Dict[str, Any]:
        return {
            "weight": self.weight.to_json(),
            "label": self.weight.label(),
            "dimension": self.dimension,
            "hwv_dimension": self.hwv_dimension,
            "predicted": self.predicted,
        }


@dataclass
class WeightSpaceReport:
    """Highest-weight data for the symmetric and antisymmetric squares of g."""

    m: int
    n: int
    total_dimension: int
    parts: Dict[str, List[WeightSpaceEntry]] = field(default_factory=dict)
    excluded: List[WeightSpaceEntry] = field(default_factory=list)

    def hwv_weights(self, part: str) -> Dict[str, int]:
        return {e.weight.label(): e.hwv_dimension for e in self.parts[part] if e.hwv_dimension}

    def mismatches(self) -> List[Tuple[str, WeightSpaceEntry]]:
        bad = [(p, e) for p, entries in self.parts.items() for e in entries if not e.matches_prediction]
        bad += [("excluded", e) for e in self.excluded if e.hwv_dimension]
        return bad

    @property
    def consistent(self) -> bool:
        return not self.mismatches()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "n": self.n,
            "total_dimension": self.total_dimension,
            "parts": {p: [e.to_dict() for e in entries] for p, entries in self.parts.items()},
            "excluded": [e.to_dict() for e in self.excluded],
            "consistent": self.consistent,
        }


@dataclass
class SubspaceBasis:
    """Linearly independent tensors spanning a subrepresentation."""

    signature: Tuple[Slot, ...]
    vectors: List[SuperTensor] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


@dataclass
class SuiteConfig:
    """What ``run_suite`` executes and how."""

    cases: List[Tuple[int, int]] = field(default_factory=list)
    suites: List[str] = field(default_factory=lambda: ["prelim"])
    output: Optional[Path] = None
    format: str = "json"
    jobs: int = 1
    mem_cap_mb: int = 2048
    slow: bool = False
    timings: bool = False
    seed: int = 20240521
    samples: int = 50
