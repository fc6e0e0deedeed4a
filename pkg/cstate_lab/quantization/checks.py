# Copyright (C) 2024 qBraid
#
# This file is part of cstate-lab
#
# cstate-lab is free software released under the GNU General Public License v3
# or later. You can redistribute and/or modify it under the terms of the GPL v3.
# See the LICENSE file in the project root or <https://www.gnu.org/licenses/gpl-3.0.html>.
#
# THERE IS NO WARRANTY for cstate-lab, as per Section 15 of the GPL v3.

"""
Module defining check records, verification reports, convergence tables and their
tolerances.

"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

COEFFICIENT_TOL = 1e-10
QUADRATURE_TOL = 1e-6
LIKELIHOOD_TOL = 1e-12
REPRODUCING_TOL = 1e-9
SINGULAR_VALUE_TOL = 1e-8
BASE_SECTION_TOL = 1e-12


@dataclass(frozen=True)
class CheckResult:
    """A single quantitative check.

    ``passed`` is ``None`` for informational and skipped records; those do not
    take part in the overall verdict of a report.
    """

    name: str
    value: Optional[float]
    tolerance: Optional[float]
    passed: Optional[bool]
    note: str = ""

    @classmethod
    def bound(cls, name: str, value: float, tolerance: float, note: str = "") -> CheckResult:
        """Record passing when ``value <= tolerance``."""
        value = float(value)
        return cls(name, value, tolerance, bool(value <= tolerance), note)

    @classmethod
    def floor(cls, name: str, value: float, threshold: float, note: str = "") -> CheckResult:
        """Record passing when ``value > threshold``."""
        value = float(value)
        return cls(name, value, threshold, bool(value > threshold), note)

    @classmethod
    def info(cls, name: str, value: Optional[float], note: str = "") -> CheckResult:
        """Informational record."""
        return cls(name, None if value is None else float(value), None, None, note)

    @classmethod
    def skipped(cls, name: str, note: str) -> CheckResult:
        """Record for a check that could not be evaluated."""
        return cls(name, None, None, None, f"skipped: {note}")

    @property
    def failed(self) -> bool:
        """True when the record is a failed check."""
        return self.passed is False

    def to_dict(self) -> dict[str, Any]:
        """JSON-compatible representation; non-finite values become strings."""
        value = self.value
        if value is not None and not math.isfinite(value):
            value = repr(value)
        return {
            "name": self.name,
            "value": value,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "note": self.note,
        }


@dataclass
class VerificationReport:
    """Ordered collection of uniquely named checks."""

    title: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, check: CheckResult) -> CheckResult:
        """Append a check; names must be unique within the report."""
        if any(existing.name == check.name for existing in self.checks):
            raise ValueError(f"Check '{check.name}' already recorded in '{self.title}'.")
        self.checks.append(check)
        return check

    def __getitem__(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(check.name == name for check in self.checks)

    @property
    def passed(self) -> bool:
        """Conjunction over all pass/fail records."""
        return all(check.passed for check in self.checks if check.passed is not None)

    @property
    def failures(self) -> list[CheckResult]:
        """Checks that failed."""
        return [check for check in self.checks if check.failed]

    def values(self) -> dict[str, Optional[float]]:
        """Mapping from check name to value."""
        return {check.name: check.value for check in self.checks}


@dataclass
class ConvergenceTable:
    """Named columns and rows of a convergence study."""

    columns: list[str]
    rows: list[tuple] = field(default_factory=list)

    def column(self, name: str) -> np.ndarray:
        """Values of one column."""
        index = self.columns.index(name)
        return np.array([row[index] for row in self.rows], dtype=np.float64)

    def is_decreasing(self, name: str, start: int = 0, floor: float = 0.0) -> bool:
        """Whether a column strictly decreases from row ``start`` on.

        Entries at or below ``floor`` count as converged.
        """
        values = self.column(name)[start:]
        return all(b < a or b <= floor for a, b in zip(values[:-1], values[1:]))

    def to_records(self) -> list[dict]:
        """Rows as dictionaries keyed by column name."""
        return [dict(zip(self.columns, row)) for row in self.rows]


@dataclass
class CheckConfig:
    """Sampling sizes, seed and tolerances shared by the verification routines."""

    n_random_sections: int = 1000
    n_random_points: int = 100
    seed: int = 0
    coefficient_tol: float = COEFFICIENT_TOL
    quadrature_tol: float = QUADRATURE_TOL
    likelihood_tol: float = LIKELIHOOD_TOL
    reproducing_tol: float = REPRODUCING_TOL
    singular_value_tol: float = SINGULAR_VALUE_TOL

    def __post_init__(self):
        if self.n_random_sections < 1 or self.n_random_points < 1:
            raise ValueError("Sample sizes must be positive.")
