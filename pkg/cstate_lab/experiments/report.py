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
Module for run reports: a JSON document with the check records, convergence tables
and provenance, a flat CSV of all checks and one CSV per convergence table.

Report body (schema version 1)::

    {
      "schema_version": 1,
      "config": {...},
      "passed": true,
      "suites": [{"title": ..., "passed": ..., "checks": [{name, value, tolerance, pass, note}]}],
      "tables": {"<name>": {"columns": [...], "rows": [[...], ...]}},
      "provenance": {"versions": {...}, "created": "<UTC timestamp>"}
    }

Everything except ``provenance`` is a deterministic function of the configuration.

"""
from __future__ import annotations

import csv
import json
import math
import platform
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Union

import numpy as np
import scipy
import torch

from ..quantization.checks import ConvergenceTable, VerificationReport

SCHEMA_VERSION = 1
CHECK_COLUMNS = ["suite", "name", "value", "tolerance", "pass", "note"]


def _json_value(value: Any) -> Any:
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else repr(value)
    return value


def versions() -> dict[str, str]:
    """Versions of the interpreter and numerical stack."""
    from .. import __version__  # pylint: disable=import-outside-toplevel

    return {
        "cstate-lab": __version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "torch": torch.__version__,
    }


@dataclass
class RunReport:
    """Collected results of a run."""

    config: dict[str, Any]
    suites: list[VerificationReport] = field(default_factory=list)
    tables: dict[str, ConvergenceTable] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """Conjunction of every suite verdict."""
        return all(suite.passed for suite in self.suites)

    def failures(self) -> list[str]:
        """Qualified names ``suite/check`` of failed checks."""
        return [
            f"{suite.title}/{check.name}" for suite in self.suites for check in suite.failures
        ]

    def body(self) -> dict[str, Any]:
        """Deterministic part of the report."""
        return {
            "schema_version": SCHEMA_VERSION,
            "config": self.config,
            "passed": self.passed,
            "suites": [
                {
                    "title": suite.title,
                    "passed": suite.passed,
                    "checks": [check.to_dict() for check in suite.checks],
                }
                for suite in self.suites
            ],
            "tables": {
                name: {
                    "columns": table.columns,
                    "rows": [[_json_value(v) for v in row] for row in table.rows],
                }
                for name, table in self.tables.items()
            },
        }

    def to_dict(self) -> dict[str, Any]:
        """Full report including provenance."""
        data = self.body()
        data["provenance"] = {
            "versions": versions(),
            "created": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        }
        return data

    def write(self, path: Union[str, Path]) -> list[Path]:
        """Write the JSON report, the flat check table and the convergence tables.

        Returns:
            list[Path]: Paths of all written files.
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n", "utf-8")
        written = [path]

        checks_path = path.with_name(f"{path.stem}_checks.csv")
        with checks_path.open("w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(CHECK_COLUMNS)
            for suite in self.suites:
                for check in suite.checks:
                    record = check.to_dict()
                    writer.writerow([suite.title] + [record[c] for c in CHECK_COLUMNS[1:]])
        written.append(checks_path)

        for name, table in self.tables.items():
            table_path = path.with_name(f"{path.stem}_{name}.csv")
            with table_path.open("w", newline="", encoding="utf-8") as handle:
                writer = csv.writer(handle)
                writer.writerow(table.columns)
                writer.writerows([[_json_value(v) for v in row] for row in table.rows])
            written.append(table_path)
        return written
