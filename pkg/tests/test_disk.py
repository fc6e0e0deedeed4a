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
Unit tests for the truncated disk model and its convergence study.

"""
import math

import numpy as np
import pytest

from cstate_lab.models import (
    disk_chi_closed_form,
    disk_convergence_report,
    disk_model,
    disk_tail_bound,
)
from cstate_lab.models.disk import disk_constants
from cstate_lab.quantization import ConvergenceTable, InvalidArgumentError, OutOfDomainError
from cstate_lab.states import chi_squared, verify_coherent


@pytest.mark.parametrize("hbar", [0.5, 0.25])
def test_disk_constants(hbar):
    """Test c_i^2 = Gamma(1/hbar + i) / (i! Gamma(1/hbar))."""
    inv = 1.0 / hbar
    expected = [
        math.sqrt(math.gamma(inv + i) / (math.factorial(i) * math.gamma(inv))) for i in range(6)
    ]
    assert np.allclose(disk_constants(hbar, 6), expected)


@pytest.mark.parametrize("hbar", [0.5, 0.2])
def test_disk_model_is_orthonormal(hbar):
    """Test the closed-form basis against the weighted disk rule."""
    assert disk_model(hbar, 12).orthonormality_deviation() < 1e-10


@pytest.mark.parametrize("hbar,cutoff", [(1.0, 10), (1.5, 10), (0.5, 0)])
def test_disk_model_rejects_invalid_parameters(hbar, cutoff):
    """Test that 1/hbar <= 1 and empty truncations are rejected."""
    with pytest.raises(InvalidArgumentError):
        disk_model(hbar, cutoff)


@pytest.mark.parametrize("mu", [0.0, 0.3, 0.2 + 0.1j])
def test_truncated_chi_approaches_closed_form(mu):
    """Test chi^2 of a long truncation against (1 - |mu|^2)^(-1/hbar)."""
    model = disk_model(0.5, 30)
    assert chi_squared(model, mu) == pytest.approx(disk_chi_closed_form(mu, 0.5), rel=1e-10)


def test_closed_form_outside_disk():
    """Test that points on the unit circle are rejected."""
    with pytest.raises(OutOfDomainError):
        disk_chi_closed_form(1.0, 0.5)


def test_tail_bound_dominates_tail():
    """Test that the geometric bound exceeds the truncation error of chi^2."""
    mu, hbar = 0.6j, 0.5
    full = disk_chi_closed_form(mu, hbar)
    for cutoff in (5, 10, 20):
        truncated = chi_squared(disk_model(hbar, cutoff), mu)
        assert full - truncated <= disk_tail_bound(mu, hbar, cutoff) * (1 + 1e-12)


def test_tail_bound_edge_cases():
    """Test the tail bound at the origin and for a large leading ratio."""
    assert disk_tail_bound(0.0, 0.5, 4) == 0.0
    assert disk_tail_bound(0.99, 0.01, 1) == float("inf")


def test_verify_coherent_on_disk(small_config):
    """Test that the coherent-state checks pass on a truncated disk."""
    report = verify_coherent(disk_model(0.5, 20), small_config)
    assert report.passed, [check.name for check in report.failures]


def test_convergence_report_columns():
    """Test the columns and row count of the disk convergence table."""
    table = disk_convergence_report(0.5, 0.8, 0.5, [10, 20, 40])
    assert isinstance(table, ConvergenceTable)
    assert table.columns == [
        "cutoff",
        "coherent",
        "squeezed_I",
        "squeezed_II",
        "chi_squared",
        "tail_bound",
    ]
    assert table.column("cutoff").tolist() == [10, 20, 40]


def test_convergence_report_decreases():
    """Test that the increments shrink and respect the tail bound."""
    table = disk_convergence_report(0.5, 0.8, 0.5, [10, 20, 40])
    assert table.is_decreasing("coherent", floor=1e-12)
    assert table.is_decreasing("chi_squared", floor=1e-12)
    assert np.all(table.column("chi_squared") <= table.column("tail_bound") * (1 + 1e-12))


def test_convergence_report_outside_disk():
    """Test that a squeeze leaving the disk is rejected."""
    with pytest.raises(OutOfDomainError):
        disk_convergence_report(0.5, 3.0, 0.6, [10, 20])


def test_convergence_table_helpers():
    """Test column access, monotonicity and record export."""
    table = ConvergenceTable(["k", "err"], [(1, 1.0), (2, 0.5), (4, 1e-14), (8, 2e-14)])
    assert table.column("err")[1] == 0.5
    assert table.is_decreasing("err", floor=1e-12)
    assert not table.is_decreasing("err")
    assert table.to_records()[0] == {"k": 1, "err": 1.0}
