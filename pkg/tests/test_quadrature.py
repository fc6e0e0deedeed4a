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
Unit tests for the quadrature rules on the circle, torus, CP^n chart and disk.

"""
import numpy as np
import pytest

from cstate_lab.quantization import (
    InvalidArgumentError,
    NumericalFailureError,
    QuadratureRule,
    UnsupportedDimensionError,
    circle_rule,
    cpn_chart_rule,
    disk_rule,
    integrate,
    torus_rule,
)


@pytest.mark.parametrize("m", [1, 5, 64])
def test_circle_rule_unit_mass(m):
    """Test that the circle rule has m equal weights summing to one."""
    rule = circle_rule(m)
    assert rule.size == m
    assert rule.mass == pytest.approx(1.0)
    assert rule.domain == "circle"
    assert np.allclose(rule.weights, 1.0 / m)


def test_circle_rule_integrates_fourier_modes():
    """Test that exp(i j theta) integrates to zero for 0 < |j| < m."""
    rule = circle_rule(8)
    for j in range(1, 8):
        value = integrate(rule, lambda nodes, j=j: np.exp(1j * j * nodes[:, 0]))
        assert abs(value) < 1e-14


def test_torus_rule_is_product():
    """Test the node count and domain tag of the torus rule."""
    rule = torus_rule(6, 2)
    assert rule.size == 36
    assert rule.nodes.shape == (36, 2)
    assert rule.domain == "torus(2)"
    assert rule.mass == pytest.approx(1.0)


@pytest.mark.parametrize("n", [1, 2])
def test_cpn_chart_rule_unit_mass(n):
    """Test that the chart rule carries the normalized Fubini-Study volume."""
    rule = cpn_chart_rule(n, 5, 8)
    assert rule.mass == pytest.approx(1.0)
    assert rule.domain == f"cpn-chart({n})"
    assert rule.nodes.shape[1] == n


def test_cpn_chart_rule_moment():
    """Test the volume moment of |z|^2 / (1 + |z|^2) on CP^1, which equals 1/2."""
    rule = cpn_chart_rule(1, 4, 4)
    value = integrate(rule, lambda z: np.abs(z[:, 0]) ** 2 / (1 + np.abs(z[:, 0]) ** 2))
    assert value.real == pytest.approx(0.5)


def test_cpn_chart_rule_rejects_large_dimension():
    """Test that charts beyond CP^2 are rejected."""
    with pytest.raises(UnsupportedDimensionError):
        cpn_chart_rule(3, 4, 4)


@pytest.mark.parametrize("radial,angular", [(0, 4), (4, 0), (2.5, 4)])
def test_rule_orders_must_be_positive_integers(radial, angular):
    """Test that invalid quadrature orders raise an error."""
    with pytest.raises(InvalidArgumentError):
        cpn_chart_rule(1, radial, angular)


@pytest.mark.parametrize("hbar", [0.5, 0.25, 0.1])
def test_disk_rule_total_mass(hbar):
    """Test that the disk rule integrates the weighted measure to one."""
    rule = disk_rule(6, 8, hbar)
    assert rule.mass == pytest.approx(1.0)
    assert np.all(np.abs(rule.nodes) < 1.0)


@pytest.mark.parametrize("hbar", [1.0, 2.0, 0.0])
def test_disk_rule_requires_small_hbar(hbar):
    """Test that 1/hbar <= 1 is rejected."""
    with pytest.raises(InvalidArgumentError):
        disk_rule(4, 4, hbar)


def test_rule_rejects_nonpositive_weights():
    """Test that a rule with a zero weight cannot be built."""
    with pytest.raises(InvalidArgumentError):
        QuadratureRule(np.zeros((2, 1)), np.array([1.0, 0.0]), "circle")


def test_rule_rejects_length_mismatch():
    """Test that node and weight counts must agree."""
    with pytest.raises(InvalidArgumentError):
        QuadratureRule(np.zeros((3, 1)), np.ones(2) / 2, "circle")


def test_restrict_keeps_selected_nodes():
    """Test restriction of a rule to a node mask."""
    rule = circle_rule(4)
    sub = rule.restrict(np.array([True, False, True, False]))
    assert sub.size == 2
    assert sub.mass == pytest.approx(0.5)


def test_integrate_reports_nonfinite_node():
    """Test that a non-finite integrand raises with the node index."""
    rule = circle_rule(4)

    def integrand(nodes):
        values = np.ones(nodes.shape[0])
        values[2] = np.nan
        return values

    with pytest.raises(NumericalFailureError) as excinfo:
        integrate(rule, integrand)
    assert excinfo.value.node_index == 2
