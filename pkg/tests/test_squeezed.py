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
Unit tests for squeezed states of the first and second type.

"""
import numpy as np
import pytest

from cstate_lab.models import disk_model
from cstate_lab.quantization import ComplexChart, InvalidArgumentError, OutOfDomainError
from cstate_lab.states import (
    SqueezeParams,
    b_matrix,
    coherent_state,
    reality_deviation,
    squeeze_point,
    squeezed_I,
    squeezed_II,
    verify_coherent,
    verify_squeezed,
)
from cstate_lab.states.squeezed import squeeze_points, squeezed_coverage


def test_squeeze_point_scales_imaginary_part():
    """Test that squeezing keeps the real part and scales the imaginary part."""
    assert squeeze_point([0.3 + 0.4j], 0.5)[0] == pytest.approx(0.3 + 0.2j)


def test_squeeze_point_leaving_disk():
    """Test that a squeeze out of the unit disk raises an error."""
    with pytest.raises(OutOfDomainError):
        squeeze_point([0.5 + 0.5j], 1.8, ComplexChart(1, radius=1.0))


def test_squeeze_points_mask():
    """Test the inside mask of a batch squeeze."""
    chart = ComplexChart(1, radius=1.0)
    _, inside = squeeze_points(np.array([[0.1 + 0.5j], [0.2 + 0.9j]]), 1.5, chart)
    assert inside.tolist() == [True, False]


def test_type_one_at_unit_factor_is_coherent(cp1_k2):
    """Test that the type-I state at zeta = 1 is the coherent state."""
    mu = 0.4 - 0.3j
    assert np.allclose(squeezed_I(cp1_k2, mu, 1.0).coeffs, coherent_state(cp1_k2, mu).coeffs)


def test_type_one_is_coherent_at_squeezed_point(cp2_k1):
    """Test that the type-I state is the coherent state at mu_zeta."""
    mu = np.array([0.2 + 0.6j, -0.1 + 0.2j])
    state = squeezed_I(cp2_k1, mu, 0.25)
    target = coherent_state(cp2_k1, mu.real + 0.25j * mu.imag)
    assert np.allclose(state.coeffs, target.coeffs)


def test_b_matrix_at_unit_factor_is_identity(cp1_k2):
    """Test that the expansion matrix is the identity for zeta = 1."""
    bmat = b_matrix(cp1_k2, 1.0)
    assert np.array_equal(bmat.entries, np.eye(3))
    assert bmat.residual == 0
    assert bmat.is_hermitian


def test_b_matrix_on_disk_outside_domain():
    """Test that expanding squeezes leave the disk and are reported."""
    model = disk_model(0.5, 8)
    with pytest.raises(OutOfDomainError):
        b_matrix(model, 4.0)


def test_type_two_at_unit_factor_is_coherent(cp1_k2):
    """Test that the type-II state at zeta = 1 reduces to the coherent state."""
    mu = 0.35 + 0.15j
    state = squeezed_II(cp1_k2, mu, 1.0)
    assert state.residual == 0
    assert np.allclose(state.coeffs, coherent_state(cp1_k2, mu).coeffs)
    assert state.norm == pytest.approx(1.0)


def test_reality_condition_on_cpn(cp1_k2):
    """Test that the CP^1 basis has real coefficients in the unitary frame."""
    assert reality_deviation(cp1_k2, cp1_k2.rule.nodes) < 1e-12


def test_coverage_of_complex_chart(cp1_k2):
    """Test that every squeeze factor reaches the whole complex chart."""
    assert squeezed_coverage(cp1_k2, 0.3) == pytest.approx(1.0)


def test_coverage_of_disk_contraction():
    """Test that a contracting squeeze misses part of the disk."""
    model = disk_model(0.5, 6)
    assert squeezed_coverage(model, 0.5) < 1.0


def test_verify_squeezed_records(cp1_k2, small_config):
    """Test the type-I records of the squeezed-state report."""
    report = verify_squeezed(cp1_k2, 0.5, small_config)
    for name in (
        "normalization",
        "maximal_likelihood",
        "dominance",
        "reproducing_kernel",
        "resolution_of_identity",
        "reality_condition",
    ):
        assert report[name].passed, name
    assert report["squeezed_coverage"].value == pytest.approx(1.0)
    assert "b_matrix_residual" in report


def test_verify_squeezed_skips_resolution_on_disk(small_config):
    """Test that an incomplete squeeze image skips the resolution of identity."""
    report = verify_squeezed(disk_model(0.5, 10), 0.5, small_config)
    assert report["resolution_of_identity"].passed is None
    assert report["resolution_of_identity"].note.startswith("skipped")


def test_unit_factor_reproduces_coherent_report(cp1_k2, small_config):
    """Test that zeta = 1 yields the coherent-state values."""
    squeezed = verify_squeezed(cp1_k2, 1.0, small_config)
    coherent = verify_coherent(cp1_k2, small_config)
    for name in ("normalization", "maximal_likelihood", "reproducing_kernel", "dominance"):
        assert squeezed[name].value == pytest.approx(coherent[name].value, abs=1e-15)


@pytest.mark.parametrize("zeta", [0.25, 0.5, 2.0])
def test_verify_squeezed_on_disk(disk_40, zeta, small_config):
    """Test the type-I properties and overcompleteness on the disk."""
    report = verify_squeezed(disk_40, zeta, small_config)
    for name in (
        "normalization",
        "overlap_formula",
        "maximal_likelihood",
        "maximal_likelihood_equality",
        "dominance",
        "reproducing_kernel",
        "overcompleteness",
    ):
        assert report[name].passed, name
    assert report["overcompleteness"].value == 40
    assert report["overcompleteness_min_singular"].passed is None


def test_b_matrix_at_zero_factor_has_residual():
    """Test that collapsing onto the real axis is not a holomorphic expansion."""
    bmat = b_matrix(disk_model(0.5, 8), 0.0)
    assert bmat.residual > 0.1
    assert np.all(bmat.residuals >= 0)


def test_squeeze_params_validation():
    """Test that squeeze factors must be finite and non-negative."""
    chart = ComplexChart(1)
    with pytest.raises(InvalidArgumentError):
        SqueezeParams(float("nan"), chart)
    with pytest.raises(InvalidArgumentError):
        SqueezeParams(-1.0, chart)
    squeezed, inside = SqueezeParams(0.0, chart).apply([[1 + 2j]])
    assert squeezed[0, 0] == pytest.approx(1.0)
    assert inside.all()
