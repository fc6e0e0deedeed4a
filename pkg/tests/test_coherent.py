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
Unit tests for Rawnsley coherent states and their verification report.

"""
from dataclasses import replace

import numpy as np
import pytest

from cstate_lab.quantization import (
    BaseSectionZeroError,
    CheckResult,
    VerificationReport,
    cpn_model,
)
from cstate_lab.states import (
    chi_squared,
    coherent_batch,
    coherent_state,
    evaluate_section,
    overcompleteness,
    overlap,
    resolution_matrix,
    verify_coherent,
)


@pytest.mark.parametrize("mu", [0.0, 0.3 + 0.1j, -1.5 + 2.0j])
def test_coherent_state_is_normalized(cp1_k2, mu):
    """Test that coherent states have unit norm and |tau| = chi."""
    state = coherent_state(cp1_k2, mu)
    assert state.norm == pytest.approx(1.0)
    assert abs(state.tau_mu) == pytest.approx(state.chi_mu)
    assert state.chi_mu > 0


@pytest.mark.parametrize("k", [1, 2, 3])
def test_chi_squared_constant_on_cp1(k):
    """Test that chi^2 equals k + 1 everywhere on CP^1."""
    assert chi_squared(cpn_model(1, k), 0.7 - 0.4j) == pytest.approx(k + 1)


def test_chi_squared_constant_on_cp2(cp2_k1):
    """Test that chi^2 equals the dimension on CP^2."""
    assert chi_squared(cp2_k1, [0.2 + 0.1j, -0.5j]) == pytest.approx(3.0)


def test_coherent_state_at_origin_is_base_section(cp1_k2):
    """Test that the coherent state at the origin is the first basis vector."""
    state = coherent_state(cp1_k2, 0.0)
    assert abs(state.coeffs[0]) == pytest.approx(1.0)
    assert np.allclose(state.coeffs[1:], 0)


def test_maximal_likelihood_at_own_point(cp1_k2):
    """Test |phi_mu(mu)|^2 = chi(mu)^2 in the unitary frame."""
    mu = 0.5 + 0.25j
    state = coherent_state(cp1_k2, mu)
    value = evaluate_section(cp1_k2, state.coeffs, [mu])[0]
    assert abs(value) ** 2 == pytest.approx(state.chi_mu**2)


def test_overlap_formula_agrees(cp2_k1):
    """Test that g(mu)/p(mu) matches the coefficient inner product."""
    rng = np.random.default_rng(5)
    phi = rng.normal(size=3) + 1j * rng.normal(size=3)
    phi /= np.linalg.norm(phi)
    result = overlap(cp2_k1, [0.3, 0.1 - 0.2j], phi)
    assert result.deviation < 1e-12


def test_resolution_of_identity(cp1_k2, cp2_k1):
    """Test that coherent projectors integrate to the identity."""
    for model in (cp1_k2, cp2_k1):
        assert np.allclose(resolution_matrix(model), np.eye(model.dim), atol=1e-10)


@pytest.mark.parametrize("scale", [2.0 - 1.0j, -0.5, 3j])
def test_base_section_scale_changes_phase_only(cp2_k1, scale):
    """Test that rescaling the base section multiplies coherent states by its phase."""
    scaled = replace(cp2_k1, s0_scale=scale)
    points = np.array([[0.1 + 0.2j, -0.4j], [0.7, 0.3 - 0.3j]])
    before = coherent_batch(cp2_k1, points)
    after = coherent_batch(scaled, points)
    phase = scale / abs(scale)
    assert np.allclose(after.coeffs * np.conj(phase), before.coeffs, atol=1e-14)
    assert np.allclose(after.chi, before.chi)
    assert np.allclose(after.tau, phase * before.tau)


def test_overcompleteness_is_judged_by_rank(cp1_k2, small_config):
    """Test the rank verdict and the smallest singular value record."""
    report = verify_coherent(cp1_k2, small_config)
    assert report["overcompleteness"].value == cp1_k2.dim
    assert report["overcompleteness"].passed
    assert report["overcompleteness_min_singular"].passed


def test_overcompleteness_with_few_points(cp1_k2):
    """Test that fewer points than the dimension leave zero singular values."""
    sigma = overcompleteness(cp1_k2, [0.1, 0.4j])
    assert sigma.shape == (3,)
    assert sigma[-1] == 0
    assert sigma[0] > 0


def test_batch_matches_single_states(cp2_k1):
    """Test that the batch rows equal the single-point records."""
    points = np.array([[0.1, 0.2j], [-0.3, 0.4]])
    batch = coherent_batch(cp2_k1, points)
    for index, point in enumerate(points):
        assert np.allclose(batch.record(index).coeffs, coherent_state(cp2_k1, point).coeffs)


def test_base_section_zero_is_reported():
    """Test that points far out on the chart hit the exclusion threshold."""
    with pytest.raises(BaseSectionZeroError):
        coherent_state(cpn_model(1, 4), 1e4)


@pytest.mark.parametrize("n,k", [(1, 2), (2, 1)])
def test_verify_coherent_passes(n, k, small_config):
    """Test that every coherent-state check passes on CP^n."""
    report = verify_coherent(cpn_model(n, k), small_config)
    assert report.passed, [check.name for check in report.failures]
    for name in (
        "normalization",
        "overlap_formula",
        "maximal_likelihood",
        "maximal_likelihood_equality",
        "dominance",
        "reproducing_kernel",
        "resolution_of_identity",
        "overcompleteness",
        "overcompleteness_min_singular",
    ):
        assert name in report


def test_report_rejects_duplicate_names():
    """Test that a report keeps check names unique."""
    report = VerificationReport("demo")
    report.add(CheckResult.bound("a", 0.0, 1.0))
    with pytest.raises(ValueError):
        report.add(CheckResult.info("a", 1.0))


def test_report_verdict_ignores_informational_records():
    """Test that info and skipped records do not affect the verdict."""
    report = VerificationReport("demo")
    report.add(CheckResult.bound("ok", 0.5, 1.0))
    report.add(CheckResult.info("note", float("nan")))
    report.add(CheckResult.skipped("later", "not applicable"))
    assert report.passed
    report.add(CheckResult.floor("sigma", 1e-12, 1e-8))
    assert not report.passed
    assert [check.name for check in report.failures] == ["sigma"]
    assert report["note"].to_dict()["value"] == "nan"
