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
Unit tests for section bases, Gram matrices and orthonormalization.

"""
import math

import numpy as np
import pytest

from cstate_lab.models import disk_model
from cstate_lab.quantization import (
    DegenerateBasisError,
    DimensionMismatchError,
    InvalidArgumentError,
    OutOfDomainError,
    cpn_model,
    eval_basis,
    gram_matrix,
    inner_product,
    monomial_basis,
    multinomial_normalization,
    orthonormalize,
    orthonormalize_subspace,
)
from cstate_lab.quantization.hilbert import quadrature_inner_product


@pytest.mark.parametrize("n,k", [(1, 1), (1, 4), (2, 1), (2, 3)])
def test_monomial_basis_size(n, k):
    """Test that there are C(n + k, n) monomials of degree at most k."""
    basis = monomial_basis(n, k)
    assert len(basis) == math.comb(n + k, n)
    assert all(sum(alpha) <= k for alpha in basis)
    assert basis[0] == (0,) * n


def test_monomial_basis_rejects_invalid_input():
    """Test that n < 1 is rejected."""
    with pytest.raises(InvalidArgumentError):
        monomial_basis(0, 2)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_multinomial_normalization_cp1(k):
    """Test the CP^1 constants sqrt((k + 1) C(k, a))."""
    expected = [math.sqrt((k + 1) * math.comb(k, a)) for a in range(k + 1)]
    assert np.allclose(multinomial_normalization(1, k), expected)


@pytest.mark.parametrize("n,k", [(1, 1), (1, 3), (2, 1), (2, 2)])
def test_cpn_model_is_orthonormal(n, k):
    """Test that the orthonormal basis has identity Gram matrix under the rule."""
    model = cpn_model(n, k)
    assert model.dim == math.comb(n + k, n)
    assert model.orthonormality_deviation() < 1e-10


@pytest.mark.parametrize("n,k", [(1, 3), (2, 2)])
def test_cpn_transform_matches_closed_form(n, k):
    """Test that the computed transform equals the multinomial constants."""
    model = cpn_model(n, k)
    assert np.allclose(np.abs(np.diag(model.ortho_transform)), multinomial_normalization(n, k))


def test_orthonormality_under_finer_rule(cp1_k2):
    """Test the basis against a rule with more nodes than needed."""
    finer = cpn_model(1, 2, radial_order=12, angular_order=16).rule
    assert cp1_k2.orthonormality_deviation(finer) < 1e-10


def test_gram_matrix_is_hermitian(cp2_k1):
    """Test Hermitian symmetry of the raw Gram matrix."""
    gram = gram_matrix(cp2_k1)
    assert np.allclose(gram, gram.conj().T)


def test_orthonormalize_inverts_gram():
    """Test T^H G T = I for a positive-definite matrix."""
    rng = np.random.default_rng(3)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    gram = a.conj().T @ a + 0.1 * np.eye(4)
    t = orthonormalize(gram)
    assert np.allclose(t.conj().T @ gram @ t, np.eye(4))
    assert np.allclose(np.tril(t, -1), 0)


def test_orthonormalize_reports_degenerate_index():
    """Test that a rank-deficient Gram matrix raises with the pivot index."""
    v = np.array([1.0, 1.0, 0.5])
    gram = np.outer(v, v) + np.diag([0.0, 0.0, 1.0])
    with pytest.raises(DegenerateBasisError) as excinfo:
        orthonormalize(gram)
    assert excinfo.value.index == 1


def test_orthonormalize_subspace_rank():
    """Test that the subspace basis keeps the positive-rank directions."""
    v = np.array([1.0, 2.0, 0.0])
    gram = np.outer(v, v) + np.diag([0.0, 0.0, 3.0])
    basis = orthonormalize_subspace(gram)
    assert basis.rank == 2
    assert basis.discarded.shape == (3, 1)
    assert np.allclose(basis.transform.conj().T @ gram @ basis.transform, np.eye(2))


def test_eval_basis_cp1(cp1_k2):
    """Test the basis values and metric weight at one point."""
    z = 0.4 - 0.2j
    values, weight = eval_basis(cp1_k2, z)
    assert weight == pytest.approx((1 + abs(z) ** 2) ** -2)
    expected = multinomial_normalization(1, 2) * np.array([1, z, z**2])
    assert np.allclose(np.abs(values), np.abs(expected))


def test_eval_basis_outside_disk():
    """Test that disk model points must lie inside the unit disk."""
    model = disk_model(0.5, 6)
    with pytest.raises(OutOfDomainError):
        eval_basis(model, 1.2)


def test_inner_product_dimension_mismatch(cp1_k2):
    """Test that coefficient vectors must match the model dimension."""
    with pytest.raises(DimensionMismatchError):
        inner_product(cp1_k2, np.ones(3), np.ones(4))


def test_quadrature_inner_product_matches_coefficients(cp2_k1):
    """Test that the quadrature inner product equals the coefficient inner product."""
    rng = np.random.default_rng(11)
    s1 = rng.normal(size=3) + 1j * rng.normal(size=3)
    s2 = rng.normal(size=3) + 1j * rng.normal(size=3)
    direct = inner_product(cp2_k1, s1, s2)
    assert quadrature_inner_product(cp2_k1, s1, s2) == pytest.approx(direct, abs=1e-10)


def test_model_sampling_avoids_excluded_set(cp1_k2):
    """Test that sampled points lie off the base section zero set."""
    points = cp1_k2.sample(np.random.default_rng(0), 25)
    assert points.shape == (25, 1)
    assert np.all(cp1_k2.off_base_zero(points))
