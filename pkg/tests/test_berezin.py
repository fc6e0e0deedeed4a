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
Unit tests for CP^n-symbols, star products, lift recovery and the Poisson bracket.

"""
import numpy as np
import pytest

from cstate_lab.berezin import (
    AntipodalPairError,
    NotDeterminingSetError,
    SymbolFunction,
    circle_submanifold,
    cpn_symbol,
    diagonal_symbol,
    lift_recovery,
    lift_samples,
    poisson_fs,
    star_symbol,
    torus_submanifold,
)
from cstate_lab.berezin.poisson import constant_function, product_function
from cstate_lab.quantization import DimensionMismatchError, cpn_model
from cstate_lab.repn import moment_map, prequantum_op, su_basis
from cstate_lab.states import coherent_state


def _random_operator(dim, seed):
    rng = np.random.default_rng(seed)
    return rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))


def test_identity_symbol(cp1_k2):
    """Test that the identity has symbol one at pairs of points."""
    value = cpn_symbol(cp1_k2, np.eye(3), 0.2 + 0.1j, -0.4j)
    assert value.value == pytest.approx(1.0)
    assert np.allclose(diagonal_symbol(cp1_k2, np.eye(3), [[0.1], [2.0 - 1.0j]]), 1.0)


def test_antipodal_pair_is_rejected(cp1_k2):
    """Test that orthogonal coherent states have no symbol."""
    with pytest.raises(AntipodalPairError):
        cpn_symbol(cp1_k2, np.eye(3), 1.0, -1.0)


def test_symbol_operator_shape(cp1_k2):
    """Test that the operator must act on the model's space."""
    with pytest.raises(DimensionMismatchError):
        cpn_symbol(cp1_k2, np.eye(4), 0.1, 0.2)


def test_symbol_is_phase_independent(cp1_k2):
    """Test that the symbol of a rank-one projector matches the squared overlap."""
    rng = np.random.default_rng(1)
    phi = rng.normal(size=3) + 1j * rng.normal(size=3)
    phi /= np.linalg.norm(phi)
    projector = np.outer(phi, phi.conj())
    mu = 0.3 - 0.6j
    expected = abs(np.vdot(coherent_state(cp1_k2, mu).coeffs, phi)) ** 2
    assert diagonal_symbol(cp1_k2, projector, [[mu]])[0] == pytest.approx(expected)


@pytest.mark.parametrize("k", [1, 2, 4])
def test_covariant_symbol_of_prequantum_operator(k):
    """Test that the diagonal symbol of i rho(lambda) is k tau_lambda."""
    model = cpn_model(1, k)
    points = np.array([[0.0], [0.3 + 0.2j], [-1.1 + 0.5j]])
    for gen in su_basis(1):
        symbol = diagonal_symbol(model, prequantum_op(gen, 1, k, model), points)
        exact = [k * moment_map(gen, z) for z in points]
        assert np.allclose(symbol, exact)


def test_covariant_symbol_on_cp2(cp2_k1):
    """Test the covariant symbol of the su(3) prequantum operators."""
    z = np.array([0.2 - 0.1j, 0.4j])
    for gen in su_basis(2):
        symbol = diagonal_symbol(cp2_k1, prequantum_op(gen, 2, 1, cp2_k1), [z])[0]
        assert symbol == pytest.approx(moment_map(gen, z))


def test_star_product_unit_and_associativity(cp1_k3):
    """Test the unit and associativity of the star product."""
    a = _random_operator(4, 2)
    b = _random_operator(4, 3)
    p = 0.25 + 0.5j
    assert star_symbol(cp1_k3, a, np.eye(4), p) == pytest.approx(cpn_symbol(cp1_k3, a, p, p).value)
    left = star_symbol(cp1_k3, a @ b, a, p)
    right = star_symbol(cp1_k3, a, b @ a, p)
    assert left == pytest.approx(right)


def test_lift_round_trip_on_circle(cp1_k2):
    """Test recovery of an operator from its action on the unit circle."""
    a = _random_operator(3, 4)
    sub = circle_submanifold(3)
    recovered, report = lift_recovery(sub, cp1_k2, lift_samples(sub, cp1_k2, a))
    assert np.allclose(recovered, a)
    assert report.determining
    assert report.raw_condition == pytest.approx(1.0)
    assert report.sigma_min == pytest.approx(3.0)
    assert report.residual < 1e-10


def test_lift_round_trip_on_torus(cp2_k1):
    """Test recovery from the Clifford torus in CP^2."""
    a = _random_operator(3, 5)
    sub = torus_submanifold(3)
    assert sub.size == 9
    recovered, report = lift_recovery(sub, cp2_k1, lift_samples(sub, cp2_k1, a))
    assert np.allclose(recovered, a)
    assert report.raw_condition == pytest.approx(1.0)


def test_lift_with_too_few_nodes(cp1_k2):
    """Test that fewer nodes than the dimension are not a determining set."""
    sub = circle_submanifold(2)
    with pytest.raises(NotDeterminingSetError):
        lift_recovery(sub, cp1_k2, np.zeros((2, 3)))


def test_lift_sample_shape(cp1_k2):
    """Test that the sample matrix must match the evaluation matrix."""
    with pytest.raises(DimensionMismatchError):
        lift_recovery(circle_submanifold(4), cp1_k2, np.zeros((3, 3)))


def test_symbol_on_submanifold_parameters(cp1_k2):
    """Test that submanifold parameters are mapped through the embedding."""
    sub = circle_submanifold(8)
    a = _random_operator(3, 6)
    theta = 0.4
    direct = cpn_symbol(cp1_k2, a, np.exp(1j * theta), np.exp(1j * theta)).value
    assert cpn_symbol(cp1_k2, a, [theta], [theta], submanifold=sub).value == pytest.approx(direct)


def test_poisson_bracket_calibration():
    """Test {tau_x, tau_y} = tau_z for the Fubini-Study bracket."""
    x, y, z = su_basis(1)
    fx = SymbolFunction(lambda p: moment_map(x, p))
    fy = SymbolFunction(lambda p: moment_map(y, p))
    for p in (0.0, 0.3 + 0.1j, -0.7 + 1.2j):
        assert poisson_fs(fx, fy, p) == pytest.approx(moment_map(z, p), abs=1e-8)


def test_poisson_bracket_antisymmetry_and_leibniz():
    """Test antisymmetry, constants and the Leibniz rule of the bracket."""
    x, y, z = su_basis(1)
    fx, fy, fz = (SymbolFunction(lambda p, g=g: moment_map(g, p)) for g in (x, y, z))
    p = 0.5 - 0.2j
    assert poisson_fs(fx, fy, p) == pytest.approx(-poisson_fs(fy, fx, p), abs=1e-10)
    assert poisson_fs(constant_function(2.0), fx, p) == pytest.approx(0.0, abs=1e-12)
    lhs = poisson_fs(product_function(fx, fz), fy, p)
    rhs = fx(p) * poisson_fs(fz, fy, p) + fz(p) * poisson_fs(fx, fy, p)
    assert lhs == pytest.approx(rhs, abs=1e-8)
