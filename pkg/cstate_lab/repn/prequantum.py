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
Module for prequantum operators of su(n+1) generators on the sections of the k-th
power of the hyperplane bundle over CP^n.

Sections are identified with homogeneous polynomials of degree ``k`` in
``Z = (Z_0, ..., Z_n)``; the chart monomial ``z^alpha`` corresponds to
``Z^beta`` with ``beta = (k - |alpha|, alpha)``. A matrix ``M`` acts by the
derivation

    rho(M) Z^beta = -sum_ab M_ab beta_a Z^(beta - e_a + e_b),

which is a Lie algebra homomorphism. The prequantum operator of ``lambda`` is the
Hermitian ``i rho(lambda)``; its covariant symbol is ``k tau_lambda``.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..quantization.exceptions import InvalidArgumentError, UnsupportedDimensionError
from ..quantization.hilbert import (
    QuantModel,
    monomial_basis,
    monomials,
    multinomial_normalization,
)
from .generators import (
    LieGenerator,
    commutator,
    directional_derivative,
    fundamental_vector_field,
    moment_map,
    structure_constants,
    su_basis,
)

logger = logging.getLogger(__name__)

SUPPORTED_DIMENSIONS = [1, 2]


def homogeneous_exponents(n: int, k: int) -> list[tuple[int, ...]]:
    """Exponents ``beta`` of degree-k homogeneous monomials, in chart-basis order."""
    return [(k - sum(alpha),) + alpha for alpha in monomial_basis(n, k)]


def basis_transform(n: int, k: int, model: Optional[QuantModel] = None) -> np.ndarray:
    """Matrix ``T`` with orthonormal basis ``psi = monomials @ T``.

    Uses the model's transform when given, else the closed-form multinomial constants.
    """
    if model is not None:
        if model.exponents is None or len(model.exponents) != model.raw_dim:
            raise InvalidArgumentError(f"Model '{model.name}' has no monomial raw basis.")
        if model.exponents != monomial_basis(n, k):
            raise InvalidArgumentError(f"Model '{model.name}' is not a CP^{n} model at k={k}.")
        return model.ortho_transform
    return np.diag(multinomial_normalization(n, k)).astype(np.complex128)


def raw_representation(matrix: np.ndarray, n: int, k: int) -> np.ndarray:
    """``rho(M)`` on the homogeneous monomial basis, for any ``(n+1) x (n+1)`` matrix."""
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.shape != (n + 1, n + 1):
        raise InvalidArgumentError(f"Expected a {n + 1}x{n + 1} matrix, got {matrix.shape}.")
    exponents = homogeneous_exponents(n, k)
    index = {beta: i for i, beta in enumerate(exponents)}
    rep = np.zeros((len(exponents), len(exponents)), dtype=np.complex128)
    for col, beta in enumerate(exponents):
        for a in range(n + 1):
            if beta[a] == 0:
                continue
            for b in range(n + 1):
                if matrix[a, b] == 0:
                    continue
                target = list(beta)
                target[a] -= 1
                target[b] += 1
                rep[index[tuple(target)], col] -= matrix[a, b] * beta[a]
    return rep


def _check_dimension(n: int, k: int) -> None:
    if n not in SUPPORTED_DIMENSIONS:
        raise UnsupportedDimensionError(
            f"Dimension n={n} is not supported. Supported dimensions are: {SUPPORTED_DIMENSIONS}"
        )
    if k < 1:
        raise InvalidArgumentError(f"Bundle power must be at least 1, got {k}.")


def to_orthonormal(raw: np.ndarray, transform: np.ndarray) -> np.ndarray:
    """Change of basis ``T^{-1} R T`` from monomials to the orthonormal basis."""
    return np.linalg.solve(transform, raw @ transform)


def represented_generator(
    gen: LieGenerator, n: int, k: int, model: Optional[QuantModel] = None
) -> np.ndarray:
    """Anti-Hermitian ``rho(lambda)`` in the orthonormal basis."""
    _check_dimension(n, k)
    if gen.n != n:
        raise InvalidArgumentError(f"Generator of su({gen.n + 1}) does not act on CP^{n}.")
    return to_orthonormal(raw_representation(gen.matrix, n, k), basis_transform(n, k, model))


def prequantum_op(gen: LieGenerator, n: int, k: int, model: Optional[QuantModel] = None):
    """Hermitian prequantum operator ``i rho(lambda)`` in the orthonormal basis.

    For n = 1 and ``lambda_z`` its spectrum is the spin-``k/2`` ladder
    ``{-k/2, ..., k/2}``.

    Args:
        gen (LieGenerator): Element of su(n+1).
        n (int): Chart dimension, 1 or 2.
        k (int): Bundle power.
        model (QuantModel, optional): CP^n model supplying the orthonormal basis.

    Raises:
        InvalidGeneratorError: If ``gen`` is not in su(n+1).
        UnsupportedDimensionError: If ``n`` is not supported.
    """
    return 1j * represented_generator(gen, n, k, model)


def commutation_report(n: int, k: int, model: Optional[QuantModel] = None) -> float:
    """Max deviation of ``[rho_i, rho_j] - sum_l a_ij^l rho_l`` over the su(n+1) basis."""
    basis = su_basis(n)
    constants = structure_constants(basis)
    reps = np.array([represented_generator(g, n, k, model) for g in basis])
    deviation = 0.0
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            expected = np.tensordot(constants[i, j], reps, axes=1)
            diff = commutator(reps[i], reps[j]) - expected
            deviation = max(deviation, float(np.max(np.abs(diff))))
    logger.debug("Commutation deviation for n=%d, k=%d: %.3e", n, k, deviation)
    return deviation


@dataclass(frozen=True)
class KahlerChartData:
    """Chart data of the prequantum line bundle on CP^n.

    In the symmetric gauge the connection is ``Theta^{1,0} = i sum h_i dz_i`` and
    ``Theta^{0,1} = i sum g_i dconj(z)_i`` with

        h_i = i (k/2) conj(z_i) / (1 + |z|^2),   g_i = -i (k/2) z_i / (1 + |z|^2).

    In this gauge a section is its unitary-frame value ``u = f h^(1/2)`` and the
    prequantum action of ``lambda`` is ``X(u) + Theta(X) u - i k tau_lambda u`` with
    ``X`` the fundamental vector field. It agrees with ``rho(lambda)``.
    """

    n: int
    k: int

    def _chart(self, z) -> tuple[np.ndarray, float]:
        z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
        if z.size != self.n:
            raise InvalidArgumentError(f"Expected a point of C^{self.n}, got {z.size} coordinates.")
        return z, 1.0 + float(np.vdot(z, z).real)

    def h(self, z) -> np.ndarray:
        """Components of ``Theta^{1,0}``."""
        z, norm = self._chart(z)
        return 0.5j * self.k * z.conj() / norm

    def g(self, z) -> np.ndarray:
        """Components of ``Theta^{0,1}``."""
        z, norm = self._chart(z)
        return -0.5j * self.k * z / norm

    def unitarity_deviation(self, z) -> float:
        """``max |conj(h_i) - g_i|``, zero for a unitary connection."""
        return float(np.max(np.abs(self.h(z).conj() - self.g(z))))

    def hamiltonian(self, gen: LieGenerator, z) -> float:
        """``k tau_lambda(z)``, the symbol of the prequantum operator."""
        return self.k * moment_map(gen, z)

    def vector_field(self, gen: LieGenerator, z) -> np.ndarray:
        """Holomorphic part of the fundamental vector field of ``gen``."""
        return fundamental_vector_field(gen, self._chart(z)[0])

    def sqrt_weight(self, z) -> tuple[float, np.ndarray, np.ndarray]:
        """``(1 + |z|^2)^(-k/2)`` with its derivatives along ``z`` and ``conj(z)``."""
        z, norm = self._chart(z)
        root = norm ** (-0.5 * self.k)
        factor = -0.5 * self.k * root / norm
        return root, factor * z.conj(), factor * z

    def prequantum_action(
        self, gen: LieGenerator, z, transform: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray]:
        """Unitary-frame values of the basis ``psi = monomials @ transform`` at ``z``.

        Returns:
            tuple[np.ndarray, np.ndarray]: ``u_j(z)`` and the prequantum action
            ``X(u_j) + Theta(X) u_j - i k tau u_j`` at ``z``, one entry per basis element.
        """
        z, _ = self._chart(z)
        exponents = np.asarray(monomial_basis(self.n, self.k), dtype=int)
        f = monomials(z[None, :], exponents)[0] @ transform
        df = np.empty((self.n, transform.shape[1]), dtype=np.complex128)
        for i in range(self.n):
            lowered = exponents.copy()
            lowered[:, i] = np.maximum(lowered[:, i] - 1, 0)
            df[i] = (exponents[:, i] * monomials(z[None, :], lowered)[0]) @ transform

        root, droot, droot_bar = self.sqrt_weight(z)
        u = root * f
        du = root * df + droot[:, None] * f
        du_bar = droot_bar[:, None] * f
        xi = self.vector_field(gen, z)
        theta = 1j * np.dot(self.h(z), xi) + 1j * np.dot(self.g(z), xi.conj())
        action = xi @ du + xi.conj() @ du_bar + (theta - 1j * self.hamiltonian(gen, z)) * u
        return u, action


def kostant_report(n: int, k: int, points, model: Optional[QuantModel] = None) -> float:
    """Max of ``|(nabla_X - i k tau) psi_j - (rho psi_j)|`` at chart points in the unitary frame.

    The left side is evaluated pointwise from the connection of :class:`KahlerChartData`;
    the right side is the matrix ``rho(lambda)`` applied to the basis values.
    """
    _check_dimension(n, k)
    data = KahlerChartData(n, k)
    transform = basis_transform(n, k, model)
    reps = [(gen, represented_generator(gen, n, k, model)) for gen in su_basis(n)]
    deviation = 0.0
    for z in np.atleast_2d(np.asarray(points, dtype=np.complex128)):
        for gen, rep in reps:
            u, action = data.prequantum_action(gen, z, transform)
            deviation = max(deviation, float(np.max(np.abs(action - u @ rep))))
    logger.debug("Kostant formula deviation for n=%d, k=%d: %.3e", n, k, deviation)
    return deviation


def equivariance_report(n: int, points) -> float:
    """Max of ``|lambda_i^#(tau_j) - tau_[lambda_i, lambda_j]|`` over the basis and points."""
    basis = su_basis(n)
    deviation = 0.0
    for z in np.atleast_2d(np.asarray(points, dtype=np.complex128)):
        for gi in basis:
            for gj in basis:
                bracket = LieGenerator(commutator(gi.matrix, gj.matrix))
                value = directional_derivative(gi, gj, z) - moment_map(bracket, z)
                deviation = max(deviation, abs(value))
    return deviation
