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
Module for su(n+1) generators, their structure constants and moment maps on the
CP^n chart.

The basis is ``lambda_j = -i X_j`` with ``X_j`` the generalized Gell-Mann matrices
divided by two, so that for su(2) ``[lambda_x, lambda_y] = lambda_z``. The moment
map of ``lambda`` at the chart point ``z`` with ``W = (1, z)`` is

    tau_lambda(z) = -i W^H lambda W / W^H W.

"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import lstsq

from .exceptions import InvalidGeneratorError

GENERATOR_TOL = 1e-12


@dataclass(frozen=True)
class LieGenerator:
    """Traceless anti-Hermitian matrix in su(n+1).

    Raises:
        InvalidGeneratorError: If the matrix is not square, not anti-Hermitian or has
            nonzero trace.
    """

    matrix: np.ndarray
    name: str = ""
    n: int = field(init=False)

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 2:
            raise InvalidGeneratorError(f"Generator must be a square matrix, got {matrix.shape}.")
        if np.max(np.abs(matrix + matrix.conj().T)) > GENERATOR_TOL:
            raise InvalidGeneratorError(f"Generator '{self.name}' is not anti-Hermitian.")
        if abs(np.trace(matrix)) > GENERATOR_TOL:
            raise InvalidGeneratorError(
                f"Generator '{self.name}' has trace {np.trace(matrix):.3e}; "
                "central directions are excluded."
            )
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "n", matrix.shape[0] - 1)

    def __matmul__(self, other):
        return self.matrix @ np.asarray(getattr(other, "matrix", other))


def gell_mann_matrices(size: int) -> list[np.ndarray]:
    """Generalized Gell-Mann matrices of ``size x size``: symmetric, antisymmetric, diagonal.

    For ``size = 2`` these are the Pauli matrices in the order x, y, z.
    """
    if size < 2:
        raise InvalidGeneratorError(f"Need matrices of size at least 2, got {size}.")
    symmetric, antisymmetric, diagonal = [], [], []
    for j in range(size):
        for l in range(j + 1, size):
            s = np.zeros((size, size), dtype=np.complex128)
            s[j, l] = s[l, j] = 1
            a = np.zeros((size, size), dtype=np.complex128)
            a[j, l], a[l, j] = -1j, 1j
            symmetric.append(s)
            antisymmetric.append(a)
    for l in range(1, size):
        d = np.zeros((size, size), dtype=np.complex128)
        d[np.arange(l), np.arange(l)] = 1
        d[l, l] = -l
        diagonal.append(np.sqrt(2.0 / (l * (l + 1))) * d)
    if size == 2:
        return [symmetric[0], antisymmetric[0], diagonal[0]]
    return symmetric + antisymmetric + diagonal


def su_basis(n: int) -> list[LieGenerator]:
    """Basis ``lambda_j = -i X_j / 2`` of su(n+1); for n = 1 named x, y, z."""
    names = ["x", "y", "z"] if n == 1 else None
    return [
        LieGenerator(-0.5j * x, names[j] if names else f"l{j + 1}")
        for j, x in enumerate(gell_mann_matrices(n + 1))
    ]


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Compute the commutator of two matrices."""
    return a @ b - b @ a


def structure_constants(basis: list[LieGenerator]) -> np.ndarray:
    """Constants ``a[i, j, l]`` with ``[lambda_i, lambda_j] = sum_l a[i, j, l] lambda_l``.

    Solved by least squares on the flattened matrices; real for a real basis of su(n+1).
    """
    flat = np.column_stack([g.matrix.reshape(-1) for g in basis])
    size = len(basis)
    constants = np.zeros((size, size, size))
    for i in range(size):
        for j in range(size):
            target = commutator(basis[i].matrix, basis[j].matrix).reshape(-1)
            solution, *_ = lstsq(flat, target)
            constants[i, j] = solution.real
    return constants


def _homogeneous(z) -> tuple[np.ndarray, float]:
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    w = np.concatenate([[1.0 + 0j], z])
    return w, float(np.vdot(w, w).real)


def moment_map(gen: LieGenerator, z) -> float:
    """Moment map component ``tau_lambda(z)``."""
    w, norm = _homogeneous(z)
    return float((-1j * np.vdot(w, gen.matrix @ w) / norm).real)


def moment_map_wirtinger(gen: LieGenerator, z) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form ``(d tau / dz, d tau / dconj(z))`` of the moment map."""
    w, norm = _homogeneous(z)
    lam = gen.matrix
    value = np.vdot(w, lam @ w)
    dz = -1j * ((w.conj() @ lam)[1:] / norm - value * w[1:].conj() / norm**2)
    dzbar = -1j * ((lam @ w)[1:] / norm - value * w[1:] / norm**2)
    return dz, dzbar


def fundamental_vector_field(gen: LieGenerator, z) -> np.ndarray:
    """Holomorphic components ``xi_i`` of the vector field generated by ``lambda``.

    The flow is ``W -> exp(-t lambda) W`` in homogeneous coordinates, read in the chart.
    """
    w, _ = _homogeneous(z)
    velocity = -gen.matrix @ w
    return velocity[1:] - w[1:] * velocity[0]


def directional_derivative(gen: LieGenerator, other: LieGenerator, z) -> float:
    """Derivative of ``tau_other`` along the vector field of ``gen``."""
    xi = fundamental_vector_field(gen, z)
    dz, _ = moment_map_wirtinger(other, z)
    return float(2.0 * np.real(np.sum(dz * xi)))
