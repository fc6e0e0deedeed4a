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
Module for the Hilbert spaces of quantization: monomial section bases, Gram
matrices, orthonormalization and the :class:`QuantModel` consumed by the state,
symbol and representation modules.

Sections are stored in a trivialization: the raw basis returns holomorphic-frame
values ``f_i(p)`` and the model weight is the Hermitian metric factor ``h(p)``, so
pointwise magnitudes are ``|f_i(p)|^2 h(p)``.

"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Optional

import numpy as np
from scipy.linalg import lapack, solve_triangular

from ..datasets.samplers import chart_points
from .charts import Chart, ComplexChart
from .checks import BASE_SECTION_TOL
from .exceptions import (
    BaseSectionZeroError,
    DegenerateBasisError,
    DimensionMismatchError,
    InvalidArgumentError,
    NumericalFailureError,
    OutOfDomainError,
)
from .quadrature import QuadratureRule, cpn_chart_rule

logger = logging.getLogger(__name__)

MultiIndex = tuple[int, ...]

PIVOT_TOL = 1e-12
MAX_SAMPLING_ROUNDS = 100


def monomial_basis(n: int, k: int) -> list[MultiIndex]:
    """All multi-indices of ``n`` entries with degree at most ``k``.

    Args:
        n (int): Number of chart coordinates.
        k (int): Bundle power.

    Returns:
        list[MultiIndex]: Lexicographically ordered exponents, ``C(n + k, n)`` of them.
    """
    if n < 1 or k < 0:
        raise InvalidArgumentError(f"Expected n >= 1 and k >= 0, got n={n}, k={k}.")
    return [alpha for alpha in itertools.product(range(k + 1), repeat=n) if sum(alpha) <= k]


def monomials(points: np.ndarray, exponents: np.ndarray) -> np.ndarray:
    """Evaluate ``z^alpha`` for every point (rows) and exponent (columns)."""
    points = np.asarray(points, dtype=np.complex128)
    exponents = np.asarray(exponents, dtype=int)
    return np.prod(points[:, None, :] ** exponents[None, :, :], axis=2)


def multinomial_normalization(n: int, k: int) -> np.ndarray:
    """Closed-form norms turning ``z^alpha`` into an orthonormal basis of CP^n sections.

    Under the normalized Fubini-Study volume ``<z^alpha, z^alpha> =
    n! alpha! (k - |alpha|)! / (k + n)!``, so the constants are the square roots of the
    multinomial coefficients ``(k + n)! / (n! alpha! (k - |alpha|)!)``. For ``n = 1``
    they reduce to ``sqrt((k + 1) C(k, a))``.
    """
    constants = []
    for alpha in monomial_basis(n, k):
        denominator = math.factorial(n) * math.factorial(k - sum(alpha))
        for a in alpha:
            denominator *= math.factorial(a)
        constants.append(math.sqrt(math.factorial(k + n) // denominator))
    return np.array(constants)


@dataclass
class QuantModel:
    """A quantization instance.

    Attributes:
        name (str): Human readable label.
        rule (QuadratureRule): Rule integrating over the point domain.
        chart (Chart): Chart of the point domain.
        raw_basis (Callable): Maps a ``(count, dim)`` point array to the
            ``(count, raw_dim)`` holomorphic-frame values of the raw basis.
        weight (Callable): Maps points to the metric factor ``h``.
        sampler (Callable, optional): ``sampler(rng, count)`` drawing domain points.
        s0_index (int): Index of the base section in the orthonormal basis.
        s0_scale (complex): Nonzero multiple applied to the base section.
        exponents (list[MultiIndex], optional): Exponents of monomial raw bases.
        ortho_transform (np.ndarray, optional): Matrix ``T`` with orthonormal basis
            ``psi = raw @ T``; computed from the Gram matrix when omitted.
    """

    name: str
    rule: QuadratureRule
    chart: Chart
    raw_basis: Callable[[np.ndarray], np.ndarray]
    weight: Callable[[np.ndarray], np.ndarray]
    sampler: Optional[Callable[[np.random.Generator, int], np.ndarray]] = None
    s0_index: int = 0
    s0_scale: complex = 1.0
    exponents: Optional[list[MultiIndex]] = None
    ortho_transform: Optional[np.ndarray] = None
    gram: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.gram = gram_matrix(self)
        if self.ortho_transform is None:
            self.ortho_transform = orthonormalize(self.gram)
        self.ortho_transform = np.asarray(self.ortho_transform, dtype=np.complex128)
        if not 0 <= self.s0_index < self.dim:
            raise InvalidArgumentError(
                f"Base section index {self.s0_index} outside basis of dimension {self.dim}."
            )
        if self.s0_scale == 0:
            raise InvalidArgumentError("Base section scale must be nonzero.")
        logger.debug(
            "Built model '%s' of dimension %d on %d nodes", self.name, self.dim, self.rule.size
        )

    @property
    def dim(self) -> int:
        """Dimension m of the orthonormal basis."""
        return self.ortho_transform.shape[1]

    @property
    def raw_dim(self) -> int:
        """Number of raw basis functions."""
        return self.ortho_transform.shape[0]

    @property
    def point_domain(self) -> str:
        """Domain tag of the model's quadrature rule."""
        return self.rule.domain

    def evaluate(self, points) -> tuple[np.ndarray, np.ndarray]:
        """Orthonormal basis values and metric weights at a batch of points.

        Returns:
            tuple[np.ndarray, np.ndarray]: Values of shape ``(count, m)`` and weights
            of shape ``(count,)``.

        Raises:
            OutOfDomainError: If a point is outside the chart domain.
        """
        pts = self.chart.as_points(points)
        inside = self.chart.contains(pts)
        if not np.all(inside):
            bad = int(np.flatnonzero(~inside)[0])
            raise OutOfDomainError(f"Point {pts[bad]} is outside the domain of '{self.name}'.")
        values = np.asarray(self.raw_basis(pts), dtype=np.complex128) @ self.ortho_transform
        return values, np.asarray(self.weight(pts), dtype=np.float64).reshape(-1)

    def base_section(self, values: np.ndarray) -> np.ndarray:
        """Trivialized values of the base section from basis values."""
        return self.s0_scale * values[..., self.s0_index]

    def off_base_zero(self, points) -> np.ndarray:
        """Mask of the points where ``|s0|^2 h`` clears the exclusion threshold."""
        values, weights = self.evaluate(points)
        return np.abs(self.base_section(values)) ** 2 * weights >= BASE_SECTION_TOL

    def sample(self, rng: np.random.Generator, count: int) -> np.ndarray:
        """Draw ``count`` domain points off the zero set of the base section."""
        if self.sampler is None:
            raise InvalidArgumentError(f"Model '{self.name}' has no sampler.")
        accepted = []
        total = 0
        for _ in range(MAX_SAMPLING_ROUNDS):
            pts = self.chart.as_points(self.sampler(rng, count))
            pts = pts[self.off_base_zero(pts)]
            accepted.append(pts)
            total += pts.shape[0]
            if total >= count:
                return np.concatenate(accepted)[:count]
        raise BaseSectionZeroError(
            f"Could not draw {count} points off the base section zero set of '{self.name}'."
        )

    def orthonormality_deviation(self, rule: Optional[QuadratureRule] = None) -> float:
        """Max entrywise deviation of the orthonormal basis Gram matrix from identity."""
        gram = self.gram if rule is None else gram_matrix(self, rule)
        t = self.ortho_transform
        return float(np.max(np.abs(t.conj().T @ gram @ t - np.eye(self.dim))))


def gram_matrix(model: QuantModel, rule: Optional[QuadratureRule] = None) -> np.ndarray:
    """Gram matrix of the raw basis.

    ``G_ab = sum_s w_s conj(f_a(p_s)) f_b(p_s) h(p_s)``, antilinear in the first slot.

    Raises:
        NumericalFailureError: If a basis value or weight is not finite at a node.
    """
    rule = model.rule if rule is None else rule
    raw = np.asarray(model.raw_basis(rule.nodes), dtype=np.complex128)
    weights = np.asarray(model.weight(rule.nodes), dtype=np.float64).reshape(-1)
    bad = np.flatnonzero(~(np.all(np.isfinite(raw), axis=1) & np.isfinite(weights)))
    if bad.size:
        raise NumericalFailureError(
            f"Basis is not finite at node {bad[0]} of '{model.name}'.", node_index=int(bad[0])
        )
    scaled = np.sqrt(rule.weights * weights)[:, None] * raw
    gram = scaled.conj().T @ scaled
    return (gram + gram.conj().T) / 2


def orthonormalize(gram: np.ndarray, tol: float = PIVOT_TOL) -> np.ndarray:
    """Inverse Cholesky factor of a Hermitian positive-definite Gram matrix.

    The Gram matrix is first scaled to unit diagonal. With ``D G D = L L^H`` the
    returned ``T = D L^{-H}`` is upper triangular and satisfies ``T^H G T = I``.

    Raises:
        DegenerateBasisError: If a pivot falls below ``tol``; carries the offending index.
    """
    gram = np.asarray(gram, dtype=np.complex128)
    diagonal = np.real(np.diag(gram))
    nonpositive = np.flatnonzero(diagonal <= 0)
    if nonpositive.size:
        raise DegenerateBasisError(
            f"Gram diagonal is not positive at index {nonpositive[0]}.", index=int(nonpositive[0])
        )
    scale = 1.0 / np.sqrt(diagonal)
    factor, info = lapack.zpotrf(gram * np.outer(scale, scale), lower=1, clean=1)
    if info > 0:
        raise DegenerateBasisError(f"Cholesky breakdown at index {info - 1}.", index=info - 1)
    pivots = np.abs(np.diag(factor)) ** 2
    small = np.flatnonzero(pivots < tol)
    if small.size:
        raise DegenerateBasisError(
            f"Cholesky pivot {pivots[small[0]]:.3e} below tolerance at index {small[0]}.",
            index=int(small[0]),
        )
    inverse = solve_triangular(factor, np.eye(gram.shape[0]), lower=True)
    return scale[:, None] * inverse.conj().T


@dataclass(frozen=True)
class SubspaceBasis:
    """Orthonormal basis of the positive-rank part of a possibly singular Gram matrix."""

    transform: np.ndarray
    eigenvalues: np.ndarray
    discarded: np.ndarray

    @property
    def rank(self) -> int:
        """Number of retained directions."""
        return self.transform.shape[1]


def orthonormalize_subspace(gram: np.ndarray, tol: float = 1e-10) -> SubspaceBasis:
    """Orthonormalize the span of a rank-deficient raw basis.

    Eigen-directions with eigenvalue at most ``tol`` times the largest are discarded.
    """
    eigenvalues, vectors = np.linalg.eigh(np.asarray(gram, dtype=np.complex128))
    order = np.argsort(eigenvalues)[::-1]
    eigenvalues, vectors = eigenvalues[order], vectors[:, order]
    top = eigenvalues[0] if eigenvalues.size else 0.0
    keep = eigenvalues > tol * top if top > 0 else np.zeros(eigenvalues.shape, dtype=bool)
    transform = vectors[:, keep] / np.sqrt(eigenvalues[keep])
    return SubspaceBasis(transform, eigenvalues, vectors[:, ~keep])


def eval_basis(model: QuantModel, point) -> tuple[np.ndarray, float]:
    """Orthonormal basis values and metric weight at one point.

    Raises:
        OutOfDomainError: If the point lies outside the chart domain.
    """
    values, weights = model.evaluate(model.chart.as_point(point).reshape(1, -1))
    return values[0], float(weights[0])


def inner_product(model: QuantModel, s1: np.ndarray, s2: np.ndarray) -> complex:
    """Inner product of two sections given in orthonormal coordinates.

    Raises:
        DimensionMismatchError: If a coefficient vector does not match the model.
    """
    s1 = np.asarray(s1, dtype=np.complex128)
    s2 = np.asarray(s2, dtype=np.complex128)
    if s1.shape != (model.dim,) or s2.shape != (model.dim,):
        raise DimensionMismatchError(
            f"Expected coefficient vectors of length {model.dim}, got {s1.shape} and {s2.shape}."
        )
    return complex(np.vdot(s1, s2))


def quadrature_inner_product(model: QuantModel, s1: np.ndarray, s2: np.ndarray) -> complex:
    """Inner product of two sections computed by quadrature over the model's rule."""
    values, weights = model.evaluate(model.rule.nodes)
    f1 = values @ np.asarray(s1, dtype=np.complex128)
    f2 = values @ np.asarray(s2, dtype=np.complex128)
    return complex(np.dot(model.rule.weights, np.conj(f1) * f2 * weights))


def _fubini_study_weight(points: np.ndarray, k: int) -> np.ndarray:
    return (1.0 + np.sum(np.abs(points) ** 2, axis=1)) ** (-k)


def cpn_model(
    n: int, k: int, radial_order: Optional[int] = None, angular_order: Optional[int] = None
) -> QuantModel:
    """Sections of the k-th power of the hyperplane bundle over CP^n.

    The raw basis is the monomials ``z^alpha`` with ``|alpha| <= k`` on the affine
    chart, the weight is ``(1 + |z|^2)^(-k)`` and the base section is the constant
    ``psi_0``.

    Args:
        n (int): Chart dimension, 1 or 2.
        k (int): Bundle power.
        radial_order (int, optional): Defaults to ``k + 2``.
        angular_order (int, optional): Defaults to ``2 k + 2``.
    """
    exponents = monomial_basis(n, k)
    rule = cpn_chart_rule(
        n, radial_order or k + 2, angular_order or 2 * k + 2
    )
    return QuantModel(
        name=f"cpn(n={n}, k={k})",
        rule=rule,
        chart=ComplexChart(n),
        raw_basis=partial(monomials, exponents=np.array(exponents)),
        weight=partial(_fubini_study_weight, k=k),
        sampler=partial(chart_points, n=n),
        exponents=exponents,
    )
