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
Module providing deterministic product quadrature rules for the domains on which
sections are integrated: the affine chart of CP^n with the normalized Fubini-Study
volume, the hyperbolic disk, circles and tori.

Radial variables are substituted so that every Gram integrand of a monomial basis
becomes a polynomial, which Gauss rules then integrate exactly.

"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from .exceptions import InvalidArgumentError, NumericalFailureError, UnsupportedDimensionError

logger = logging.getLogger(__name__)

MAX_CHART_DIMENSION = 2


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and positive weights of a quadrature rule.

    Attributes:
        nodes (np.ndarray): Array of shape ``(count, dim)``, one chart point per row.
        weights (np.ndarray): Positive weights, one per node.
        domain (str): Domain tag, e.g. ``"cpn-chart(1)"``, ``"disk"``, ``"circle"``,
            ``"torus(2)"``.
    """

    nodes: np.ndarray
    weights: np.ndarray
    domain: str

    def __post_init__(self):
        nodes = np.array(self.nodes)
        weights = np.array(self.weights, dtype=np.float64)
        if nodes.ndim == 1:
            nodes = nodes.reshape(-1, 1)
        if nodes.shape[0] != weights.shape[0]:
            raise InvalidArgumentError(
                f"Rule has {nodes.shape[0]} nodes but {weights.shape[0]} weights."
            )
        if not np.all(weights > 0):
            raise InvalidArgumentError("Quadrature weights must be strictly positive.")
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @property
    def size(self) -> int:
        """Number of nodes."""
        return self.weights.shape[0]

    @property
    def mass(self) -> float:
        """Total mass of the rule."""
        return float(np.sum(self.weights))

    def restrict(self, mask: np.ndarray) -> QuadratureRule:
        """Sub-rule on the nodes selected by a boolean mask."""
        return QuadratureRule(self.nodes[mask], self.weights[mask], self.domain)


def _check_order(name: str, value: int) -> None:
    if int(value) != value or value < 1:
        raise InvalidArgumentError(f"{name} must be a positive integer, got {value}.")


def gauss_legendre_unit(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [0, 1]."""
    x, w = roots_legendre(order)
    return (1.0 + x) / 2.0, w / 2.0


def gauss_jacobi_unit(order: int, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Jacobi rule on [0, 1] for the weight ``(1 - t)^alpha``."""
    x, w = roots_jacobi(order, alpha, 0.0)
    return (1.0 + x) / 2.0, w * 2.0 ** (-(alpha + 1.0))


def _angles(order: int) -> np.ndarray:
    return 2.0 * np.pi * np.arange(order) / order


def circle_rule(m: int) -> QuadratureRule:
    """Equally spaced rule on the unit-mass circle.

    Args:
        m (int): Number of nodes.

    Returns:
        QuadratureRule: ``m`` angle nodes with weights ``1/m``, exact for
        ``exp(i j theta)`` with ``|j| < m``.

    Raises:
        InvalidArgumentError: If ``m < 1``.
    """
    _check_order("m", m)
    return QuadratureRule(_angles(m).reshape(-1, 1), np.full(m, 1.0 / m), "circle")


def torus_rule(m: int, d: int = 2) -> QuadratureRule:
    """Product of ``d`` circle rules on the unit-mass torus."""
    _check_order("m", m)
    _check_order("d", d)
    angles = _angles(m)
    nodes = np.array(list(itertools.product(angles, repeat=d)), dtype=np.float64)
    return QuadratureRule(nodes, np.full(m**d, 1.0 / m**d), f"torus({d})")


def _simplex_rule(n: int, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Rule for the uniform probability measure on the standard n-simplex."""
    if n == 1:
        t, w = gauss_legendre_unit(order)
        return t.reshape(-1, 1), w
    # collapsed coordinates u = x, v = (1 - x) y
    x, wx = gauss_jacobi_unit(order, 1.0)
    y, wy = gauss_legendre_unit(order)
    xx, yy = np.meshgrid(x, y, indexing="ij")
    ww = np.outer(wx, wy)
    u = np.stack([xx.ravel(), ((1.0 - xx) * yy).ravel()], axis=1)
    return u, 2.0 * ww.ravel()


def cpn_chart_rule(n: int, radial_order: int, angular_order: int) -> QuadratureRule:
    """Rule for the affine chart of CP^n with the normalized Fubini-Study volume.

    Each complex axis is written in polar form. The radial variables are replaced by
    the moment coordinates ``u_i = |z_i|^2 / (1 + |z|^2)``, in which the normalized
    volume is the uniform measure on the n-simplex times the Haar measure of the
    angle torus. For ``n = 1`` this is the substitution ``t = r^2 / (1 + r^2)``.
    Gram entries of monomials of degree at most ``k`` against ``(1 + |z|^2)^(-k)``
    are then polynomials of degree at most ``k`` in the simplex variables.

    Args:
        n (int): Complex dimension, 1 or 2.
        radial_order (int): Gauss points per simplex axis.
        angular_order (int): Equally spaced angles per complex axis.

    Returns:
        QuadratureRule: Rule of total mass 1 with complex chart nodes.

    Raises:
        UnsupportedDimensionError: If ``n > 2``.
        InvalidArgumentError: If an order is not a positive integer.
    """
    if n < 1:
        raise InvalidArgumentError(f"Chart dimension must be at least 1, got {n}.")
    if n > MAX_CHART_DIMENSION:
        raise UnsupportedDimensionError(
            f"CP^{n} charts are not supported; maximum dimension is {MAX_CHART_DIMENSION}."
        )
    _check_order("radial_order", radial_order)
    _check_order("angular_order", angular_order)

    u, wu = _simplex_rule(n, radial_order)
    rest = 1.0 - np.sum(u, axis=1)
    moduli = np.sqrt(u / rest[:, None])

    angles = _angles(angular_order)
    phase_grid = np.array(list(itertools.product(angles, repeat=n)), dtype=np.float64)
    phases = np.exp(1j * phase_grid)

    nodes = (moduli[:, None, :] * phases[None, :, :]).reshape(-1, n)
    weights = np.outer(wu, np.full(phases.shape[0], 1.0 / phases.shape[0])).ravel()
    logger.debug("CP^%d chart rule with %d nodes", n, weights.shape[0])
    return QuadratureRule(nodes, weights, f"cpn-chart({n})")


def disk_rule(radial_order: int, angular_order: int, hbar: float) -> QuadratureRule:
    """Rule for the weighted hyperbolic measure on the unit disk.

    Integrates ``f(z) (1/hbar - 1) (1 - |z|^2)^(1/hbar) dx dy / (pi (1 - |z|^2)^2)``.
    With ``t = |z|^2`` this is ``(1/hbar - 1) (1 - t)^(1/hbar - 2) dt dtheta / (2 pi)``;
    the endpoint factor is handled by a Gauss-Jacobi rule and folded into the
    weights, so the rule integrates the section weight as well as the volume.

    Raises:
        InvalidArgumentError: If ``1/hbar <= 1`` or an order is not positive.
    """
    _check_order("radial_order", radial_order)
    _check_order("angular_order", angular_order)
    if hbar <= 0 or 1.0 / hbar <= 1.0:
        raise InvalidArgumentError(f"Disk rule requires 1/hbar > 1, got hbar={hbar}.")
    inv = 1.0 / hbar
    t, wt = gauss_jacobi_unit(radial_order, inv - 2.0)
    wt = wt * (inv - 1.0)
    angles = _angles(angular_order)
    nodes = (np.sqrt(t)[:, None] * np.exp(1j * angles)[None, :]).reshape(-1, 1)
    weights = np.outer(wt, np.full(angular_order, 1.0 / angular_order)).ravel()
    return QuadratureRule(nodes, weights, "disk")


def integrate(rule: QuadratureRule, f: Callable[[np.ndarray], np.ndarray]) -> complex:
    """Weighted sum of an integrand over the nodes of a rule.

    Args:
        rule (QuadratureRule): The quadrature rule.
        f (Callable): Vectorized integrand mapping the ``(count, dim)`` node array to
            ``count`` values; scalar results are broadcast.

    Returns:
        complex: ``sum_i w_i f(node_i)``, summed in node order.

    Raises:
        NumericalFailureError: If the integrand is not finite at some node.
    """
    values = np.broadcast_to(np.asarray(f(rule.nodes), dtype=np.complex128), (rule.size,))
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        raise NumericalFailureError(
            f"Integrand is not finite at node {bad[0]} ({rule.nodes[bad[0]]}).",
            node_index=int(bad[0]),
        )
    return complex(np.dot(rule.weights, values))
