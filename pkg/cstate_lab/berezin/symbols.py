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
Module for CP^n-symbols of operators, their lifts from totally real submanifolds
and the star product.

Operators are ``m x m`` matrices in the orthonormal section basis of an ambient
CP^n model. The symbol of ``A`` at a pair of points is the coherent-state quotient

    A(p, conj(q)) = <phi_p, A phi_q> / <phi_p, phi_q>,

which does not depend on the phases of the coherent states.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import lstsq, svdvals

from ..models.pullback import Embedding, circle_embedding, torus_embedding
from ..quantization.checks import SINGULAR_VALUE_TOL
from ..quantization.exceptions import DimensionMismatchError
from ..quantization.hilbert import QuantModel
from ..quantization.quadrature import circle_rule, torus_rule
from ..states.coherent import coherent_batch
from .exceptions import AntipodalPairError, NotDeterminingSetError

logger = logging.getLogger(__name__)

OVERLAP_TOL = 1e-12


@dataclass(frozen=True)
class SymbolValue:
    """Value of a CP^n-symbol at a pair of points."""

    value: complex
    p: np.ndarray
    q: np.ndarray


@dataclass(frozen=True)
class TotallyRealSubmanifold:
    """Embedded submanifold asserted totally real of real dimension ``n``.

    Attributes:
        embedding (Embedding): The embedding into the CP^n chart.
        nodes (np.ndarray): Parameter nodes used to recover lifted operators.
    """

    embedding: Embedding
    nodes: np.ndarray

    @property
    def images(self) -> np.ndarray:
        """Chart points of the sample nodes."""
        return self.embedding(self.nodes)

    @property
    def size(self) -> int:
        """Number of sample nodes."""
        return self.nodes.shape[0]


def circle_submanifold(count: int) -> TotallyRealSubmanifold:
    """Unit circle in CP^1 with ``count`` equally spaced nodes."""
    return TotallyRealSubmanifold(circle_embedding(count), circle_rule(count).nodes)


def torus_submanifold(count: int) -> TotallyRealSubmanifold:
    """Clifford torus in CP^2 with a ``count x count`` grid of nodes."""
    return TotallyRealSubmanifold(torus_embedding(count), torus_rule(count, 2).nodes)


def _operator(model: QuantModel, A) -> np.ndarray:
    A = np.asarray(A, dtype=np.complex128)
    if A.shape != (model.dim, model.dim):
        raise DimensionMismatchError(
            f"Operator of shape {A.shape} does not act on a space of dimension {model.dim}."
        )
    return A


def _chart_points(model, p, q, submanifold):
    if submanifold is None:
        return model.chart.as_point(p), model.chart.as_point(q)
    return submanifold.embedding(p)[0], submanifold.embedding(q)[0]


def cpn_symbol(
    model: QuantModel,
    A: np.ndarray,
    p,
    q,
    submanifold: Optional[TotallyRealSubmanifold] = None,
) -> SymbolValue:
    """CP^n-symbol of an operator at a pair of points.

    Args:
        model (QuantModel): Ambient CP^n model.
        A (np.ndarray): Operator in the orthonormal basis.
        p: First point, a chart point or a submanifold parameter.
        q: Second point.
        submanifold (TotallyRealSubmanifold, optional): When given, ``p`` and ``q`` are
            parameters mapped through its embedding.

    Returns:
        SymbolValue: The quotient of coherent-state matrix elements.

    Raises:
        AntipodalPairError: If the coherent states at ``p`` and ``q`` are orthogonal.
    """
    A = _operator(model, A)
    zp, zq = _chart_points(model, p, q, submanifold)
    coeffs = coherent_batch(model, np.vstack([zp, zq])).coeffs
    denominator = np.vdot(coeffs[0], coeffs[1])
    if abs(denominator) < OVERLAP_TOL:
        raise AntipodalPairError(f"Coherent states at {zp} and {zq} are orthogonal.")
    return SymbolValue(complex(np.vdot(coeffs[0], A @ coeffs[1]) / denominator), zp, zq)


def diagonal_symbol(model: QuantModel, A: np.ndarray, points) -> np.ndarray:
    """Diagonal symbol ``<phi_p, A phi_p>`` at a batch of chart points."""
    A = _operator(model, A)
    coeffs = coherent_batch(model, points).coeffs
    return np.einsum("si,ij,sj->s", coeffs.conj(), A, coeffs)


def star_symbol(
    model: QuantModel,
    A1: np.ndarray,
    A2: np.ndarray,
    p,
    submanifold: Optional[TotallyRealSubmanifold] = None,
) -> complex:
    """Star product ``(a1 * a2)(p, p)``, the diagonal symbol of ``A1 A2``."""
    product = _operator(model, A1) @ _operator(model, A2)
    return cpn_symbol(model, product, p, p, submanifold).value


def evaluation_matrix(sub: TotallyRealSubmanifold, model: QuantModel) -> np.ndarray:
    """``E[s, i] = psi_i(eps(p_s))`` in the holomorphic frame."""
    values, _ = model.evaluate(sub.images)
    return values


def lift_samples(sub: TotallyRealSubmanifold, model: QuantModel, A: np.ndarray) -> np.ndarray:
    """Values ``(A psi_j)(eps(p_s))`` of an operator's action at the sample nodes."""
    return evaluation_matrix(sub, model) @ _operator(model, A)


@dataclass(frozen=True)
class LiftReport:
    """Uniqueness certificate of a lift recovery.

    Attributes:
        sigma_min (float): Smallest singular value of the evaluation matrix.
        sigma_max (float): Largest singular value of the evaluation matrix.
        raw_condition (float): Condition number of the raw monomial evaluation matrix.
        residual (float): Max residual of the least-squares fit.
    """

    sigma_min: float
    sigma_max: float
    raw_condition: float
    residual: float

    @property
    def determining(self) -> bool:
        """Whether the nodes form a determining set."""
        return self.sigma_min > SINGULAR_VALUE_TOL


def lift_recovery(
    sub: TotallyRealSubmanifold, model: QuantModel, samples: np.ndarray
) -> tuple[np.ndarray, LiftReport]:
    """Recover an operator from its action restricted to a totally real submanifold.

    Args:
        sub (TotallyRealSubmanifold): Submanifold with ``S >= m`` nodes.
        model (QuantModel): Ambient model.
        samples (np.ndarray): ``(S, m)`` values of the operator applied to each basis
            section at the nodes, as produced by :func:`lift_samples`.

    Returns:
        tuple[np.ndarray, LiftReport]: The recovered operator and its certificate.

    Raises:
        NotDeterminingSetError: If the evaluation matrix is rank deficient.
    """
    matrix = evaluation_matrix(sub, model)
    samples = np.asarray(samples, dtype=np.complex128)
    if samples.shape != matrix.shape:
        raise DimensionMismatchError(
            f"Expected samples of shape {matrix.shape}, got {samples.shape}."
        )
    if sub.size < model.dim:
        raise NotDeterminingSetError(
            f"{sub.size} nodes cannot determine sections of a space of dimension {model.dim}."
        )
    sigma = svdvals(matrix)
    if sigma[-1] <= SINGULAR_VALUE_TOL:
        raise NotDeterminingSetError(
            f"Evaluation matrix is rank deficient, smallest singular value {sigma[-1]:.3e}."
        )
    raw_sigma = svdvals(np.asarray(model.raw_basis(sub.images), dtype=np.complex128))
    recovered, *_ = lstsq(matrix, samples)
    residual = float(np.max(np.abs(matrix @ recovered - samples), initial=0.0))
    logger.debug("Lift recovery on %d nodes, sigma_min=%.3e", sub.size, sigma[-1])
    return recovered, LiftReport(
        float(sigma[-1]), float(sigma[0]), float(raw_sigma[0] / raw_sigma[-1]), residual
    )
