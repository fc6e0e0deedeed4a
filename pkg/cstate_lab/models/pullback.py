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
Module for pullback quantization models over embedded submanifolds of the CP^n chart.

The raw basis of a pullback model is the restriction of the monomial sections along
the embedding, with the ambient Fubini-Study weight evaluated on the image. The
parameter-domain rule is primary: it carries the induced volume, normalized to
total mass one.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Callable, Optional, Union

import numpy as np

from ..datasets.embeddings import load_embedding_table
from ..datasets.samplers import angle_points, table_points
from ..quantization.charts import AngleChart, Chart, DiscreteChart
from ..quantization.exceptions import (
    DegenerateBasisError,
    DimensionMismatchError,
    InvalidArgumentError,
)
from ..quantization.hilbert import (
    QuantModel,
    monomial_basis,
    monomials,
    orthonormalize,
    orthonormalize_subspace,
)
from ..quantization.quadrature import QuadratureRule, circle_rule, torus_rule
from ..states.coherent import CoherentStateRecord, coherent_state
from .exceptions import EmptyModelError

logger = logging.getLogger(__name__)

RANK_TOL = 1e-10
WEIGHT_SUM_TOL = 1e-10


@dataclass(frozen=True)
class Embedding:
    """Smooth map from a parameter domain into the CP^n chart.

    Attributes:
        name (str): Label of the parameter domain, e.g. ``circle`` or ``torus(2)``.
        param_dim (int): Number of real parameters.
        target_dim (int): Chart dimension ``n`` of the target.
        map (Callable): Maps a ``(count, param_dim)`` array to ``(count, n)`` chart points.
        rule (QuadratureRule): Induced rule on the parameter domain.
        chart (Chart): Chart of the parameter domain.
        sampler (Callable): ``sampler(rng, count)`` drawing parameter points.
    """

    name: str
    param_dim: int
    target_dim: int
    map: Callable[[np.ndarray], np.ndarray]
    rule: QuadratureRule
    chart: Chart
    sampler: Callable[[np.random.Generator, int], np.ndarray]

    def __call__(self, params) -> np.ndarray:
        return np.asarray(self.map(self.chart.as_points(params)), dtype=np.complex128)


def _unit_circles(params: np.ndarray) -> np.ndarray:
    return np.exp(1j * params)


def circle_embedding(m: int = 64) -> Embedding:
    """Unit circle ``theta -> exp(i theta)`` in the CP^1 chart."""
    return Embedding(
        "circle", 1, 1, _unit_circles, circle_rule(m), AngleChart(1), partial(angle_points, dim=1)
    )


def torus_embedding(m: int = 32) -> Embedding:
    """Clifford torus ``(theta_1, theta_2) -> (exp(i theta_1), exp(i theta_2))`` in CP^2."""
    return Embedding(
        "torus(2)",
        2,
        2,
        _unit_circles,
        torus_rule(m, 2),
        AngleChart(2),
        partial(angle_points, dim=2),
    )


def _table_map(params: np.ndarray, chart: DiscreteChart, images: np.ndarray) -> np.ndarray:
    return images[chart.index_of(params)]


def discrete_embedding(
    params: np.ndarray, images: np.ndarray, weights: np.ndarray, name: str = "user"
) -> Embedding:
    """Embedding given by a finite table of parameter nodes, images and weights.

    Raises:
        InvalidArgumentError: If the weights are not positive or do not sum to one.
        DimensionMismatchError: If the table columns have inconsistent lengths.
    """
    params = np.asarray(params, dtype=np.float64)
    params = params.reshape(-1, 1) if params.ndim == 1 else params
    images = np.asarray(images, dtype=np.complex128)
    images = images.reshape(-1, 1) if images.ndim == 1 else images
    weights = np.asarray(weights, dtype=np.float64)
    if not params.shape[0] == images.shape[0] == weights.shape[0]:
        raise DimensionMismatchError("Embedding table columns have different lengths.")
    if abs(np.sum(weights) - 1.0) > WEIGHT_SUM_TOL:
        raise InvalidArgumentError(f"Embedding weights sum to {np.sum(weights)}, expected 1.")
    chart = DiscreteChart(params)
    if len(chart._index) != params.shape[0]:  # pylint: disable=protected-access
        raise InvalidArgumentError("Embedding parameter nodes must be distinct.")
    return Embedding(
        name,
        params.shape[1],
        images.shape[1],
        partial(_table_map, chart=chart, images=images),
        QuadratureRule(params, weights, f"{name}({params.shape[1]})"),
        chart,
        partial(table_points, nodes=params),
    )


def load_embedding_csv(path: Union[str, Path]) -> Embedding:
    """Read a discrete embedding from a CSV table (see :mod:`cstate_lab.datasets`)."""
    table = load_embedding_table(path)
    return discrete_embedding(table.params, table.images, table.weights, name=Path(path).stem)


@dataclass(frozen=True)
class RankReport:
    """Rank of the pullback basis.

    Attributes:
        rank (int): Dimension of the pullback space.
        raw_dim (int): Number of pulled-back monomials.
        eigenvalues (np.ndarray): Gram spectrum in decreasing order, or empty when the
            Gram matrix admitted a Cholesky factorization.
        discarded (np.ndarray): Discarded raw-coefficient directions, one per column.
    """

    rank: int
    raw_dim: int
    eigenvalues: np.ndarray
    discarded: np.ndarray

    @property
    def deficient(self) -> bool:
        """Whether some pulled-back monomials were linearly dependent."""
        return self.rank < self.raw_dim


def _pulled_monomials(params, embedding, exponents):
    return monomials(embedding(params), exponents)


def _pulled_weight(params, embedding, k):
    return (1.0 + np.sum(np.abs(embedding(params)) ** 2, axis=1)) ** (-k)


def make_pullback_model(
    embedding: Embedding, n: Optional[int] = None, k: int = 1, tol: float = RANK_TOL
) -> tuple[QuantModel, RankReport]:
    """Build the pullback model of degree-``k`` sections along an embedding.

    If the pulled-back monomials are linearly dependent, the model uses an orthonormal
    basis of the positive-rank subspace and the report lists the discarded directions.

    Args:
        embedding (Embedding): The embedding.
        n (int, optional): Ambient chart dimension; must match the embedding target.
        k (int): Bundle power.
        tol (float): Relative eigenvalue threshold for rank detection.

    Returns:
        tuple[QuantModel, RankReport]: The model and its rank report.

    Raises:
        DimensionMismatchError: If ``n`` differs from the embedding target dimension.
        EmptyModelError: If the pullback space is zero.
    """
    n = embedding.target_dim if n is None else n
    if n != embedding.target_dim:
        raise DimensionMismatchError(
            f"Embedding '{embedding.name}' lands in C^{embedding.target_dim}, not C^{n}."
        )
    exponents = monomial_basis(n, k)
    exponent_array = np.array(exponents)
    model = QuantModel(
        name=f"pullback({embedding.name}, n={n}, k={k})",
        rule=embedding.rule,
        chart=embedding.chart,
        raw_basis=partial(_pulled_monomials, embedding=embedding, exponents=exponent_array),
        weight=partial(_pulled_weight, embedding=embedding, k=k),
        sampler=embedding.sampler,
        exponents=exponents,
        ortho_transform=np.eye(len(exponents)),
    )

    subspace = orthonormalize_subspace(model.gram, tol)
    if subspace.rank == 0:
        raise EmptyModelError(f"Pullback along '{embedding.name}' spans the zero space.")
    transform = None
    if subspace.rank == len(exponents):
        try:
            transform = orthonormalize(model.gram)
            report = RankReport(subspace.rank, len(exponents), np.array([]), subspace.discarded)
        except DegenerateBasisError:
            transform = None
    if transform is None:
        logger.warning(
            "Pullback along '%s' has rank %d < %d; using the positive-rank subspace",
            embedding.name,
            subspace.rank,
            len(exponents),
        )
        transform = subspace.transform
        report = RankReport(subspace.rank, len(exponents), subspace.eigenvalues, subspace.discarded)
    model.ortho_transform = np.asarray(transform, dtype=np.complex128)
    return model, report


def pullback_coherent(model: QuantModel, param) -> CoherentStateRecord:
    """Coherent state of a pullback model at a parameter point."""
    return coherent_state(model, param)
