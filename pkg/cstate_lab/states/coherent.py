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
Module for Rawnsley-type coherent states of a quantization model and the
quantitative checks of their defining properties.

For a point ``mu`` off the zero set of the base section ``s0`` with trivialized basis
values ``v_i = f_i(mu) s0(mu)``, the coherent state has orthonormal coordinates

    c_i = conj(f_i(mu)) / p(mu),    p(mu)^2 = sum_i |f_i(mu)|^2,

which equals ``(s0(mu) / |s0(mu)|) conj(v_i) / |v|``. The peak value is
``chi(mu)^2 = |v|^2 h(mu)`` and ``tau(mu) = (s0(mu) / |s0(mu)|) chi(mu)``.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import svdvals

from ..datasets.samplers import unit_sections
from ..quantization.checks import BASE_SECTION_TOL, CheckConfig, CheckResult, VerificationReport
from ..quantization.exceptions import BaseSectionZeroError
from ..quantization.hilbert import QuantModel, eval_basis
from ..quantization.quadrature import QuadratureRule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoherentStateRecord:
    """Coherent state attached to a base point.

    Attributes:
        base_point (np.ndarray): The point ``mu``.
        coeffs (np.ndarray): Unit coefficient vector in the orthonormal basis.
        p_mu (float): ``p(mu)``.
        chi_mu (float): ``chi(mu) > 0``.
        tau_mu (complex): ``tau(mu)`` with ``|tau| = chi``.
    """

    base_point: np.ndarray
    coeffs: np.ndarray
    p_mu: float
    chi_mu: float
    tau_mu: complex

    @property
    def norm(self) -> float:
        """Norm of the coefficient vector."""
        return float(np.linalg.norm(self.coeffs))


@dataclass(frozen=True)
class CoherentBatch:
    """Coherent state data for a batch of points, one row per point."""

    points: np.ndarray
    coeffs: np.ndarray
    p: np.ndarray
    chi: np.ndarray
    tau: np.ndarray
    values: np.ndarray
    weights: np.ndarray

    def record(self, index: int) -> CoherentStateRecord:
        """Single-point record."""
        return CoherentStateRecord(
            self.points[index],
            self.coeffs[index],
            float(self.p[index]),
            float(self.chi[index]),
            complex(self.tau[index]),
        )


class CoherentReport(VerificationReport):
    """Report of the coherent-state property checks."""


def coherent_batch(model: QuantModel, points) -> CoherentBatch:
    """Coherent states at a batch of points.

    Raises:
        OutOfDomainError: If a point is outside the chart domain.
        BaseSectionZeroError: If the base section is below the exclusion threshold.
    """
    points = model.chart.as_points(points)
    values, weights = model.evaluate(points)
    s0 = model.base_section(values)
    small = np.flatnonzero(np.abs(s0) ** 2 * weights < BASE_SECTION_TOL)
    if small.size:
        raise BaseSectionZeroError(
            f"Base section vanishes at {points[small[0]]} within the exclusion threshold."
        )
    norms = np.linalg.norm(values, axis=1)
    phase = s0 / np.abs(s0)
    coeffs = phase[:, None] * np.conj(values) / norms[:, None]
    chi = np.sqrt(weights) * norms
    return CoherentBatch(
        points=points,
        coeffs=coeffs,
        p=norms / np.abs(s0),
        chi=chi,
        tau=phase * chi,
        values=values,
        weights=weights,
    )


def chi_squared(model: QuantModel, mu) -> float:
    """``chi(mu)^2 = sum_i |psi_i(mu)|^2`` including the metric weight."""
    values, weight = eval_basis(model, mu)
    return float(np.sum(np.abs(values) ** 2) * weight)


def coherent_state(model: QuantModel, mu) -> CoherentStateRecord:
    """Coherent state ``phi_mu`` of a model.

    Args:
        model (QuantModel): The quantization model.
        mu: Base point in the model's chart.

    Returns:
        CoherentStateRecord: State with unit coefficient vector.

    Raises:
        BaseSectionZeroError: If ``mu`` is in the zero set neighbourhood of ``s0``.
        OutOfDomainError: If ``mu`` is outside the chart domain.
    """
    return coherent_batch(model, model.chart.as_point(mu).reshape(1, -1)).record(0)


def evaluate_section(model: QuantModel, coeffs: np.ndarray, points) -> np.ndarray:
    """Values of sections in the unitary frame, ``sqrt(h) sum_i a_i psi_i``.

    ``coeffs`` may be one coefficient vector or a matrix with one section per column.
    """
    values, weights = model.evaluate(points)
    result = values @ np.asarray(coeffs, dtype=np.complex128)
    scale = np.sqrt(weights)
    return scale * result if result.ndim == 1 else scale[:, None] * result


@dataclass(frozen=True)
class Overlap:
    """``<phi_mu, phi>`` from the coefficient formula and from the inner product."""

    formula: complex
    direct: complex

    @property
    def deviation(self) -> float:
        """Absolute difference of the two computations."""
        return abs(self.formula - self.direct)


def overlap(model: QuantModel, mu, phi: np.ndarray) -> Overlap:
    """Overlap of the coherent state at ``mu`` with a section, computed two ways.

    The formula value is ``g(mu) / p(mu)`` where ``phi = g s0``.
    """
    batch = coherent_batch(model, model.chart.as_point(mu).reshape(1, -1))
    phi = np.asarray(phi, dtype=np.complex128)
    s0 = model.base_section(batch.values)[0]
    g = complex(batch.values[0] @ phi) / s0
    return Overlap(formula=g / batch.p[0], direct=complex(np.vdot(batch.coeffs[0], phi)))


def resolution_matrix(model: QuantModel, rule: Optional[QuadratureRule] = None) -> np.ndarray:
    """``R_ij = int <psi_i, phi_mu> <phi_mu, psi_j> chi(mu)^2 dV(mu)`` by quadrature.

    ``chi^2`` already carries the metric weight. Nodes in the base section exclusion
    set are skipped.
    """
    rule = model.rule if rule is None else rule
    rule = rule.restrict(model.off_base_zero(rule.nodes))
    batch = coherent_batch(model, rule.nodes)
    scaled = np.sqrt(rule.weights) * batch.chi
    weighted = batch.coeffs * scaled[:, None]
    return weighted.T @ weighted.conj()


def overcompleteness(model: QuantModel, points) -> np.ndarray:
    """Singular values of the ``m x S`` matrix of coherent-state coefficients.

    Fewer than ``m`` points yield trailing zero singular values.
    """
    batch = coherent_batch(model, points)
    sigma = svdvals(batch.coeffs.T)
    return np.concatenate([sigma, np.zeros(max(0, model.dim - sigma.size))])[: model.dim]


def _likelihood_checks(model: QuantModel, batch: CoherentBatch, sections, config, report):
    chi2 = batch.chi**2

    evaluations = evaluate_section(model, sections.T, batch.points)
    violation = (np.abs(evaluations) ** 2 - chi2[:, None]) / chi2[:, None]
    report.add(
        CheckResult.bound(
            "maximal_likelihood",
            max(0.0, float(np.max(violation))),
            config.likelihood_tol,
            "max relative excess of |phi(mu)|^2 over chi(mu)^2",
        )
    )

    self_values = np.einsum(
        "pm,pm->p", batch.values, batch.coeffs
    ) * np.sqrt(batch.weights)
    report.add(
        CheckResult.bound(
            "maximal_likelihood_equality",
            float(np.max(np.abs(np.abs(self_values) ** 2 - chi2) / chi2)),
            config.coefficient_tol,
            "|phi_mu(mu)|^2 = chi(mu)^2",
        )
    )

    cross = np.sqrt(batch.weights)[:, None] * (batch.values @ batch.coeffs.T)
    diagonal = np.abs(np.diag(cross)) ** 2
    excess = (np.abs(cross) ** 2 - diagonal[:, None]) / diagonal[:, None]
    report.add(
        CheckResult.bound(
            "dominance",
            max(0.0, float(np.max(excess))),
            config.likelihood_tol,
            "max relative excess of |phi_nu(mu)|^2 over |phi_mu(mu)|^2",
        )
    )
    return evaluations


def _overlap_checks(model, batch, sections, evaluations, config, report):
    pairs = min(batch.points.shape[0], sections.shape[0])
    index = np.arange(pairs)
    direct = np.einsum("pm,pm->p", batch.coeffs[:pairs].conj(), sections[:pairs])
    s0 = model.base_section(batch.values[:pairs])
    formula = np.einsum("pm,pm->p", batch.values[:pairs], sections[:pairs]) / s0 / batch.p[:pairs]
    report.add(
        CheckResult.bound(
            "overlap_formula",
            float(np.max(np.abs(formula - direct))),
            config.coefficient_tol,
            "g(mu)/p(mu) against the coefficient inner product",
        )
    )
    kernel = np.conj(batch.tau[:pairs]) * evaluations[index, index] / batch.chi[:pairs] ** 2
    report.add(
        CheckResult.bound(
            "reproducing_kernel",
            float(np.max(np.abs(direct - kernel))),
            config.reproducing_tol,
            "<phi_mu, phi> = conj(phi_mu(mu)) phi(mu) / chi(mu)^2",
        )
    )


def run_state_checks(
    model: QuantModel,
    points: np.ndarray,
    sections: np.ndarray,
    config: CheckConfig,
    report: VerificationReport,
) -> CoherentBatch:
    """Pointwise coherent-state checks at the given base points.

    Adds the normalization, overlap, maximal likelihood, dominance and reproducing
    kernel records to ``report``.
    """
    batch = coherent_batch(model, points)
    report.add(
        CheckResult.bound(
            "normalization",
            float(np.max(np.abs(np.linalg.norm(batch.coeffs, axis=1) - 1.0))),
            config.coefficient_tol,
        )
    )
    evaluations = _likelihood_checks(model, batch, sections, config, report)
    _overlap_checks(model, batch, sections, evaluations, config, report)
    return batch


def add_resolution_check(model: QuantModel, config: CheckConfig, report: VerificationReport):
    """Add the resolution-of-identity record computed over the model's rule."""
    resolution = resolution_matrix(model)
    report.add(
        CheckResult.bound(
            "resolution_of_identity",
            float(np.max(np.abs(resolution - np.eye(model.dim)))),
            config.quadrature_tol,
        )
    )


def numerical_rank(sigma: np.ndarray, count: int) -> int:
    """Rank from singular values in descending order, relative to the largest.

    The cutoff is ``sigma_max * max(m, S) * eps`` as in :func:`numpy.linalg.matrix_rank`,
    where ``S`` is the number of points behind the matrix.
    """
    if sigma.size == 0 or sigma[0] == 0:
        return 0
    cutoff = sigma[0] * max(sigma.size, count) * np.finfo(np.float64).eps
    return int(np.sum(sigma > cutoff))


def add_overcompleteness_check(
    model: QuantModel, points, config: CheckConfig, report: VerificationReport, floor: bool = True
):
    """Add the overcompleteness records for coherent states at ``points``.

    The verdict is the numerical rank of the coefficient matrix. With ``floor`` the
    smallest singular value must also exceed ``config.singular_value_tol``; otherwise
    it is recorded for information.
    """
    count = len(points)
    sigma = overcompleteness(model, points)
    rank = numerical_rank(sigma, count)
    report.add(
        CheckResult(
            "overcompleteness",
            float(rank),
            float(model.dim),
            rank == model.dim,
            f"numerical rank over {count} points",
        )
    )
    note = f"smallest singular value over {count} points"
    if floor:
        record = CheckResult.floor(
            "overcompleteness_min_singular", float(sigma[-1]), config.singular_value_tol, note
        )
    else:
        record = CheckResult.info("overcompleteness_min_singular", float(sigma[-1]), note)
    report.add(record)


def verify_coherent(model: QuantModel, config: Optional[CheckConfig] = None) -> CoherentReport:
    """Check the defining properties of the coherent states of a model.

    Records: normalization, overlap formula, maximal likelihood (and its equality
    case), dominance, reproducing kernel, resolution of identity and overcompleteness.
    Random unit sections and off-zero-set points are drawn from ``config.seed``;
    overcompleteness uses the coherent states at all quadrature nodes.

    Returns:
        CoherentReport: Report carrying all records; failures do not raise.
    """
    config = config or CheckConfig()
    rng = np.random.default_rng(config.seed)
    points = model.sample(rng, config.n_random_points)
    sections = unit_sections(rng, config.n_random_sections, model.dim)

    report = CoherentReport(f"coherent[{model.name}]")
    run_state_checks(model, points, sections, config, report)
    add_resolution_check(model, config, report)
    nodes = model.rule.nodes[model.off_base_zero(model.rule.nodes)]
    add_overcompleteness_check(model, nodes, config, report)
    logger.info("Coherent checks on %s: passed=%s", model.name, report.passed)
    return report
