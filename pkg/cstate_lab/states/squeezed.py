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
Module for squeezed states of a quantization model.

Squeezing by a real factor ``zeta`` keeps the real part of the complex chart
coordinates and scales the imaginary part. States of the first type are coherent
states at the squeezed base point. States of the second type squeeze the evaluation
argument instead; since ``psi_i(nu_zeta)`` is generally not holomorphic in ``nu``, it
is expanded by L2 projection onto the basis and the projection residual is reported.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..datasets.samplers import unit_sections
from ..quantization.charts import Chart, ComplexChart, ParameterChart
from ..quantization.checks import CheckConfig, CheckResult, VerificationReport
from ..quantization.exceptions import InvalidArgumentError, OutOfDomainError
from ..quantization.hilbert import QuantModel
from ..quantization.quadrature import QuadratureRule
from .coherent import (
    CoherentStateRecord,
    add_overcompleteness_check,
    coherent_batch,
    coherent_state,
    resolution_matrix,
    run_state_checks,
)

logger = logging.getLogger(__name__)

HERMITICITY_TOL = 1e-9
REALITY_TOL = 1e-12
IMPLICATION_TOL = 1e-8


@dataclass(frozen=True)
class SqueezeParams:
    """Squeeze factor together with the chart in which it acts.

    Attributes:
        zeta (float): Finite, non-negative squeeze factor.
        chart (Chart): Chart whose complex coordinates are squeezed.
    """

    zeta: float
    chart: Chart

    def __post_init__(self):
        if not np.isfinite(self.zeta) or self.zeta < 0:
            raise InvalidArgumentError(
                f"Squeeze factor must be finite and non-negative, got {self.zeta}."
            )

    def apply(self, points) -> tuple[np.ndarray, np.ndarray]:
        """Squeeze a batch of points.

        Returns:
            tuple[np.ndarray, np.ndarray]: Squeezed points and the mask of those that
            stay inside the chart domain.
        """
        points = self.chart.as_points(points)
        if self.zeta == 1:
            return points.copy(), self.chart.contains(points)
        coords = self.chart.to_complex(points)
        squeezed = self.chart.from_complex(coords.real + 1j * self.zeta * coords.imag)
        return squeezed, self.chart.contains(squeezed)

    def coverage(self, rule: QuadratureRule) -> float:
        """Fraction of the rule mass whose preimage under squeezing lies in the domain."""
        if self.zeta == 0:
            return 0.0
        coords = self.chart.to_complex(rule.nodes)
        preimage = self.chart.from_complex(coords.real + 1j * coords.imag / self.zeta)
        inside = self.chart.contains(preimage)
        return float(np.sum(rule.weights[inside]) / rule.mass)


def squeeze_points(points, zeta: float, chart: Chart) -> tuple[np.ndarray, np.ndarray]:
    """Squeeze a batch of points; see :meth:`SqueezeParams.apply`."""
    return SqueezeParams(zeta, chart).apply(points)


def squeeze_point(mu, zeta: float, chart: Optional[Chart] = None) -> np.ndarray:
    """Squeeze one point: real parts kept, imaginary parts scaled by ``zeta``.

    Args:
        mu: Point of the chart.
        zeta (float): Squeeze factor.
        chart (Chart, optional): Defaults to the complex chart of matching dimension.

    Raises:
        OutOfDomainError: If the squeezed point leaves the chart domain.
    """
    if chart is None:
        chart = ComplexChart(np.atleast_1d(mu).shape[0])
    squeezed, inside = squeeze_points(chart.as_point(mu).reshape(1, -1), zeta, chart)
    if not inside[0]:
        raise OutOfDomainError(f"Squeezed point {squeezed[0]} leaves the chart domain.")
    return squeezed[0]


def squeezed_I(  # pylint: disable=invalid-name
    model: QuantModel, mu, zeta: float
) -> CoherentStateRecord:
    """Squeezed state of the first type, the coherent state at ``mu_zeta``."""
    return coherent_state(model, squeeze_point(mu, zeta, model.chart))


@dataclass(frozen=True)
class BMatrix:
    """Expansion ``psi_i(nu_zeta) ~ sum_k b_ik psi_k(nu)`` by L2 projection.

    Attributes:
        entries (np.ndarray): ``b_ik = <psi_k, psi_i(. zeta)>``.
        residual (float): ``max_i`` of the L2 norm of the projection remainder.
        residuals (np.ndarray): Remainder norm per basis function.
        zeta (float): Squeeze factor.
    """

    entries: np.ndarray
    residual: float
    residuals: np.ndarray
    zeta: float

    @property
    def hermiticity_deviation(self) -> float:
        """``max |b_ik - conj(b_ki)|``."""
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))

    @property
    def is_hermitian(self) -> bool:
        """Whether the expansion matrix is Hermitian within tolerance."""
        return self.hermiticity_deviation < HERMITICITY_TOL


def b_matrix(model: QuantModel, zeta: float) -> BMatrix:
    """Project the squeezed-argument basis functions onto the basis.

    ``zeta = 1`` returns the identity exactly.

    Raises:
        OutOfDomainError: If a squeezed quadrature node leaves the chart domain.
    """
    if zeta == 1:
        return BMatrix(np.eye(model.dim, dtype=np.complex128), 0.0, np.zeros(model.dim), 1.0)
    nodes = model.rule.nodes
    squeezed, inside = squeeze_points(nodes, zeta, model.chart)
    if not np.all(inside):
        raise OutOfDomainError(
            f"Squeeze factor {zeta} maps {int(np.sum(~inside))} quadrature nodes "
            "outside the domain."
        )
    values, weights = model.evaluate(nodes)
    shifted, _ = model.evaluate(squeezed)
    measure = model.rule.weights * weights
    entries = (values.conj().T @ (measure[:, None] * shifted)).T
    remainder = shifted - values @ entries.T
    residuals = np.sqrt(np.real(measure @ np.abs(remainder) ** 2))
    return BMatrix(entries, float(np.max(residuals)), residuals, float(zeta))


@dataclass(frozen=True)
class SqueezedStateII:
    """Squeezed state of the second type projected onto the basis."""

    coeffs: np.ndarray
    residual: float

    @property
    def norm(self) -> float:
        """Norm of the projected coefficient vector."""
        return float(np.linalg.norm(self.coeffs))


def _type_two_coeffs(model, mu_values, squeezed_batch, bmat) -> np.ndarray:
    phase = squeezed_batch.tau / squeezed_batch.chi
    norms = np.linalg.norm(squeezed_batch.values, axis=1)
    return phase[:, None] * (mu_values.conj() @ bmat.entries) / norms[:, None]


def squeezed_II(  # pylint: disable=invalid-name
    model: QuantModel, mu, zeta: float, bmat: Optional[BMatrix] = None
) -> SqueezedStateII:
    """Squeezed state of the second type.

    Coefficients of ``(s0(mu_z) / (|s0(mu_z)| chi(mu_z))) sum_i conj(psi_i(mu)) psi_i(. zeta)``
    with the squeezed-argument functions replaced by their projections. Basis values
    at ``mu`` and ``mu_zeta`` are taken in the holomorphic frame, so the metric factor
    at ``mu_zeta`` cancels against the one inside ``chi``.
    """
    bmat = bmat or b_matrix(model, zeta)
    mu = model.chart.as_point(mu).reshape(1, -1)
    squeezed = squeeze_point(mu[0], zeta, model.chart).reshape(1, -1)
    values, _ = model.evaluate(mu)
    coeffs = _type_two_coeffs(model, values, coherent_batch(model, squeezed), bmat)
    return SqueezedStateII(coeffs[0], bmat.residual)


class SqueezedReport(VerificationReport):
    """Report of the squeezed-state property checks."""


def reality_deviation(model: QuantModel, points) -> float:
    """``max |conj(psi_i(nu)) - psi_i(conj nu)|`` in the unitary frame over the given points."""
    points = model.chart.as_points(points)
    conjugated = model.chart.from_complex(np.conj(model.chart.to_complex(points)))
    inside = model.chart.contains(conjugated)
    if not np.any(inside):
        return float("nan")
    values, weights = model.evaluate(points[inside])
    mirrored, mirrored_weights = model.evaluate(conjugated[inside])
    gap = np.conj(values) * np.sqrt(weights)[:, None]
    gap -= mirrored * np.sqrt(mirrored_weights)[:, None]
    return float(np.max(np.abs(gap)))


def squeezed_coverage(model: QuantModel, zeta: float) -> float:
    """Fraction of the model rule mass reached by squeezing with ``zeta``."""
    return SqueezeParams(zeta, model.chart).coverage(model.rule)


def _base_variable_resolution(model: QuantModel, zeta: float) -> float:
    """Deviation from a multiple of identity when integrating over the unsqueezed point."""
    squeezed, inside = squeeze_points(model.rule.nodes, zeta, model.chart)
    keep = inside.copy()
    keep[inside] = model.off_base_zero(squeezed[inside])
    batch = coherent_batch(model, squeezed[keep])
    scaled = np.sqrt(model.rule.weights[keep]) * batch.chi
    weighted = batch.coeffs * scaled[:, None]
    resolution = weighted.T @ weighted.conj()
    scalar = np.real(np.trace(resolution)) / model.dim
    return float(np.max(np.abs(resolution - scalar * np.eye(model.dim))) / scalar)


def _resolution_checks(model, zeta, config, report):
    coverage = squeezed_coverage(model, zeta)
    report.add(CheckResult.info("squeezed_coverage", coverage, "rule mass reached by squeezing"))
    if coverage < 1.0:
        report.add(
            CheckResult.skipped(
                "resolution_of_identity",
                "squeeze image misses a positive-measure part of the domain",
            )
        )
    else:
        report.add(
            CheckResult.bound(
                "resolution_of_identity",
                float(np.max(np.abs(resolution_matrix(model) - np.eye(model.dim)))),
                config.quadrature_tol,
                "integrated over the squeezed point",
            )
        )
    if zeta != 1:
        report.add(
            CheckResult.info(
                "resolution_base_variable",
                _base_variable_resolution(model, zeta),
                "relative deviation from a multiple of identity over the unsqueezed point",
            )
        )


def _reality_check(model, points, report):
    value = reality_deviation(model, points)
    if isinstance(model.chart, ParameterChart):
        report.add(
            CheckResult.info("reality_condition", value, "parameter chart; hypothesis only")
        )
    else:
        report.add(CheckResult.bound("reality_condition", value, REALITY_TOL))


def _type_two_checks(model, mu_points, zeta, config, report):
    try:
        bmat = b_matrix(model, zeta)
    except OutOfDomainError as err:
        logger.warning("Skipping type-II diagnostics: %s", err)
        for name in ("b_matrix_residual", "b_matrix_hermiticity", "hermitian_implication"):
            report.add(CheckResult.skipped(name, str(err)))
        return

    report.add(CheckResult.info("b_matrix_residual", bmat.residual))
    report.add(
        CheckResult.info(
            "b_matrix_hermiticity",
            bmat.hermiticity_deviation,
            "hermitian" if bmat.is_hermitian else "not hermitian",
        )
    )
    squeezed, inside = squeeze_points(mu_points, zeta, model.chart)
    mu_points, squeezed = mu_points[inside], squeezed[inside]
    keep = model.off_base_zero(squeezed)
    if not np.any(keep):
        report.add(
            CheckResult.skipped("hermitian_implication", "no squeezed point inside the domain")
        )
        return
    batch = coherent_batch(model, squeezed[keep])
    values, _ = model.evaluate(mu_points[keep])
    coeffs = _type_two_coeffs(model, values, batch, bmat)
    if bmat.is_hermitian:
        gap = float(np.max(np.linalg.norm(coeffs - batch.coeffs, axis=1)))
        report.add(
            CheckResult.bound(
                "hermitian_implication", gap, IMPLICATION_TOL + bmat.residual,
                "type-I and type-II states agree",
            )
        )
    else:
        report.add(CheckResult.skipped("hermitian_implication", "expansion matrix not hermitian"))
    report.add(
        CheckResult.info(
            "type_two_norm",
            float(np.max(np.abs(np.linalg.norm(coeffs, axis=1) - 1.0))),
            "max |norm - 1| of projected type-II states",
        )
    )


def verify_squeezed(
    model: QuantModel, zeta: float, config: Optional[CheckConfig] = None
) -> SqueezedReport:
    """Check the squeezed-state properties for a squeeze factor.

    Base points are drawn exactly as in :func:`verify_coherent` and squeezed; points
    whose squeeze leaves the domain or hits the base section zero set are dropped.
    For ``zeta = 1`` every shared record equals the coherent one.

    Returns:
        SqueezedReport: Records of the type-I properties, the reality condition and
        the type-II diagnostics.
    """
    config = config or CheckConfig()
    rng = np.random.default_rng(config.seed)
    mu_points = model.sample(rng, config.n_random_points)
    sections = unit_sections(rng, config.n_random_sections, model.dim)

    report = SqueezedReport(f"squeezed[{model.name}, zeta={zeta}]")
    squeezed, inside = squeeze_points(mu_points, zeta, model.chart)
    valid = inside.copy()
    valid[inside] = model.off_base_zero(squeezed[inside])
    if not np.any(valid):
        report.add(CheckResult.skipped("normalization", "no squeezed point inside the domain"))
        return report
    report.add(CheckResult.info("squeezed_points", int(np.sum(valid))))
    run_state_checks(model, squeezed[valid], sections, config, report)
    _resolution_checks(model, zeta, config, report)

    nodes, inside_nodes = squeeze_points(model.rule.nodes, zeta, model.chart)
    nodes = nodes[inside_nodes]
    add_overcompleteness_check(
        model, nodes[model.off_base_zero(nodes)], config, report, floor=False
    )
    _reality_check(model, model.rule.nodes, report)
    _type_two_checks(model, mu_points, zeta, config, report)
    logger.info("Squeezed checks on %s at zeta=%s: passed=%s", model.name, zeta, report.passed)
    return report
