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
Module for Perelomov coherent states of SU(n+1) on CP^n and their comparison with
the Rawnsley coherent states.

The group acts on homogeneous polynomials by ``(U_g P)(Z) = P(g^H Z)``. The fiducial
vector is ``psi_0``, proportional to ``Z_0^k``, fixed up to a character by the
isotropy group of the base point ``p0 = [1 : 0 : ... : 0]``.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import torch

from ..datasets.groups import random_special_unitary
from ..quantization.checks import CheckConfig, CheckResult, VerificationReport
from ..quantization.exceptions import InvalidArgumentError
from ..quantization.hilbert import QuantModel, cpn_model
from ..states.coherent import coherent_state
from .exceptions import ChartExclusionError, NonUnitaryError
from .exponential import exponential_action, phase_aligned_deviation
from .generators import su_basis
from .prequantum import (
    basis_transform,
    commutation_report,
    equivariance_report,
    homogeneous_exponents,
    kostant_report,
    prequantum_op,
    to_orthonormal,
)

logger = logging.getLogger(__name__)

UNITARY_TOL = 1e-12
CHART_TOL = 1e-8
OVERLAP_TOL = {1: 1e-8, 2: 1e-7}
KOSTANT_TOL = 1e-9
EXPONENTIAL_MAX_K = 4


def check_special_unitary(g: np.ndarray, n: int, tol: float = UNITARY_TOL) -> np.ndarray:
    """Validate an element of SU(n+1).

    Raises:
        NonUnitaryError: If ``g`` has the wrong shape, is not unitary or has
            determinant different from one.
    """
    g = np.asarray(g, dtype=np.complex128)
    if g.shape != (n + 1, n + 1):
        raise NonUnitaryError(f"Expected a {n + 1}x{n + 1} matrix, got {g.shape}.")
    if np.max(np.abs(g.conj().T @ g - np.eye(n + 1))) > tol:
        raise NonUnitaryError("Group element is not unitary.")
    if abs(np.linalg.det(g) - 1.0) > tol:
        raise NonUnitaryError(f"Group element has determinant {np.linalg.det(g):.6g}.")
    return g


def _multiply(poly: dict, linear: np.ndarray) -> dict:
    product: dict = {}
    for exponent, coeff in poly.items():
        for b, c in enumerate(linear):
            if c == 0:
                continue
            target = list(exponent)
            target[b] += 1
            key = tuple(target)
            product[key] = product.get(key, 0) + coeff * c
    return product


def raw_induced_action(g: np.ndarray, n: int, k: int) -> np.ndarray:
    """``P -> P(g^H Z)`` on the homogeneous monomial basis, by exact expansion."""
    exponents = homogeneous_exponents(n, k)
    index = {beta: i for i, beta in enumerate(exponents)}
    gh = np.asarray(g, dtype=np.complex128).conj().T
    action = np.zeros((len(exponents), len(exponents)), dtype=np.complex128)
    for col, beta in enumerate(exponents):
        poly = {(0,) * (n + 1): 1.0 + 0j}
        for a, power in enumerate(beta):
            for _ in range(power):
                poly = _multiply(poly, gh[a])
        for exponent, coeff in poly.items():
            action[index[exponent], col] += coeff
    return action


def induced_action(g, n: int, k: int, model: Optional[QuantModel] = None) -> np.ndarray:
    """Unitary ``U_g`` in the orthonormal basis.

    Raises:
        NonUnitaryError: If ``g`` is not in SU(n+1).
    """
    g = check_special_unitary(g, n)
    return to_orthonormal(raw_induced_action(g, n, k), basis_transform(n, k, model))


def perelomov_state(g, n: int, k: int, model: Optional[QuantModel] = None) -> np.ndarray:
    """Perelomov coherent state ``U_g psi_0`` in the orthonormal basis."""
    return induced_action(g, n, k, model)[:, 0]


def base_point_image(g: np.ndarray, tol: float = CHART_TOL) -> np.ndarray:
    """Chart coordinates of ``g p0``.

    Raises:
        ChartExclusionError: If ``g p0`` lies on the hyperplane at infinity.
    """
    g = np.asarray(g, dtype=np.complex128)
    if abs(g[0, 0]) < tol:
        raise ChartExclusionError(
            f"Image of the base point is off the chart, |g00|={abs(g[0, 0]):.3e}."
        )
    return g[1:, 0] / g[0, 0]


def rawnsley_perelomov_overlap(g, n: int, k: int, model: Optional[QuantModel] = None) -> float:
    """``|<U_g psi_0, phi_{g p0}>|``, equal to one when the states agree up to phase.

    Args:
        g: Element of SU(n+1).
        n (int): Chart dimension.
        k (int): Bundle power.
        model (QuantModel, optional): CP^n model; built with default orders when omitted.

    Raises:
        NonUnitaryError: If ``g`` is not special unitary.
        ChartExclusionError: If ``g p0`` is not in the chart.
    """
    model = cpn_model(n, k) if model is None else model
    state = perelomov_state(g, n, k, model)
    mu = base_point_image(g)
    return float(abs(np.vdot(coherent_state(model, mu).coeffs, state)))


@dataclass(frozen=True)
class IsotropyPhase:
    """Character value of an isotropy element on the fiducial vector."""

    phase: complex
    deviation: float


def isotropy_phase(kelem, n: int, k: int, model: Optional[QuantModel] = None) -> IsotropyPhase:
    """Phase of ``U_k psi_0 = phase psi_0`` for ``kelem`` in S(U(1) x U(n)).

    The expected character is ``conj(kelem[0, 0])^k``; ``deviation`` measures how far
    ``U_k psi_0`` is from that multiple of ``psi_0``.

    Raises:
        InvalidArgumentError: If ``kelem`` does not fix the base point.
    """
    kelem = check_special_unitary(kelem, n)
    if np.max(np.abs(kelem[0, 1:])) > UNITARY_TOL or np.max(np.abs(kelem[1:, 0])) > UNITARY_TOL:
        raise InvalidArgumentError("Element is not block diagonal, it moves the base point.")
    state = perelomov_state(kelem, n, k, model)
    phase = complex(np.conj(kelem[0, 0]) ** k)
    fiducial = np.zeros_like(state)
    fiducial[0] = 1.0
    return IsotropyPhase(phase, float(np.max(np.abs(state - phase * fiducial))))


def sample_chart_elements(
    n: int, count: int, seed: Optional[int] = None, max_retries: int = 3
) -> list[np.ndarray]:
    """Draw SU(n+1) elements whose base point image lies in the chart.

    Each draw is retried up to ``max_retries`` times when ``g p0`` falls on the
    hyperplane at infinity.

    Raises:
        ChartExclusionError: If every retry is excluded.
    """
    generator = torch.Generator()
    if seed is not None:
        generator.manual_seed(seed)
    elements = []
    for _ in range(count):
        for attempt in range(max_retries + 1):
            g = random_special_unitary(n + 1, generator)
            if abs(g[0, 0]) >= CHART_TOL:
                elements.append(g)
                break
            if attempt == max_retries:
                raise ChartExclusionError(
                    f"Failed to draw a group element inside the chart after {max_retries} retries."
                )
    return elements


class RepresentationReport(VerificationReport):
    """Report of the representation and Perelomov checks."""


def _spectrum_deviation(n: int, k: int, model: QuantModel) -> float:
    diagonal = su_basis(n)[-1]
    eigenvalues = np.linalg.eigvalsh(prequantum_op(diagonal, n, k, model))
    ladder = np.arange(k + 1) - k / 2
    return float(np.max(np.abs(np.sort(eigenvalues) - ladder)))


def verify_representation(
    n: int, k: int, config: Optional[CheckConfig] = None, model: Optional[QuantModel] = None
) -> RepresentationReport:
    """Run the representation checks for SU(n+1) at bundle power ``k``.

    Records commutation relations, the spin ladder (n = 1), equivariance of the
    moment map, the pointwise Kostant formula against the matrix action, unitarity,
    norm and projective homomorphism of ``U_g``, the isotropy character, the
    Rawnsley-Perelomov overlap and, for small ``k``, the exponential path.
    """
    config = CheckConfig() if config is None else config
    model = cpn_model(n, k) if model is None else model
    report = RepresentationReport(f"repn(n={n}, k={k})")
    report.add(
        CheckResult.bound("commutation", commutation_report(n, k, model), config.coefficient_tol)
    )
    if n == 1:
        report.add(CheckResult.bound("spin_spectrum", _spectrum_deviation(n, k, model), 1e-8))

    rng = np.random.default_rng(config.seed)
    points = model.sample(rng, min(config.n_random_points, 20))
    report.add(CheckResult.bound("equivariance", equivariance_report(n, points), 1e-10))
    report.add(
        CheckResult.bound("kostant_formula", kostant_report(n, k, points, model), KOSTANT_TOL)
    )

    elements = sample_chart_elements(n, config.n_random_points, seed=config.seed)
    unitarity = norm = homomorphism = overlap = exponential = 0.0
    previous = None
    for g in elements:
        u = induced_action(g, n, k, model)
        unitarity = max(unitarity, float(np.max(np.abs(u.conj().T @ u - np.eye(model.dim)))))
        norm = max(norm, abs(float(np.linalg.norm(u[:, 0])) - 1.0))
        mu = base_point_image(g)
        fidelity = abs(np.vdot(coherent_state(model, mu).coeffs, u[:, 0]))
        overlap = max(overlap, abs(1.0 - fidelity))
        if previous is not None:
            composed = perelomov_state(previous @ g, n, k, model)
            product = induced_action(previous, n, k, model) @ u[:, 0]
            homomorphism = max(homomorphism, abs(1.0 - abs(np.vdot(composed, product))))
        if k <= EXPONENTIAL_MAX_K:
            exponential = max(
                exponential, phase_aligned_deviation(exponential_action(g, n, k, model), u)
            )
        previous = g

    report.add(CheckResult.bound("unitarity", unitarity, config.coefficient_tol))
    report.add(CheckResult.bound("state_norm", norm, config.coefficient_tol))
    report.add(CheckResult.bound("projective_homomorphism", homomorphism, 1e-8))
    report.add(CheckResult.bound("rawnsley_overlap", overlap, OVERLAP_TOL.get(n, 1e-7)))
    if k <= EXPONENTIAL_MAX_K:
        report.add(CheckResult.bound("exponential_path", exponential, 1e-8))
    else:
        report.add(CheckResult.skipped("exponential_path", f"k={k} above {EXPONENTIAL_MAX_K}"))

    diagonal = np.diag(np.exp(1j * np.linspace(0.3, -0.3 * n, n + 1)))
    diagonal[-1, -1] /= np.linalg.det(diagonal)
    isotropy = isotropy_phase(diagonal, n, k, model)
    report.add(CheckResult.bound("isotropy_character", isotropy.deviation, config.coefficient_tol))
    logger.info("Representation checks for n=%d, k=%d: passed=%s", n, k, report.passed)
    return report
