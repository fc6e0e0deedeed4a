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
Module for the weighted Bergman space on the hyperbolic disk, truncated to a
finite number of basis functions, with its coherent-state series and truncation
diagnostics.

The orthonormal basis is ``psi_i(z) = c_i z^i`` with
``c_i^2 = Gamma(1/hbar + i) / (Gamma(1/hbar) i!)``, so that
``sum_i |psi_i(z)|^2 = (1 - |z|^2)^(-1/hbar)``.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import partial
from typing import Optional, Sequence

import numpy as np

from ..datasets.samplers import disk_points
from ..quantization.charts import ComplexChart
from ..quantization.checks import ConvergenceTable
from ..quantization.exceptions import InvalidArgumentError, OutOfDomainError
from ..quantization.hilbert import QuantModel, monomials
from ..quantization.quadrature import disk_rule
from ..states.squeezed import squeeze_point, squeezed_II

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiskModelParams:
    """Planck constant and truncation of the disk model."""

    hbar: float
    cutoff: int

    def __post_init__(self):
        if self.hbar <= 0 or 1.0 / self.hbar <= 1.0:
            raise InvalidArgumentError(f"Disk model requires 1/hbar > 1, got hbar={self.hbar}.")
        if int(self.cutoff) != self.cutoff or self.cutoff < 1:
            raise InvalidArgumentError(f"Cutoff must be a positive integer, got {self.cutoff}.")


def disk_constants(hbar: float, count: int) -> np.ndarray:
    """Basis constants ``c_i`` for ``i < count`` by cumulative products."""
    inv = 1.0 / hbar
    j = np.arange(count - 1, dtype=np.float64)
    squares = np.concatenate([[1.0], np.cumprod((inv + j) / (j + 1.0))])
    return np.sqrt(squares)


def _unit_weight(points: np.ndarray) -> np.ndarray:
    return np.ones(points.shape[0])


def disk_model(
    hbar: float,
    cutoff: int,
    radial_order: Optional[int] = None,
    angular_order: Optional[int] = None,
) -> QuantModel:
    """Truncated disk model with ``cutoff`` basis functions.

    The weight ``(1/hbar - 1)(1 - |z|^2)^(1/hbar)`` and the hyperbolic measure are
    both folded into :func:`disk_rule`, so the model weight is one.

    Args:
        hbar (float): Planck constant with ``1/hbar > 1``.
        cutoff (int): Number of basis functions.
        radial_order (int, optional): Defaults to ``cutoff + 2``.
        angular_order (int, optional): Defaults to ``2 cutoff + 2``.

    Raises:
        InvalidArgumentError: If ``1/hbar <= 1`` or the cutoff is not positive.
    """
    params = DiskModelParams(hbar, cutoff)
    rule = disk_rule(radial_order or cutoff + 2, angular_order or 2 * cutoff + 2, hbar)
    exponents = [(i,) for i in range(params.cutoff)]
    return QuantModel(
        name=f"disk(hbar={hbar}, cutoff={cutoff})",
        rule=rule,
        chart=ComplexChart(1, radius=1.0),
        raw_basis=partial(monomials, exponents=np.array(exponents)),
        weight=_unit_weight,
        sampler=disk_points,
        exponents=exponents,
        ortho_transform=np.diag(disk_constants(hbar, params.cutoff)),
    )


def _modulus_squared(mu) -> float:
    value = complex(np.atleast_1d(mu)[0])
    modulus = abs(value) ** 2
    if modulus >= 1.0:
        raise OutOfDomainError(f"Point {value} is not inside the unit disk.")
    return modulus


def disk_chi_closed_form(mu, hbar: float) -> float:
    """``chi(mu)^2 = (1 - |mu|^2)^(-1/hbar)`` of the full disk space.

    Raises:
        OutOfDomainError: If ``|mu| >= 1``.
    """
    return (1.0 - _modulus_squared(mu)) ** (-1.0 / hbar)


def disk_tail_bound(mu, hbar: float, cutoff: int) -> float:
    """Upper bound on ``sum_{i >= cutoff} |psi_i(mu)|^2``.

    Consecutive terms have ratio ``x (1/hbar + i) / (i + 1)`` with ``x = |mu|^2``,
    which decreases in ``i``, so the tail is dominated by a geometric series.
    Returns ``inf`` when the leading ratio is not below one.
    """
    x = _modulus_squared(mu)
    if x == 0:
        return 0.0
    ratio = x * (1.0 / hbar + cutoff) / (cutoff + 1.0)
    if ratio >= 1.0:
        return float("inf")
    leading = disk_constants(hbar, cutoff + 1)[-1] ** 2 * x**cutoff
    return float(leading / (1.0 - ratio))


def _padded(vector: np.ndarray, size: int) -> np.ndarray:
    out = np.zeros(size, dtype=np.complex128)
    out[: vector.size] = vector
    return out


def _disk_series(hbar: float, zeta: float, mu: np.ndarray, cutoff: int):
    model = disk_model(hbar, cutoff)
    chart = model.chart
    squeezed = squeeze_point(mu, zeta, chart)
    values, _ = model.evaluate(np.vstack([mu, squeezed]))
    coherent = np.conj(values[0]) / np.linalg.norm(values[0])
    type_one = np.conj(values[1]) / np.linalg.norm(values[1])
    try:
        type_two = squeezed_II(model, mu, zeta).coeffs
    except OutOfDomainError:
        # squeezed quadrature nodes leave the disk, no projection available
        type_two = np.full(cutoff, np.nan, dtype=np.complex128)
    return coherent, type_one, type_two, float(np.sum(np.abs(values[0]) ** 2))


def disk_convergence_report(
    hbar: float, zeta: float, radius: float, cutoffs: Sequence[int]
) -> ConvergenceTable:
    """Increments of the disk state series between consecutive cutoffs.

    The base point is ``radius * exp(i pi / 4)``. Each cutoff is compared with the
    next one in the list and the last with twice its value. Columns: coefficient
    increments of the coherent state and of both squeezed states, the increment of
    the truncated ``chi^2`` and the tail bound of ``chi^2`` at the cutoff.

    Raises:
        OutOfDomainError: If the base point or its squeeze leaves the disk.
    """
    if not 0 <= radius < 1:
        raise OutOfDomainError(f"Radius must lie in [0, 1), got {radius}.")
    mu = np.array([radius * np.exp(1j * np.pi / 4)])
    squeeze_point(mu, zeta, ComplexChart(1, radius=1.0))
    ordered = sorted(int(c) for c in cutoffs)
    targets = ordered[1:] + [2 * ordered[-1]]
    table = ConvergenceTable(
        ["cutoff", "coherent", "squeezed_I", "squeezed_II", "chi_squared", "tail_bound"]
    )
    cache: dict[int, tuple] = {}
    for cutoff, target in zip(ordered, targets):
        for size in (cutoff, target):
            if size not in cache:
                cache[size] = _disk_series(hbar, zeta, mu, size)
        small, large = cache[cutoff], cache[target]
        increments = [
            float(np.linalg.norm(_padded(a, target) - b)) for a, b in zip(small[:3], large[:3])
        ]
        table.rows.append(
            (
                cutoff,
                *increments,
                abs(large[3] - small[3]),
                disk_tail_bound(mu, hbar, cutoff),
            )
        )
        logger.debug("Disk series at cutoff %d: %s", cutoff, increments)
    return table
