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
Module for the Fubini-Study Poisson bracket on the CP^n chart.

The inverse metric is ``Omega^{ij} = (1 + |z|^2)(delta_ij + z_i conj(z_j))`` and

    {F, G} = i sum_ij Omega^{ij} (dF/dz_i dG/dconj(z_j) - dF/dconj(z_j) dG/dz_i).

The factor ``i`` makes the su(2) moment maps satisfy ``{tau_x, tau_y} = tau_z``.

"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..quantization.exceptions import NumericalFailureError

FD_STEP = 1e-5

Wirtinger = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class SymbolFunction:
    """Function on the chart with optional closed-form Wirtinger derivatives.

    Attributes:
        value (Callable): Maps a chart point of shape ``(n,)`` to a complex number.
        wirtinger (Callable, optional): Maps a chart point to ``(dF/dz, dF/dconj(z))``.
    """

    value: Callable[[np.ndarray], complex]
    wirtinger: Optional[Wirtinger] = None

    def __call__(self, z) -> complex:
        return complex(self.value(np.atleast_1d(np.asarray(z, dtype=np.complex128))))

    def derivatives(self, z, step: float = FD_STEP) -> tuple[np.ndarray, np.ndarray]:
        """Wirtinger derivatives, closed form when available, else central differences."""
        z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
        if self.wirtinger is not None:
            dz, dzbar = self.wirtinger(z)
            return np.asarray(dz, dtype=np.complex128), np.asarray(dzbar, dtype=np.complex128)
        return finite_difference_wirtinger(self.value, z, step)

    def __mul__(self, other: SymbolFunction) -> SymbolFunction:
        return product_function(self, other)


def finite_difference_wirtinger(
    f: Callable[[np.ndarray], complex], z: np.ndarray, step: float = FD_STEP
) -> tuple[np.ndarray, np.ndarray]:
    """Central-difference Wirtinger derivatives of ``f`` at ``z``."""
    dz = np.zeros(z.size, dtype=np.complex128)
    dzbar = np.zeros(z.size, dtype=np.complex128)
    for i in range(z.size):
        shift = np.zeros(z.size, dtype=np.complex128)
        shift[i] = step
        dx = (complex(f(z + shift)) - complex(f(z - shift))) / (2 * step)
        dy = (complex(f(z + 1j * shift)) - complex(f(z - 1j * shift))) / (2 * step)
        dz[i] = (dx - 1j * dy) / 2
        dzbar[i] = (dx + 1j * dy) / 2
    return dz, dzbar


def product_function(f: SymbolFunction, g: SymbolFunction) -> SymbolFunction:
    """Pointwise product with Leibniz-rule derivatives."""

    def value(z):
        return f(z) * g(z)

    def wirtinger(z):
        fz, fzbar = f.derivatives(z)
        gz, gzbar = g.derivatives(z)
        return fz * g(z) + f(z) * gz, fzbar * g(z) + f(z) * gzbar

    return SymbolFunction(value, wirtinger)


def constant_function(c: complex) -> SymbolFunction:
    """Constant function with vanishing derivatives."""

    def wirtinger(z):
        zeros = np.zeros(z.size, dtype=np.complex128)
        return zeros, zeros

    return SymbolFunction(lambda z: c, wirtinger)


def inverse_fubini_study(z: np.ndarray) -> np.ndarray:
    """``Omega^{ij}`` at a chart point."""
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    return (1.0 + np.vdot(z, z).real) * (np.eye(z.size) + np.outer(z, z.conj()))


def poisson_fs(F: SymbolFunction, G: SymbolFunction, p) -> complex:
    """Fubini-Study Poisson bracket ``{F, G}(p)``.

    Raises:
        NumericalFailureError: If a derivative is not finite at ``p``.
    """
    z = np.atleast_1d(np.asarray(p, dtype=np.complex128))
    fz, fzbar = F.derivatives(z)
    gz, gzbar = G.derivatives(z)
    if not all(np.all(np.isfinite(d)) for d in (fz, fzbar, gz, gzbar)):
        raise NumericalFailureError(f"Non-finite derivative at {z}.")
    omega = inverse_fubini_study(z)
    return complex(1j * (fz @ omega @ gzbar - gz @ omega @ fzbar))
