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
Module for the exponential path of the representation: ``U_g = exp(rho(log g))``.

"""
from __future__ import annotations

from typing import Optional

import numpy as np
from scipy.linalg import expm, logm

from ..quantization.hilbert import QuantModel
from .prequantum import basis_transform, raw_representation, to_orthonormal


def phase_aligned_deviation(a: np.ndarray, b: np.ndarray) -> float:
    """Max entrywise ``|a - c b|`` for the unit scalar ``c`` best aligning ``b`` with ``a``."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    inner = np.vdot(b, a)
    phase = inner / abs(inner) if abs(inner) > 0 else 1.0
    return float(np.max(np.abs(a - phase * b)))


def exponential_action(g, n: int, k: int, model: Optional[QuantModel] = None) -> np.ndarray:
    """``expm(rho(logm g))`` in the orthonormal basis.

    The principal logarithm may carry a central part, so the result agrees with the
    induced action up to a unit scalar.
    """
    log = logm(np.asarray(g, dtype=np.complex128))
    rep = to_orthonormal(raw_representation(log, n, k), basis_transform(n, k, model))
    return expm(rep)
