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
Module for drawing seeded random special unitary matrices.

"""
from typing import Optional

import numpy as np
import torch


def _random_traceless_hermitian(
    size: int, count: int, scale: float, generator: torch.Generator
) -> torch.Tensor:
    """Batch of traceless Hermitian matrices with complex normal entries."""
    real = torch.randn(count, size, size, generator=generator, dtype=torch.float64)
    imag = torch.randn(count, size, size, generator=generator, dtype=torch.float64)
    a = torch.complex(real, imag)
    h = scale * (a + a.conj().transpose(-2, -1)) / 2
    trace = torch.diagonal(h, dim1=-2, dim2=-1).sum(-1)
    eye = torch.eye(size, dtype=torch.complex128)
    return h - trace[:, None, None] * eye / size


def sample_special_unitaries(
    size: int, count: int, seed: Optional[int] = None, scale: float = 1.0
) -> np.ndarray:
    """Draw ``count`` matrices ``exp(i H)`` with ``H`` traceless Hermitian.

    Args:
        size (int): Matrix size ``N``.
        count (int): Number of matrices.
        seed (int, optional): Seed of the torch generator.
        scale (float): Standard deviation of the entries of ``H``.

    Returns:
        np.ndarray: Complex array of shape ``(count, N, N)`` in SU(N).
    """
    generator = torch.Generator()
    if seed is not None:
        generator.manual_seed(seed)
    h = _random_traceless_hermitian(size, count, scale, generator)
    u = torch.linalg.matrix_exp(1j * h)  # pylint: disable=not-callable
    return u.numpy()


def random_special_unitary(size: int, generator: torch.Generator, scale: float = 1.0):
    """Draw one SU(N) matrix from an existing torch generator."""
    h = _random_traceless_hermitian(size, 1, scale, generator)
    return torch.linalg.matrix_exp(1j * h)[0].numpy()  # pylint: disable=not-callable
