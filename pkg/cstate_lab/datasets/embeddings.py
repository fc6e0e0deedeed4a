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
Module for reading user-supplied discrete embeddings from CSV tables.

The header names the parameter columns first, followed by ``re_z1, im_z1, ...,
re_zn, im_zn`` and a final ``weight`` column.

"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Union

import numpy as np

from .exceptions import EmbeddingTableError


@dataclass(frozen=True)
class EmbeddingTable:
    """Parameter nodes, their complex images and quadrature weights."""

    params: np.ndarray
    images: np.ndarray
    weights: np.ndarray
    param_names: tuple[str, ...]


def load_embedding_table(path: Union[str, Path]) -> EmbeddingTable:
    """Load a discrete embedding table.

    Args:
        path (str | Path): CSV file with header
            ``param..., re_z1, im_z1, ..., re_zn, im_zn, weight``.

    Returns:
        EmbeddingTable: Arrays of shape ``(S, d)``, ``(S, n)`` and ``(S,)``.

    Raises:
        EmbeddingTableError: If the file cannot be read, the header does not follow
            the schema or a cell is not a finite number.
    """
    try:
        data = np.atleast_1d(
            np.genfromtxt(path, delimiter=",", names=True, dtype=np.float64)
        )
    except (OSError, ValueError) as err:
        raise EmbeddingTableError(f"Cannot read embedding table {path}: {err}") from err
    names = data.dtype.names or ()
    if not names or names[-1] != "weight":
        raise EmbeddingTableError(f"Last column of {path} must be 'weight', got {names}.")
    image_names = [name for name in names if name.startswith(("re_z", "im_z"))]
    param_names = tuple(name for name in names[:-1] if name not in image_names)
    n = len(image_names) // 2
    expected = [f"{part}_z{i}" for i in range(1, n + 1) for part in ("re", "im")]
    if n == 0 or image_names != expected or not param_names:
        raise EmbeddingTableError(
            f"Columns of {path} do not match the embedding schema: {names}."
        )
    if list(names[: len(param_names)]) != list(param_names):
        raise EmbeddingTableError(f"Parameter columns of {path} must precede the image columns.")
    if data.size == 0:
        raise EmbeddingTableError(f"Embedding table {path} has no rows.")

    cells = np.column_stack([data[name] for name in names])
    bad = np.argwhere(~np.isfinite(cells))
    if bad.size:
        row, col = bad[0]
        raise EmbeddingTableError(
            f"Cell '{names[col]}' in data row {row + 1} of {path} is not a finite number."
        )

    params = np.column_stack([data[name] for name in param_names])
    images = np.column_stack(
        [data[f"re_z{i}"] + 1j * data[f"im_z{i}"] for i in range(1, n + 1)]
    )
    return EmbeddingTable(params, images, np.asarray(data["weight"]), param_names)
