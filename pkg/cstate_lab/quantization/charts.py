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
Module defining the coordinate charts on which points of a quantization model live.

A chart knows how to turn its points into complex coordinates (the coordinates in
which squeezing acts) and back, and whether a point belongs to its domain.

"""
from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Optional

import numpy as np


class Chart(ABC):
    """Abstract coordinate chart.

    Points are one-dimensional numpy arrays of length :attr:`dim`; batches of
    points are two-dimensional arrays with one point per row.
    """

    def __init__(self, dim: int):
        if dim < 1:
            raise ValueError(f"Chart dimension must be at least 1, got {dim}.")
        self.dim = dim

    def as_point(self, point) -> np.ndarray:
        """Coerce a scalar or sequence into a point of this chart."""
        arr = np.atleast_1d(np.asarray(point, dtype=self.dtype))
        if arr.shape != (self.dim,):
            raise ValueError(
                f"Expected a point with {self.dim} coordinates, got shape {arr.shape}."
            )
        return arr

    def as_points(self, points) -> np.ndarray:
        """Coerce a batch of points into an array of shape ``(count, dim)``."""
        arr = np.asarray(points, dtype=self.dtype)
        if arr.ndim == 1:
            arr = arr.reshape(-1, self.dim) if self.dim > 1 else arr.reshape(-1, 1)
        if arr.ndim != 2 or arr.shape[1] != self.dim:
            raise ValueError(f"Expected points of dimension {self.dim}, got shape {arr.shape}.")
        return arr

    @property
    @abstractmethod
    def dtype(self) -> type:
        """Numpy dtype of point coordinates."""

    @abstractmethod
    def to_complex(self, points: np.ndarray) -> np.ndarray:
        """Map a batch of points to complex chart coordinates."""

    @abstractmethod
    def from_complex(self, coords: np.ndarray) -> np.ndarray:
        """Inverse of :meth:`to_complex`."""

    @abstractmethod
    def contains(self, points: np.ndarray) -> np.ndarray:
        """Boolean mask of the points that lie in the chart domain."""


class ComplexChart(Chart):
    """Affine chart with complex coordinates.

    Args:
        dim (int): Number of complex coordinates.
        radius (float, optional): If given, the domain is the open polydisk
            ``|z| < radius`` (Euclidean norm); otherwise all of ``C^dim``.
    """

    def __init__(self, dim: int, radius: Optional[float] = None):
        super().__init__(dim)
        self.radius = radius

    @property
    def dtype(self) -> type:
        return np.complex128

    def to_complex(self, points: np.ndarray) -> np.ndarray:
        return np.asarray(points, dtype=np.complex128)

    def from_complex(self, coords: np.ndarray) -> np.ndarray:
        return np.asarray(coords, dtype=np.complex128)

    def contains(self, points: np.ndarray) -> np.ndarray:
        pts = self.as_points(points)
        mask = np.all(np.isfinite(pts), axis=1)
        if self.radius is not None:
            mask &= np.linalg.norm(pts, axis=1) < self.radius
        return mask

    def __repr__(self) -> str:
        return f"ComplexChart(dim={self.dim}, radius={self.radius})"


class ParameterChart(Chart):
    """Chart on a box of real parameters.

    Consecutive parameters are paired into complex coordinates
    ``theta_1 + i theta_2``; an unpaired trailing parameter becomes a real
    coordinate. The box is closed: ``lower <= theta <= upper`` componentwise.
    """

    def __init__(self, dim: int, lower: float = 0.0, upper: float = 2 * np.pi):
        super().__init__(dim)
        self.lower = lower
        self.upper = upper

    @property
    def dtype(self) -> type:
        return np.float64

    def to_complex(self, points: np.ndarray) -> np.ndarray:
        pts = self.as_points(points)
        pairs = self.dim // 2
        coords = pts[:, 0 : 2 * pairs : 2] + 1j * pts[:, 1 : 2 * pairs : 2]
        if self.dim % 2:
            coords = np.concatenate([coords, pts[:, -1:].astype(np.complex128)], axis=1)
        return coords

    def from_complex(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords, dtype=np.complex128)
        pts = np.empty((coords.shape[0], self.dim))
        pairs = self.dim // 2
        pts[:, 0 : 2 * pairs : 2] = coords[:, :pairs].real
        pts[:, 1 : 2 * pairs : 2] = coords[:, :pairs].imag
        if self.dim % 2:
            pts[:, -1] = coords[:, -1].real
        return pts

    def contains(self, points: np.ndarray) -> np.ndarray:
        pts = self.as_points(points)
        return np.all(np.isfinite(pts) & (pts >= self.lower) & (pts <= self.upper), axis=1)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim})"


class AngleChart(ParameterChart):
    """Chart on the angle box ``[0, 2 pi]^dim`` of a circle or torus."""

    def __init__(self, dim: int):
        super().__init__(dim, lower=0.0, upper=2 * np.pi)


class DiscreteChart(ParameterChart):
    """Chart whose domain is a finite table of parameter nodes."""

    def __init__(self, nodes: np.ndarray):
        nodes = np.asarray(nodes, dtype=np.float64)
        super().__init__(nodes.shape[1], lower=-np.inf, upper=np.inf)
        self.nodes = nodes
        self._index = {tuple(row): i for i, row in enumerate(nodes)}

    def index_of(self, points: np.ndarray) -> np.ndarray:
        """Row indices of the given points in the node table, -1 where absent."""
        pts = self.as_points(points)
        return np.array([self._index.get(tuple(row), -1) for row in pts], dtype=int)

    def contains(self, points: np.ndarray) -> np.ndarray:
        return self.index_of(points) >= 0
