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
Module for drawing seeded random points and sections used by property checks.

"""
import numpy as np


def chart_points(rng: np.random.Generator, count: int, n: int, t_max: float = 0.95) -> np.ndarray:
    """Draw Fubini-Study distributed points of the CP^n chart.

    Moment coordinates are drawn uniformly from the simplex and points with
    ``|z|^2 / (1 + |z|^2) > t_max`` are rejected, which keeps samples away from
    the hyperplane at infinity.

    Args:
        rng (np.random.Generator): Random number generator.
        count (int): Number of points.
        n (int): Chart dimension.
        t_max (float): Upper bound for ``|z|^2 / (1 + |z|^2)``.

    Returns:
        np.ndarray: Complex array of shape ``(count, n)``.
    """
    points = np.empty((0, n), dtype=np.complex128)
    while points.shape[0] < count:
        u = rng.dirichlet(np.ones(n + 1), size=count)
        angles = rng.uniform(0.0, 2 * np.pi, size=(count, n))
        keep = u[:, 0] >= 1.0 - t_max
        moduli = np.sqrt(u[keep, 1:] / u[keep, :1])
        points = np.concatenate([points, moduli * np.exp(1j * angles[keep])])
    return points[:count]


def disk_points(rng: np.random.Generator, count: int, radius: float = 0.7) -> np.ndarray:
    """Draw area-uniform points of the disk ``|z| <= radius``."""
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, size=count))
    theta = rng.uniform(0.0, 2 * np.pi, size=count)
    return (r * np.exp(1j * theta)).reshape(-1, 1)


def angle_points(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    """Draw uniform points of the angle box ``[0, 2 pi)^dim``."""
    return rng.uniform(0.0, 2 * np.pi, size=(count, dim))


def table_points(rng: np.random.Generator, count: int, nodes: np.ndarray) -> np.ndarray:
    """Draw rows of a finite parameter table with replacement."""
    nodes = np.asarray(nodes)
    return nodes[rng.integers(0, nodes.shape[0], size=count)]


def unit_sections(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    """Draw unit coefficient vectors with complex normal entries.

    Returns:
        np.ndarray: Array of shape ``(count, dim)`` whose rows have norm one.
    """
    z = rng.normal(size=(count, dim)) + 1j * rng.normal(size=(count, dim))
    return z / np.linalg.norm(z, axis=1, keepdims=True)
