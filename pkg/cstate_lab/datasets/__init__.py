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
Seeded random points, sections and group elements, and user embedding tables.

Functions
----------

.. autosummary::
    :toctree: ../stubs/

    chart_points
    disk_points
    angle_points
    unit_sections
    sample_special_unitaries
    load_embedding_table

Exceptions
------------

.. autosummary::
    :toctree: ../stubs/

    EmbeddingTableError

"""

from .embeddings import EmbeddingTable, load_embedding_table
from .exceptions import EmbeddingTableError
from .groups import random_special_unitary, sample_special_unitaries
from .samplers import angle_points, chart_points, disk_points, table_points, unit_sections

__all__ = [
    "EmbeddingTable",
    "EmbeddingTableError",
    "load_embedding_table",
    "random_special_unitary",
    "sample_special_unitaries",
    "angle_points",
    "chart_points",
    "disk_points",
    "table_points",
    "unit_sections",
]
