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
Module providing the pullback and hyperbolic disk quantization models.

Classes
---------

.. autosummary::
    :toctree: ../stubs/

    Embedding
    RankReport

Functions
----------

.. autosummary::
    :toctree: ../stubs/

    circle_embedding
    torus_embedding
    discrete_embedding
    load_embedding_csv
    make_pullback_model
    pullback_coherent
    disk_model
    disk_chi_closed_form
    disk_tail_bound
    disk_convergence_report

Exceptions
------------

.. autosummary::
    :toctree: ../stubs/

    EmptyModelError

"""

from .disk import (
    disk_chi_closed_form,
    disk_convergence_report,
    disk_model,
    disk_tail_bound,
)
from .exceptions import EmptyModelError
from .pullback import (
    Embedding,
    RankReport,
    circle_embedding,
    discrete_embedding,
    load_embedding_csv,
    make_pullback_model,
    pullback_coherent,
    torus_embedding,
)

__all__ = [
    "disk_chi_closed_form",
    "disk_convergence_report",
    "disk_model",
    "disk_tail_bound",
    "EmptyModelError",
    "Embedding",
    "RankReport",
    "circle_embedding",
    "discrete_embedding",
    "load_embedding_csv",
    "make_pullback_model",
    "pullback_coherent",
    "torus_embedding",
]
