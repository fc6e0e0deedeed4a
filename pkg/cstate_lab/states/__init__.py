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
Module providing Rawnsley-type coherent states and squeezed states.

Classes
---------

.. autosummary::
    :toctree: ../stubs/

    CoherentStateRecord
    CoherentReport
    SqueezeParams
    BMatrix
    SqueezedStateII
    SqueezedReport

Functions
----------

.. autosummary::
    :toctree: ../stubs/

    coherent_state
    chi_squared
    overlap
    resolution_matrix
    overcompleteness
    verify_coherent
    squeeze_point
    squeezed_I
    b_matrix
    squeezed_II
    verify_squeezed

"""

from .coherent import (
    CoherentReport,
    CoherentStateRecord,
    chi_squared,
    coherent_batch,
    coherent_state,
    evaluate_section,
    overcompleteness,
    overlap,
    resolution_matrix,
    verify_coherent,
)
from .squeezed import (
    BMatrix,
    SqueezedReport,
    SqueezedStateII,
    SqueezeParams,
    b_matrix,
    reality_deviation,
    squeeze_point,
    squeezed_I,
    squeezed_II,
    verify_squeezed,
)

__all__ = [
    "CoherentReport",
    "CoherentStateRecord",
    "chi_squared",
    "coherent_batch",
    "coherent_state",
    "evaluate_section",
    "overcompleteness",
    "overlap",
    "resolution_matrix",
    "verify_coherent",
    "BMatrix",
    "SqueezedReport",
    "SqueezedStateII",
    "SqueezeParams",
    "b_matrix",
    "reality_deviation",
    "squeeze_point",
    "squeezed_I",
    "squeezed_II",
    "verify_squeezed",
]
