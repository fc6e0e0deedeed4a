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
Module providing the su(n+1) prequantum representation on sections over CP^n and
Perelomov coherent states.

Classes
---------

.. autosummary::
    :toctree: ../stubs/

    LieGenerator
    KahlerChartData

Functions
----------

.. autosummary::
    :toctree: ../stubs/

    su_basis
    structure_constants
    moment_map
    prequantum_op
    commutation_report
    equivariance_report
    kostant_report
    perelomov_state
    rawnsley_perelomov_overlap
    isotropy_phase
    exponential_action
    verify_representation

Exceptions
------------

.. autosummary::
    :toctree: ../stubs/

    InvalidGeneratorError
    NonUnitaryError
    ChartExclusionError

"""

from .exceptions import ChartExclusionError, InvalidGeneratorError, NonUnitaryError
from .exponential import exponential_action
from .generators import LieGenerator, moment_map, structure_constants, su_basis
from .perelomov import (
    induced_action,
    isotropy_phase,
    perelomov_state,
    rawnsley_perelomov_overlap,
    verify_representation,
)
from .prequantum import (
    KahlerChartData,
    commutation_report,
    equivariance_report,
    kostant_report,
    prequantum_op,
    represented_generator,
)

__all__ = [
    "ChartExclusionError",
    "InvalidGeneratorError",
    "NonUnitaryError",
    "exponential_action",
    "LieGenerator",
    "moment_map",
    "structure_constants",
    "su_basis",
    "induced_action",
    "isotropy_phase",
    "perelomov_state",
    "rawnsley_perelomov_overlap",
    "verify_representation",
    "KahlerChartData",
    "commutation_report",
    "equivariance_report",
    "kostant_report",
    "prequantum_op",
    "represented_generator",
]
