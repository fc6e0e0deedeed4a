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
Module providing CP^n-symbols, operator lifts, the star product, the Fubini-Study
Poisson bracket and the correspondence-principle study.

Classes
---------

.. autosummary::
    :toctree: ../stubs/

    SymbolValue
    TotallyRealSubmanifold
    LiftReport
    SymbolFunction
    SymbolFamily

Functions
----------

.. autosummary::
    :toctree: ../stubs/

    cpn_symbol
    star_symbol
    lift_samples
    lift_recovery
    poisson_fs
    moment_family
    product_family
    correspondence_table

Exceptions
------------

.. autosummary::
    :toctree: ../stubs/

    AntipodalPairError
    NotDeterminingSetError

"""

from .correspondence import (
    SymbolFamily,
    correspondence_table,
    halving_ratios,
    moment_family,
    product_family,
    spin_pair,
)
from .exceptions import AntipodalPairError, NotDeterminingSetError
from .poisson import SymbolFunction, poisson_fs
from .symbols import (
    LiftReport,
    SymbolValue,
    TotallyRealSubmanifold,
    circle_submanifold,
    cpn_symbol,
    diagonal_symbol,
    lift_recovery,
    lift_samples,
    star_symbol,
    torus_submanifold,
)

__all__ = [
    "SymbolFamily",
    "correspondence_table",
    "halving_ratios",
    "moment_family",
    "product_family",
    "spin_pair",
    "AntipodalPairError",
    "NotDeterminingSetError",
    "SymbolFunction",
    "poisson_fs",
    "LiftReport",
    "SymbolValue",
    "TotallyRealSubmanifold",
    "circle_submanifold",
    "cpn_symbol",
    "diagonal_symbol",
    "lift_recovery",
    "lift_samples",
    "star_symbol",
    "torus_submanifold",
]
