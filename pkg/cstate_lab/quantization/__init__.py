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
Module providing quadrature rules, charts, Hilbert spaces of holomorphic sections
and the check records shared by all verification routines.

Classes
---------

.. autosummary::
    :toctree: ../stubs/

    QuadratureRule
    QuantModel
    SubspaceBasis
    Chart
    ComplexChart
    ParameterChart
    AngleChart
    DiscreteChart
    CheckResult
    VerificationReport
    ConvergenceTable
    CheckConfig

Functions
----------

.. autosummary::
    :toctree: ../stubs/

    circle_rule
    torus_rule
    cpn_chart_rule
    disk_rule
    integrate
    monomial_basis
    multinomial_normalization
    gram_matrix
    orthonormalize
    orthonormalize_subspace
    eval_basis
    inner_product
    cpn_model

Exceptions
------------

.. autosummary::
    :toctree: ../stubs/

    QuantizationError
    InvalidArgumentError
    DimensionMismatchError
    UnsupportedDimensionError
    OutOfDomainError
    BaseSectionZeroError
    NumericalFailureError
    DegenerateBasisError

"""

from .charts import AngleChart, Chart, ComplexChart, DiscreteChart, ParameterChart
from .checks import CheckConfig, CheckResult, ConvergenceTable, VerificationReport
from .exceptions import (
    BaseSectionZeroError,
    DegenerateBasisError,
    DimensionMismatchError,
    InvalidArgumentError,
    NumericalFailureError,
    OutOfDomainError,
    QuantizationError,
    UnsupportedDimensionError,
)
from .hilbert import (
    QuantModel,
    SubspaceBasis,
    cpn_model,
    eval_basis,
    gram_matrix,
    inner_product,
    monomial_basis,
    multinomial_normalization,
    orthonormalize,
    orthonormalize_subspace,
)
from .quadrature import (
    QuadratureRule,
    circle_rule,
    cpn_chart_rule,
    disk_rule,
    integrate,
    torus_rule,
)

__all__ = [
    "AngleChart",
    "Chart",
    "ComplexChart",
    "DiscreteChart",
    "ParameterChart",
    "CheckConfig",
    "CheckResult",
    "ConvergenceTable",
    "VerificationReport",
    "BaseSectionZeroError",
    "DegenerateBasisError",
    "DimensionMismatchError",
    "InvalidArgumentError",
    "NumericalFailureError",
    "OutOfDomainError",
    "QuantizationError",
    "UnsupportedDimensionError",
    "QuantModel",
    "SubspaceBasis",
    "cpn_model",
    "eval_basis",
    "gram_matrix",
    "inner_product",
    "monomial_basis",
    "multinomial_normalization",
    "orthonormalize",
    "orthonormalize_subspace",
    "QuadratureRule",
    "circle_rule",
    "cpn_chart_rule",
    "disk_rule",
    "integrate",
    "torus_rule",
]
