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
Module defining exceptions for errors raised while building and evaluating
quantization models.

"""

from typing import Optional


class QuantizationError(Exception):
    """Base class for all errors raised by cstate-lab."""


class InvalidArgumentError(QuantizationError, ValueError):
    """Class for errors raised when an argument is outside its admissible range."""


class DimensionMismatchError(QuantizationError, ValueError):
    """Class for errors raised when vector or matrix dimensions do not agree."""


class UnsupportedDimensionError(QuantizationError):
    """Class for errors raised for chart dimensions beyond the supported range."""


class OutOfDomainError(QuantizationError, ValueError):
    """Class for errors raised when a point lies outside a chart domain."""


class BaseSectionZeroError(QuantizationError):
    """Class for errors raised when the base section vanishes at a point."""


class NumericalFailureError(QuantizationError):
    """Class for errors raised when a quadrature integrand is not finite."""

    def __init__(self, message: str, node_index: Optional[int] = None):
        super().__init__(message)
        self.node_index = node_index


class DegenerateBasisError(QuantizationError):
    """Class for errors raised when a Gram matrix is not positive definite."""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index
