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
Module defining exceptions for errors raised by the su(n+1) representation.

"""

from ..quantization.exceptions import QuantizationError


class InvalidGeneratorError(QuantizationError, ValueError):
    """Class for errors raised when a matrix is not in su(n+1)."""


class NonUnitaryError(QuantizationError, ValueError):
    """Class for errors raised when a group element is not special unitary."""


class ChartExclusionError(QuantizationError):
    """Class for errors raised when a group element moves the base point off the chart."""
