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
Python package for numerical experiments with coherent states, squeezed states and
Berezin quantization on CP^n, the hyperbolic disk and embedded submanifolds.

.. currentmodule:: cstate_lab

"""

from . import berezin, datasets, experiments, models, quantization, repn, states

try:
    # Injected in _version.py during the build process.
    from ._version import __version__  # type: ignore
except ImportError:
    __version__ = "dev"


__all__ = ["berezin", "datasets", "experiments", "models", "quantization", "repn", "states"]
