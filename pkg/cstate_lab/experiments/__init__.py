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
Module providing the experiment runner, its configuration, reports and command line.

Classes
---------

.. autosummary::
    :toctree: ../stubs/

    RunConfig
    RunReport

Functions
----------

.. autosummary::
    :toctree: ../stubs/

    run
    build_model
    main

Exceptions
------------

.. autosummary::
    :toctree: ../stubs/

    ConfigError

"""

from .cli import main
from .config import RunConfig
from .exceptions import ConfigError
from .report import RunReport
from .runner import build_model, run

__all__ = ["main", "RunConfig", "ConfigError", "RunReport", "build_model", "run"]
