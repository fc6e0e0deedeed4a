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
Entry point for ``python -m cstate_lab``.

"""
import sys

from .experiments.cli import main

sys.exit(main())
