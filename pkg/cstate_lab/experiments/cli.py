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
Module for the ``cstate-lab`` command line.

Exit status: 0 when every check passes, 1 when a check fails or a suite hits a
numerical failure, 2 for an invalid configuration.

"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from .config import SUPPORTED_MODELS, SUPPORTED_PAIRS, SUPPORTED_SUITES, RunConfig
from .exceptions import ConfigError
from .runner import run

logger = logging.getLogger(__name__)

FLAG_KEYS = [
    "model",
    "n",
    "k",
    "hbar",
    "cutoff",
    "embedding",
    "suite",
    "zeta",
    "k_list",
    "pair",
    "point",
    "radius",
    "cutoffs",
    "n_sections",
    "n_points",
    "seed",
    "output",
]


def _int_list(text: str) -> list[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"Expected comma separated integers, got {text}.") from err


def _float_pair(text: str) -> list[float]:
    try:
        value = complex(text.replace(" ", ""))
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"Expected a complex number, got {text}.") from err
    return [value.real, value.imag]


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        prog="cstate-lab",
        description="Verify coherent-state, squeezed-state and Berezin quantization properties.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    run_parser = subparsers.add_parser("run", help="Run verification and convergence suites.")
    run_parser.add_argument("--config", help="JSON configuration file with the same keys.")
    run_parser.add_argument("--model", choices=SUPPORTED_MODELS)
    run_parser.add_argument("--n", type=int, help="Chart dimension of CP^n.")
    run_parser.add_argument("--k", type=int, help="Bundle power.")
    run_parser.add_argument("--hbar", type=float, help="Planck constant of the disk model.")
    run_parser.add_argument("--cutoff", type=int, help="Truncation of the disk model.")
    run_parser.add_argument("--embedding", help="circle, torus or a CSV embedding table.")
    run_parser.add_argument("--suite", choices=SUPPORTED_SUITES)
    run_parser.add_argument("--zeta", type=float, help="Squeeze factor.")
    run_parser.add_argument("--k-list", dest="k_list", type=_int_list)
    run_parser.add_argument("--pair", choices=SUPPORTED_PAIRS)
    run_parser.add_argument("--point", type=_float_pair, help="Correspondence point, 0.3+0.1j.")
    run_parser.add_argument("--radius", type=float, help="Base point modulus of the disk study.")
    run_parser.add_argument("--cutoffs", type=_int_list)
    run_parser.add_argument("--n-sections", dest="n_sections", type=int)
    run_parser.add_argument("--n-points", dest="n_points", type=int)
    run_parser.add_argument("--seed", type=int)
    run_parser.add_argument("--output", help="Path of the JSON report.")
    run_parser.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging.")
    return parser.parse_args(argv)


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Merge the configuration file, command line flags and ``CSTATE_SEED``.

    Raises:
        ConfigError: If the merged configuration is invalid.
    """
    data = RunConfig.from_file(args.config).to_dict() if args.config else {}
    for key in FLAG_KEYS:
        value = getattr(args, key)
        if value is not None:
            data[key] = value
    return RunConfig.from_dict(data).with_env()


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``cstate-lab`` command."""
    args = parse_args(argv)
    logging.basicConfig(
        format="[%(module)-12s] %(message)s",
        level=logging.DEBUG if args.verbose else logging.INFO,
    )
    try:
        config = config_from_args(args)
    except ConfigError as err:
        logger.error("Invalid configuration: %s", err)
        return 2

    report = run(config)
    for path in report.write(config.output):
        logger.info("Wrote %s", path)
    if report.passed:
        logger.info("All checks passed")
        return 0
    for name in report.failures():
        logger.error("Check failed: %s", name)
    return 1


if __name__ == "__main__":
    sys.exit(main())
