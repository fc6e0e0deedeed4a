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
Module for run configurations of the experiment runner.

A configuration is a flat set of keys plus the nested ``quadrature`` and
``tolerances`` blocks. JSON files use the same keys; unknown keys are rejected.
The environment variable ``CSTATE_SEED`` overrides the seed.

"""
from __future__ import annotations

import json
import math
import os
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Optional, Union

from ..models.pullback import load_embedding_csv
from ..quantization.checks import CheckConfig
from ..quantization.exceptions import QuantizationError
from .exceptions import ConfigError

SUPPORTED_MODELS = ["cpn", "disk", "pullback"]
SUPPORTED_SUITES = ["coherent", "squeezed", "convergence", "berezin", "repn", "all"]
SUPPORTED_EMBEDDINGS = ["circle", "torus"]
SUPPORTED_PAIRS = ["xy", "x2y"]
SEED_ENV = "CSTATE_SEED"
HBAR_TOL = 1e-9


@dataclass
class QuadratureOrders:
    """Quadrature orders; ``None`` selects the model defaults.

    Attributes:
        radial (int, optional): Radial order of chart and disk rules.
        angular (int, optional): Angular order of chart and disk rules.
        nodes (int): Nodes per axis of the circle and torus pullback rules.
    """

    radial: Optional[int] = None
    angular: Optional[int] = None
    nodes: int = 64


@dataclass
class Tolerances:
    """Tolerance overrides of the verification routines."""

    coefficient: float = 1e-10
    quadrature: float = 1e-6
    likelihood: float = 1e-12
    reproducing: float = 1e-9
    singular_value: float = 1e-8
    ratio_window: tuple[float, float] = (0.3, 0.8)


@dataclass
class RunConfig:  # pylint: disable=too-many-instance-attributes
    """Validated description of a run.

    Attributes:
        model (str): One of ``cpn``, ``disk`` or ``pullback``.
        n (int): Chart dimension of ``cpn`` models and of the repn suite.
        k (int): Bundle power.
        hbar (float): Planck constant of the disk model.
        cutoff (int): Truncation of the disk model.
        embedding (str): ``circle``, ``torus`` or the path of a CSV embedding table.
        suite (str): Suite to run.
        zeta (float): Squeeze factor.
        k_list (list[int]): Bundle powers of the correspondence study.
        pair (str): Catalog pair of the correspondence study.
        point (list[float]): Real and imaginary part of the correspondence point.
        radius (float): Base point modulus of the disk convergence study.
        cutoffs (list[int]): Cutoffs of the disk convergence study.
        n_sections (int): Random unit sections per check.
        n_points (int): Random base points per check.
        seed (int): Seed of every random draw.
        output (str): Path of the JSON report; the CSV files sit next to it.
    """

    model: str = "cpn"
    n: int = 1
    k: int = 2
    hbar: float = 0.5
    cutoff: int = 40
    embedding: str = "circle"
    suite: str = "coherent"
    zeta: float = 0.5
    k_list: list[int] = field(default_factory=lambda: [8, 16, 32, 64])
    pair: str = "xy"
    point: list[float] = field(default_factory=lambda: [0.3, 0.1])
    radius: float = 0.5
    cutoffs: list[int] = field(default_factory=lambda: [10, 20, 40])
    n_sections: int = 1000
    n_points: int = 100
    seed: int = 0
    output: str = "report.json"
    quadrature: QuadratureOrders = field(default_factory=QuadratureOrders)
    tolerances: Tolerances = field(default_factory=Tolerances)

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        """Check value ranges and choices.

        Raises:
            ConfigError: On the first invalid entry.
        """
        _choice("model", self.model, SUPPORTED_MODELS)
        _choice("suite", self.suite, SUPPORTED_SUITES)
        _choice("pair", self.pair, SUPPORTED_PAIRS)
        if self.n not in (1, 2):
            raise ConfigError(f"n must be 1 or 2, got {self.n}.")
        if self.k < 1:
            raise ConfigError(f"k must be at least 1, got {self.k}.")
        _check_hbar(self.hbar)
        if self.cutoff < 1 or any(c < 1 for c in self.cutoffs) or not self.cutoffs:
            raise ConfigError("Cutoffs must be positive integers.")
        if not math.isfinite(self.zeta) or self.zeta < 0:
            raise ConfigError(f"zeta must be finite and non-negative, got {self.zeta}.")
        if not self.k_list or any(k < 1 for k in self.k_list):
            raise ConfigError(f"k_list must hold positive integers, got {self.k_list}.")
        if len(self.point) != 2:
            raise ConfigError(f"point must be [re, im], got {self.point}.")
        if not 0 <= self.radius < 1:
            raise ConfigError(f"radius must lie in [0, 1), got {self.radius}.")
        if self.model == "pullback" and self.embedding not in SUPPORTED_EMBEDDINGS:
            _check_embedding_table(self.embedding)
        if self.n_sections < 1 or self.n_points < 1:
            raise ConfigError("Sample sizes must be positive.")
        low, high = self.tolerances.ratio_window
        if not 0 < low < high:
            raise ConfigError(f"Invalid ratio window {self.tolerances.ratio_window}.")

    @property
    def check_config(self) -> CheckConfig:
        """Sampling and tolerance settings of the verification routines."""
        tol = self.tolerances
        return CheckConfig(
            n_random_sections=self.n_sections,
            n_random_points=self.n_points,
            seed=self.seed,
            coefficient_tol=tol.coefficient,
            quadrature_tol=tol.quadrature,
            likelihood_tol=tol.likelihood,
            reproducing_tol=tol.reproducing,
            singular_value_tol=tol.singular_value,
        )

    @property
    def chart_point(self) -> complex:
        """The correspondence point as a complex number."""
        return complex(self.point[0], self.point[1])

    def to_dict(self) -> dict[str, Any]:
        """Plain dictionary with the configuration keys."""
        data = asdict(self)
        data["tolerances"]["ratio_window"] = list(self.tolerances.ratio_window)
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> RunConfig:
        """Build a configuration, rejecting unknown keys.

        Raises:
            ConfigError: If a key is unknown or a value invalid.
        """
        data = dict(data)
        _reject_unknown(data, cls, "run configuration")
        nested = {"quadrature": QuadratureOrders, "tolerances": Tolerances}
        for key, kind in nested.items():
            if key in data:
                if not isinstance(data[key], dict):
                    raise ConfigError(f"'{key}' must be a mapping.")
                _reject_unknown(data[key], kind, key)
                block = dict(data[key])
                if "ratio_window" in block:
                    block["ratio_window"] = tuple(block["ratio_window"])
                data[key] = kind(**block)
        try:
            return cls(**data)
        except TypeError as err:
            raise ConfigError(str(err)) from err

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> RunConfig:
        """Read a JSON configuration file."""
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as err:
            raise ConfigError(f"Cannot read configuration {path}: {err}") from err
        if not isinstance(data, dict):
            raise ConfigError(f"Configuration {path} must hold a JSON object.")
        return cls.from_dict(data)

    def with_env(self, environ: Optional[dict[str, str]] = None) -> RunConfig:
        """Apply the ``CSTATE_SEED`` override."""
        environ = os.environ if environ is None else environ
        if SEED_ENV in environ:
            try:
                self.seed = int(environ[SEED_ENV])
            except ValueError as err:
                raise ConfigError(
                    f"{SEED_ENV} must be an integer, got {environ[SEED_ENV]}."
                ) from err
        return self


def _choice(name: str, value: str, supported: list[str]) -> None:
    if value not in supported:
        raise ConfigError(f"{name} '{value}' is not supported. Supported values are: {supported}")


def _reject_unknown(data: dict, kind: type, where: str) -> None:
    known = {f.name for f in fields(kind)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"Unknown keys in {where}: {unknown}")


def _check_hbar(hbar: float) -> None:
    """Disk weights ``(1 - t)^(1/hbar - 2)`` need an integer or half-integer ``1/hbar >= 2``."""
    if not 0 < hbar < 1:
        raise ConfigError(f"hbar must satisfy 1/hbar > 1, got {hbar}.")
    twice_inverse = 2.0 / hbar
    if abs(twice_inverse - round(twice_inverse)) > HBAR_TOL or twice_inverse < 4 - HBAR_TOL:
        raise ConfigError(
            f"1/hbar must be an integer or half-integer of at least 2, got 1/hbar={1 / hbar:.6g}."
        )


def _check_embedding_table(path: str) -> None:
    if not Path(path).is_file():
        raise ConfigError(
            f"Embedding {path} is neither one of {SUPPORTED_EMBEDDINGS} nor an existing CSV file."
        )
    try:
        load_embedding_csv(path)
    except QuantizationError as err:
        raise ConfigError(f"Invalid embedding table {path}: {err}") from err
