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
Module binding the models, states, symbols and representation checks into suites.

"""
from __future__ import annotations

import logging
from typing import Callable

import numpy as np

from ..berezin.correspondence import correspondence_table, halving_ratios, spin_pair
from ..berezin.poisson import poisson_fs
from ..berezin.symbols import (
    circle_submanifold,
    cpn_symbol,
    diagonal_symbol,
    lift_recovery,
    lift_samples,
    star_symbol,
)
from ..models.disk import disk_convergence_report, disk_model
from ..models.pullback import (
    circle_embedding,
    load_embedding_csv,
    make_pullback_model,
    torus_embedding,
)
from ..quantization.checks import CheckResult, ConvergenceTable, VerificationReport
from ..quantization.exceptions import QuantizationError
from ..quantization.hilbert import QuantModel, cpn_model
from ..repn.generators import moment_map, su_basis
from ..repn.perelomov import verify_representation
from ..repn.prequantum import prequantum_op
from ..states.coherent import verify_coherent
from ..states.squeezed import verify_squeezed
from .config import RunConfig
from .report import RunReport

logger = logging.getLogger(__name__)

CORE_SUITES = ["coherent", "squeezed", "convergence", "berezin", "repn"]
CONVERGENCE_FLOOR = 1e-12


def build_model(config: RunConfig) -> QuantModel:
    """Quantization model selected by the configuration."""
    orders = config.quadrature
    if config.model == "cpn":
        return cpn_model(config.n, config.k, orders.radial, orders.angular)
    if config.model == "disk":
        return disk_model(config.hbar, config.cutoff, orders.radial, orders.angular)
    if config.embedding == "circle":
        embedding = circle_embedding(orders.nodes)
    elif config.embedding == "torus":
        embedding = torus_embedding(orders.nodes)
    else:
        embedding = load_embedding_csv(config.embedding)
    model, rank = make_pullback_model(embedding, k=config.k)
    logger.info("Pullback rank %d of %d", rank.rank, rank.raw_dim)
    return model


def _decreasing_check(name: str, table: ConvergenceTable, column: str) -> CheckResult:
    values = table.column(column)
    passed = table.is_decreasing(column, floor=CONVERGENCE_FLOOR)
    return CheckResult(name, float(values[-1]), CONVERGENCE_FLOOR, passed, f"{column} by row")


def _ratio_check(name: str, table: ConvergenceTable, column: str, window) -> CheckResult:
    ratios = halving_ratios(table, column)
    low, high = window
    worst = float(ratios[np.argmax(np.abs(ratios - 0.5))])
    passed = bool(np.all((ratios >= low) & (ratios <= high)))
    return CheckResult(name, worst, high, passed, f"ratios within [{low}, {high}]")


def run_convergence(config: RunConfig, report: RunReport) -> VerificationReport:
    """Disk truncation study; the table is attached to the run report."""
    suite = VerificationReport(f"convergence[disk(hbar={config.hbar})]")
    table = disk_convergence_report(config.hbar, config.zeta, config.radius, config.cutoffs)
    report.tables["disk_convergence"] = table
    suite.add(_decreasing_check("coherent_increment_decreasing", table, "coherent"))
    suite.add(_decreasing_check("chi_squared_increment_decreasing", table, "chi_squared"))
    within = table.column("chi_squared") <= table.column("tail_bound") * (1 + 1e-12)
    suite.add(
        CheckResult(
            "tail_bound_respected",
            float(np.max(table.column("chi_squared") - table.column("tail_bound"))),
            0.0,
            bool(np.all(within)),
            "chi^2 increment does not exceed the tail bound",
        )
    )
    return suite


def run_berezin(config: RunConfig, report: RunReport) -> VerificationReport:
    """Symbol identities, lift recovery and the correspondence table on CP^1."""
    tol = config.tolerances
    suite = VerificationReport(f"berezin[pair={config.pair}]")
    k = config.k
    model = cpn_model(1, k)
    rng = np.random.default_rng(config.seed)
    points = model.sample(rng, min(config.n_points, 20))

    identity = diagonal_symbol(model, np.eye(model.dim), points)
    suite.add(
        CheckResult.bound("symbol_identity", np.max(np.abs(identity - 1)), tol.coefficient)
    )
    generators = su_basis(1)
    a = prequantum_op(generators[0], 1, k, model)
    b = prequantum_op(generators[1], 1, k, model)
    off_diagonal = cpn_symbol(model, np.eye(model.dim), points[0], points[1]).value
    suite.add(CheckResult.bound("symbol_identity_pair", abs(off_diagonal - 1), tol.coefficient))
    unit = max(
        abs(star_symbol(model, a, np.eye(model.dim), p) - cpn_symbol(model, a, p, p).value)
        for p in points
    )
    suite.add(CheckResult.bound("star_unit", unit, tol.coefficient))
    left = star_symbol(model, a @ b, a, points[0])
    right = star_symbol(model, a, b @ a, points[0])
    suite.add(CheckResult.bound("star_associativity", abs(left - right), tol.coefficient))

    covariant = 0.0
    for gen in generators:
        symbol = diagonal_symbol(model, prequantum_op(gen, 1, k, model), points)
        exact = k * np.array([moment_map(gen, z) for z in points])
        covariant = max(covariant, float(np.max(np.abs(symbol - exact))))
    suite.add(CheckResult.bound("covariant_symbol", covariant, tol.coefficient))

    x, y = spin_pair("xy")
    tau_z = generators[2]
    calibration = max(
        abs(poisson_fs(x.classical, y.classical, p) - moment_map(tau_z, p)) for p in points
    )
    suite.add(CheckResult.bound("poisson_calibration", calibration, tol.coefficient))

    sub = circle_submanifold(model.dim)
    recovered, lift = lift_recovery(sub, model, lift_samples(sub, model, a))
    suite.add(
        CheckResult.bound("lift_round_trip", np.max(np.abs(recovered - a)), tol.singular_value)
    )
    suite.add(CheckResult.floor("lift_sigma_min", lift.sigma_min, tol.singular_value))
    suite.add(CheckResult.info("lift_raw_condition", lift.raw_condition))

    first, second = spin_pair(config.pair)
    table = correspondence_table(first, second, config.chart_point, config.k_list)
    report.tables[f"correspondence_{config.pair}"] = table
    suite.add(_decreasing_check("star_error_decreasing", table, "star_error"))
    suite.add(_decreasing_check("commutator_error_decreasing", table, "commutator_error"))
    suite.add(_ratio_check("star_error_ratio", table, "star_error", tol.ratio_window))
    if config.pair == "xy":
        suite.add(
            CheckResult.info(
                "commutator_error_ratio",
                None,
                "linear pair is exact at every k; the column sits at the round-off floor",
            )
        )
    else:
        suite.add(
            _ratio_check("commutator_error_ratio", table, "commutator_error", tol.ratio_window)
        )
    return suite


def _suite_runners(config: RunConfig) -> dict[str, Callable[[RunReport], VerificationReport]]:
    check = config.check_config
    return {
        "coherent": lambda report: verify_coherent(build_model(config), check),
        "squeezed": lambda report: verify_squeezed(build_model(config), config.zeta, check),
        "convergence": lambda report: run_convergence(config, report),
        "berezin": lambda report: run_berezin(config, report),
        "repn": lambda report: verify_representation(config.n, config.k, check),
    }


def selected_suites(config: RunConfig) -> list[str]:
    """Suites executed for a configuration, in order.

    ``all`` runs the convergence study only for the disk model.
    """
    if config.suite != "all":
        return [config.suite]
    return [s for s in CORE_SUITES if s != "convergence" or config.model == "disk"]


def run(config: RunConfig) -> RunReport:
    """Execute the selected suites.

    A numerical failure inside a suite is recorded as a failed ``numerical_failure``
    check of that suite; the remaining suites still run.

    Returns:
        RunReport: Collected suites and tables.
    """
    report = RunReport(config.to_dict())
    runners = _suite_runners(config)
    for name in selected_suites(config):
        logger.info("Running suite '%s'", name)
        try:
            suite = runners[name](report)
        except QuantizationError as err:
            logger.error("Suite '%s' failed: %s", name, err)
            suite = VerificationReport(name)
            suite.add(CheckResult("numerical_failure", None, None, False, str(err)))
        report.suites.append(suite)
    return report
