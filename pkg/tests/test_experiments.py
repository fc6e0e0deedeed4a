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
Unit tests for run configurations, the suite runner, reports and the command line.

"""
import csv
import json

import numpy as np
import pytest

from cstate_lab.experiments import ConfigError, RunConfig, RunReport, build_model, main, run
from cstate_lab.experiments import runner as runner_module
from cstate_lab.experiments.cli import config_from_args, parse_args
from cstate_lab.experiments.runner import selected_suites
from cstate_lab.quantization import (
    CheckResult,
    ConvergenceTable,
    NumericalFailureError,
    VerificationReport,
)


def _fast(**overrides):
    data = {"n_sections": 20, "n_points": 5, "seed": 1}
    data.update(overrides)
    return RunConfig.from_dict(data)


def test_default_config_is_valid():
    """Test the defaults of a run configuration."""
    config = RunConfig()
    assert config.model == "cpn"
    assert config.k_list == [8, 16, 32, 64]
    assert config.chart_point == 0.3 + 0.1j
    assert config.check_config.n_random_sections == 1000


@pytest.mark.parametrize(
    "overrides",
    [
        {"model": "sphere"},
        {"suite": "everything"},
        {"pair": "zz"},
        {"n": 3},
        {"k": 0},
        {"hbar": 1.0},
        {"hbar": 0.8},
        {"hbar": 0.45},
        {"zeta": -0.5},
        {"zeta": float("nan")},
        {"k_list": []},
        {"point": [0.1]},
        {"radius": 1.0},
        {"cutoffs": [0, 10]},
        {"n_sections": 0},
        {"model": "pullback", "embedding": "missing.csv"},
        {"tolerances": {"ratio_window": [0.8, 0.3]}},
    ],
)
def test_invalid_values(overrides):
    """Test that invalid entries raise a configuration error."""
    with pytest.raises(ConfigError):
        RunConfig.from_dict(overrides)


@pytest.mark.parametrize("hbar", [0.5, 0.4, 0.25, 1 / 7])
def test_integer_and_half_integer_hbar(hbar):
    """Test that 1/hbar may be any integer or half-integer of at least 2."""
    assert RunConfig(model="disk", hbar=hbar).hbar == hbar


def test_zero_squeeze_factor_is_valid():
    """Test that the squeeze factor may vanish."""
    assert RunConfig(zeta=0.0).zeta == 0.0


def _write_table(path, header, rows):
    lines = [",".join(header)] + [",".join(str(cell) for cell in row) for row in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.mark.parametrize(
    "header,rows",
    [
        (["theta", "re_z1", "im_z1", "w"], [[0.0, 1.0, 0.0, 0.5], [1.0, 0.5, 0.8, 0.5]]),
        (["theta", "re_z1", "im_z1", "weight"], [[0.0, 1.0, 0.0, 0.3], [1.0, 0.5, 0.8, 0.3]]),
        (["theta", "re_z1", "im_z1", "weight"], [[0.0, 1.0, "abc", 0.5], [1.0, 0.5, 0.8, 0.5]]),
    ],
)
def test_invalid_embedding_table(tmp_path, header, rows):
    """Test that a malformed embedding table is an invalid configuration."""
    path = _write_table(tmp_path / "embedding.csv", header, rows)
    with pytest.raises(ConfigError):
        RunConfig(model="pullback", embedding=str(path))
    argv = ["run", "--model", "pullback", "--embedding", str(path)]
    assert main(argv + ["--output", str(tmp_path / "r.json")]) == 2


def test_unknown_keys_are_rejected():
    """Test that unknown top-level and nested keys are rejected."""
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"kk": 2})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"quadrature": {"radial": 4, "polar": 3}})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"tolerances": 1e-3})


def test_config_round_trip_through_file(tmp_path):
    """Test that a configuration written as JSON reads back unchanged."""
    config = RunConfig(model="disk", hbar=0.25, cutoffs=[5, 10])
    path = tmp_path / "config.json"
    path.write_text(json.dumps(config.to_dict()), encoding="utf-8")
    assert RunConfig.from_file(path) == config


def test_unreadable_config_file(tmp_path):
    """Test that malformed and non-object files raise a configuration error."""
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConfigError):
        RunConfig.from_file(path)
    path.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ConfigError):
        RunConfig.from_file(path)


def test_seed_environment_override():
    """Test the CSTATE_SEED override and its validation."""
    assert RunConfig().with_env({"CSTATE_SEED": "42"}).seed == 42
    assert RunConfig(seed=3).with_env({}).seed == 3
    with pytest.raises(ConfigError):
        RunConfig().with_env({"CSTATE_SEED": "abc"})


@pytest.mark.parametrize(
    "model,suite,expected",
    [
        ("cpn", "all", ["coherent", "squeezed", "berezin", "repn"]),
        ("disk", "all", ["coherent", "squeezed", "convergence", "berezin", "repn"]),
        ("pullback", "repn", ["repn"]),
    ],
)
def test_selected_suites(model, suite, expected):
    """Test the suite selection for each model."""
    assert selected_suites(RunConfig(model=model, suite=suite)) == expected


@pytest.mark.parametrize("model,dim", [("cpn", 3), ("disk", 40), ("pullback", 3)])
def test_build_model(model, dim):
    """Test that the configured model has the expected dimension."""
    assert build_model(RunConfig(model=model)).dim == dim


def test_coherent_suite_passes():
    """Test a coherent-state run on CP^1."""
    report = run(_fast())
    assert report.passed
    assert [suite.title for suite in report.suites] == ["coherent[cpn(n=1, k=2)]"]


def test_convergence_suite_table():
    """Test the disk convergence suite and its table."""
    report = run(_fast(model="disk", suite="convergence", cutoffs=[10, 20]))
    assert report.passed, report.failures()
    table = report.tables["disk_convergence"]
    assert table.column("cutoff").tolist() == [10, 20]


def test_berezin_suite_passes():
    """Test the symbol identities and the correspondence table."""
    report = run(_fast(suite="berezin", k_list=[8, 16, 32]))
    assert report.passed, report.failures()
    suite = report.suites[0]
    assert suite["commutator_error_ratio"].passed is None
    assert suite["lift_raw_condition"].value == pytest.approx(1.0)
    assert "correspondence_xy" in report.tables


def test_berezin_suite_quadratic_pair():
    """Test that the quadratic pair checks both ratios."""
    report = run(_fast(suite="berezin", pair="x2y", k_list=[8, 16, 32]))
    assert report.passed, report.failures()
    assert report.suites[0]["commutator_error_ratio"].passed is True


def test_numerical_failure_is_recorded(monkeypatch):
    """Test that a numerical failure marks the suite as failed and the run continues."""

    def failing(*args, **kwargs):
        raise NumericalFailureError("integrand is not finite")

    monkeypatch.setattr(runner_module, "verify_representation", failing)
    report = run(_fast(suite="repn"))
    assert not report.passed
    assert report.failures() == ["repn/numerical_failure"]


def test_report_files(tmp_path):
    """Test the JSON report and its CSV companions."""
    suite = VerificationReport("demo")
    suite.add(CheckResult.bound("check", 0.5, 1.0))
    suite.add(CheckResult.info("spread", float("inf")))
    table = ConvergenceTable(["k", "err"], [(8, 0.25), (16, np.float64(0.125))])
    report = RunReport({"suite": "demo"}, [suite], {"table": table})

    paths = report.write(tmp_path / "out" / "report.json")
    assert [path.name for path in paths] == ["report.json", "report_checks.csv", "report_table.csv"]

    data = json.loads(paths[0].read_text(encoding="utf-8"))
    assert data["schema_version"] == 1
    assert data["passed"] is True
    assert data["suites"][0]["checks"][1]["value"] == "inf"
    assert data["tables"]["table"]["rows"] == [[8, 0.25], [16, 0.125]]
    assert set(data["provenance"]["versions"]) >= {"numpy", "scipy", "torch"}

    with paths[1].open(encoding="utf-8") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["suite", "name", "value", "tolerance", "pass", "note"]
    assert rows[1][:2] == ["demo", "check"]


def test_report_body_is_deterministic():
    """Test that the report body carries no provenance."""
    report = RunReport({"suite": "demo"})
    assert "provenance" not in report.body()
    assert report.body() == report.body()


def test_cli_flags_override_file(tmp_path):
    """Test that command line flags take precedence over the configuration file."""
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"k": 3, "suite": "repn"}), encoding="utf-8")
    args = parse_args(["run", "--config", str(path), "--k", "4", "--point", "0.2-0.5j"])
    config = config_from_args(args)
    assert config.k == 4
    assert config.suite == "repn"
    assert config.point == [0.2, -0.5]


def test_cli_k_list_parsing():
    """Test comma separated integer lists."""
    args = parse_args(["run", "--k-list", "4,8,16"])
    assert args.k_list == [4, 8, 16]


def test_cli_invalid_configuration(tmp_path):
    """Test exit status 2 for an invalid configuration."""
    assert main(["run", "--k", "0", "--output", str(tmp_path / "r.json")]) == 2


def test_cli_run_writes_report(tmp_path):
    """Test exit status 0 and the written report of a passing run."""
    output = tmp_path / "repn.json"
    argv = ["run", "--suite", "repn", "--n-points", "3", "--n-sections", "5"]
    assert main(argv + ["--output", str(output)]) == 0
    data = json.loads(output.read_text(encoding="utf-8"))
    assert data["passed"] is True
    assert (tmp_path / "repn_checks.csv").is_file()


def test_cli_failed_run(tmp_path, monkeypatch):
    """Test exit status 1 when a check fails."""

    def failing(*args, **kwargs):
        report = VerificationReport("repn")
        report.add(CheckResult.bound("commutation", 1.0, 1e-10))
        return report

    monkeypatch.setattr(runner_module, "verify_representation", failing)
    argv = ["run", "--suite", "repn", "--output", str(tmp_path / "r.json")]
    assert main(argv) == 1
