"""End-to-end checks of the command-line front end (in-process)."""

from __future__ import annotations

import json
import math
import subprocess
import sys

import pytest

from abelcenter.cli import main

CUBIC_PAYLOAD = {"n": 3, "P": ["0", "2", "0", "0"], "Q": ["0", "0", "1", "0"]}


def run_cli(tmp_path, spec_dict, out_name="out", *flags):
    spec_path = tmp_path / f"{out_name}.json"
    spec_path.write_text(json.dumps(spec_dict))
    out_dir = tmp_path / out_name
    code = main(["--spec", str(spec_path), "--out", str(out_dir), *flags])
    return code, out_dir


# ----------------------------------------------------------------------
# happy paths


def test_certify_planar(tmp_path):
    spec = {"kind": "planar", "command": "certify", "payload": CUBIC_PAYLOAD}
    code, out = run_cli(tmp_path, spec)
    assert code == 0
    cert = json.loads((out / "certificate.json").read_text())
    assert cert["verdict"] == "certified_center"
    assert cert["basis"] == "planar_parity"
    assert cert["evidence"]["cube_ratio"] == "2/9"


def test_certify_abel_family(tmp_path):
    spec = {
        "kind": "abel",
        "command": "certify",
        "payload": {"family": "cos2pit", "f": [0, 1], "g": [0, 1]},
    }
    code, out = run_cli(tmp_path, spec)
    assert code == 0
    cert = json.loads((out / "certificate.json").read_text())
    assert cert["verdict"] == "inconclusive"


def test_reduce_emits_exact_coefficients(tmp_path):
    spec = {"kind": "planar", "command": "reduce", "payload": CUBIC_PAYLOAD}
    code, out = run_cli(tmp_path, spec)
    assert code == 0
    red = json.loads((out / "reduction.json").read_text())
    assert red["n"] == 3
    assert red["A"] == {"a": ["0"] * 5, "b": ["0", "3/4", "0", "1/8"]}
    assert red["B"] == {"a": ["-1/8", "0", "0", "0", "1/8"], "b": ["0"] * 4}
    assert red["g"]["b"] == ["0", "3/2", "0", "3/4"]
    assert red["mean_A"] == "0"
    assert red["parities"] == {"A": "odd", "B": "even", "f": "odd", "g": "odd"}
    assert red["half_width"] == pytest.approx(math.pi)


def test_scan_planar(tmp_path):
    spec = {
        "kind": "planar",
        "command": "scan",
        "payload": CUBIC_PAYLOAD,
        "config": {"rho_grid": [0.005, 0.01]},
    }
    code, out = run_cli(tmp_path, spec)
    assert code == 0
    scan = json.loads((out / "scan.json").read_text())
    assert scan["classification"] == "center_evidence"
    lines = (out / "scan.csv").read_text().strip().split("\n")
    assert lines[0] == "rho,pi_rho,d_rho"
    assert len(lines) == 3


def test_reduction_output_reingests_as_scalar_job(tmp_path):
    grid = [0.005, 0.01, 0.02]
    code, out1 = run_cli(
        tmp_path,
        {"kind": "planar", "command": "reduce", "payload": CUBIC_PAYLOAD},
        "reduce",
    )
    assert code == 0
    reduction = json.loads((out1 / "reduction.json").read_text())

    code, out2 = run_cli(
        tmp_path,
        {
            "kind": "planar",
            "command": "scan",
            "payload": CUBIC_PAYLOAD,
            "config": {"rho_grid": grid},
        },
        "scan_planar",
    )
    assert code == 0
    code, out3 = run_cli(
        tmp_path,
        {
            "kind": "abel",
            "command": "scan",
            "payload": reduction,
            "config": {"rho_grid": grid},
        },
        "scan_abel",
    )
    assert code == 0
    assert (out2 / "scan.json").read_text() == (out3 / "scan.json").read_text()
    assert (out2 / "scan.csv").read_text() == (out3 / "scan.csv").read_text()


def test_runs_are_deterministic(tmp_path):
    spec = {
        "kind": "planar",
        "command": "scan",
        "payload": CUBIC_PAYLOAD,
        "config": {"rho_grid": [0.005, 0.01]},
    }
    _, out1 = run_cli(tmp_path, spec, "first")
    _, out2 = run_cli(tmp_path, spec, "second")
    assert (out1 / "scan.csv").read_text() == (out2 / "scan.csv").read_text()
    assert (out1 / "scan.json").read_text() == (out2 / "scan.json").read_text()


def test_crosscheck_planar(tmp_path):
    spec = {
        "kind": "planar",
        "command": "crosscheck",
        "payload": CUBIC_PAYLOAD,
        "config": {"r0": 0.05, "samples": 32},
    }
    code, out = run_cli(tmp_path, spec)
    assert code == 0
    data = json.loads((out / "crosscheck.json").read_text())
    assert data["r0"] == 0.05
    assert data["samples"] == 32
    assert data["defect"] < 1e-6


def test_picard_planar_default_rho(tmp_path):
    spec = {"kind": "planar", "command": "picard", "payload": CUBIC_PAYLOAD}
    code, out = run_cli(tmp_path, spec)
    assert code == 0
    data = json.loads((out / "picard.json").read_text())
    assert 0 < data["rho"] < 0.5
    assert data["evenness_defect"] < 1e-8
    lines = (out / "picard.csv").read_text().strip().split("\n")
    assert lines[0] == "t,x"


def test_picard_abel_with_explicit_rho(tmp_path):
    spec = {
        "kind": "abel",
        "command": "picard",
        "payload": {"family": "poly", "f": [0, 1], "g": [0, 1]},
        "config": {"rho": 0.05},
    }
    code, out = run_cli(tmp_path, spec)
    assert code == 0
    data = json.loads((out / "picard.json").read_text())
    assert data["rho"] == 0.05


def test_rho_grid_flag_overrides_config(tmp_path):
    spec = {
        "kind": "planar",
        "command": "scan",
        "payload": CUBIC_PAYLOAD,
        "config": {"rho_grid": [0.005]},
    }
    code, out = run_cli(tmp_path, spec, "out", "--rho-grid", "0.005,0.01,0.02")
    assert code == 0
    lines = (out / "scan.csv").read_text().strip().split("\n")
    assert len(lines) == 4


def test_tolerance_flags_are_accepted(tmp_path):
    spec = {
        "kind": "planar",
        "command": "scan",
        "payload": CUBIC_PAYLOAD,
        "config": {"rho_grid": [0.005]},
    }
    code, _ = run_cli(
        tmp_path, spec, "out", "--rel-tol", "1e-9", "--abs-tol", "1e-11", "--m", "1.0"
    )
    assert code == 0


# ----------------------------------------------------------------------
# failure modes


def test_missing_spec_file(tmp_path):
    code = main(["--spec", str(tmp_path / "nope.json"), "--out", str(tmp_path / "o")])
    assert code == 2


def test_invalid_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["--spec", str(bad), "--out", str(tmp_path / "o")]) == 2


@pytest.mark.parametrize(
    "mutation",
    [
        {"kind": "other"},
        {"command": "explode"},
        {"payload": ["not", "an", "object"]},
        {"config": {"unknown_knob": 1}},
    ],
)
def test_malformed_jobspec_fields(tmp_path, mutation):
    spec = {"kind": "planar", "command": "certify", "payload": CUBIC_PAYLOAD}
    spec.update(mutation)
    code, _ = run_cli(tmp_path, spec)
    assert code == 2


def test_degree_mismatch_payload(tmp_path):
    spec = {
        "kind": "planar",
        "command": "certify",
        "payload": {"n": 3, "P": ["0", "2"], "Q": ["0", "0", "1", "0"]},
    }
    code, _ = run_cli(tmp_path, spec)
    assert code == 2


def test_reduce_requires_planar_kind(tmp_path):
    spec = {
        "kind": "abel",
        "command": "reduce",
        "payload": {"family": "poly", "f": [0, 1], "g": [0, 1]},
    }
    code, _ = run_cli(tmp_path, spec)
    assert code == 2


def test_crosscheck_requires_planar_kind(tmp_path):
    spec = {
        "kind": "abel",
        "command": "crosscheck",
        "payload": {"family": "poly", "f": [0, 1], "g": [0, 1]},
    }
    code, _ = run_cli(tmp_path, spec)
    assert code == 2


def test_unknown_family(tmp_path):
    spec = {
        "kind": "abel",
        "command": "certify",
        "payload": {"family": "chebyshev", "f": [1], "g": [1]},
    }
    code, _ = run_cli(tmp_path, spec)
    assert code == 2


def test_bad_rho_grid_flag(tmp_path):
    spec = {"kind": "planar", "command": "scan", "payload": CUBIC_PAYLOAD}
    code, _ = run_cli(tmp_path, spec, "out", "--rho-grid", "abc,def")
    assert code == 2


@pytest.mark.filterwarnings("ignore:initial value")
def test_solver_failure_exit_code(tmp_path):
    spec = {
        "kind": "abel",
        "command": "scan",
        "payload": {"family": "poly", "f": [], "g": [5.0]},
        "config": {"rho_grid": [0.5]},
    }
    code, _ = run_cli(tmp_path, spec)
    assert code == 3


# ----------------------------------------------------------------------
# module entry point


def test_module_invocation(tmp_path):
    spec_path = tmp_path / "job.json"
    spec_path.write_text(
        json.dumps({"kind": "planar", "command": "certify", "payload": CUBIC_PAYLOAD})
    )
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "abelcenter",
            "--spec",
            str(spec_path),
            "--out",
            str(tmp_path / "out"),
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "certified_center" in proc.stdout
    assert (tmp_path / "out" / "certificate.json").exists()
