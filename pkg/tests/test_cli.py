"""Command-line interface: schemas, exit codes, formats, determinism."""

import json
import subprocess
import sys

import pytest

from curvint.cli import main

RUN = [sys.executable, "-m", "curvint.cli"]


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data) if isinstance(data, dict) else data)
    return str(path)


SIM_CONFIG = {
    "model": {"z": 0.4, "b1": 0.7, "b2": 1.3},
    "hamiltonian": {"kind": "SSW", "beta0": 1.0},
    "integrator": {"method": "rk45", "rtol": 1e-10, "atol": 1e-12,
                   "t_end": 3.0},
    "initial_state": [0.6, -0.8, 0.5, 1.1],
}


def test_unknown_top_level_key_rejected(tmp_path, capsys):
    cfg = write(tmp_path, "c.json", {"modell": {"z": 1.0}})
    assert main(["verify", "--config", cfg]) == 2
    assert "unknown key" in capsys.readouterr().err


def test_unknown_nested_key_rejected(tmp_path, capsys):
    cfg = write(tmp_path, "c.json", {"model": {"z": 1.0, "w": 2.0}})
    assert main(["verify", "--config", cfg]) == 2


def test_malformed_json_reports_line_and_column(tmp_path, capsys):
    cfg = write(tmp_path, "c.json", '{\n  "model": {"z": 1.0,}\n}')
    assert main(["simulate", "--config", cfg]) == 2
    err = capsys.readouterr().err
    assert "line 2" in err and "column" in err


def test_missing_required_sections(tmp_path, capsys):
    cfg = write(tmp_path, "c.json", {"model": {"z": 0.4}})
    assert main(["simulate", "--config", cfg]) == 2
    assert main(["geodesic", "--config", cfg]) == 2


def test_bad_flag_values(capsys):
    assert main(["verify", "--space", "NoSuchSpace"]) == 2
    assert main(["decompose", "--space", "H2"]) == 0  # parallel variant only


def test_simulate_json_schema(tmp_path, capsys):
    cfg = write(tmp_path, "sim.json", SIM_CONFIG)
    out = str(tmp_path / "out.json")
    assert main(["simulate", "--config", cfg, "--format", "json",
                 "--out", out]) == 0
    doc = json.loads(open(out).read())
    assert set(doc) == {"command", "config_echo", "results", "pass"}
    assert doc["command"] == "simulate"
    assert doc["pass"] is True
    assert doc["config_echo"]["model"]["z"] == 0.4
    assert doc["results"]["status"] == "ok"
    assert set(doc["results"]["drift"]) == {"h", "c_z", "i_z"}


def test_simulate_csv_determinism_and_layout(tmp_path):
    cfg = write(tmp_path, "sim.json", SIM_CONFIG)
    outs = []
    for name in ("a.csv", "b.csv"):
        out = str(tmp_path / name)
        assert main(["simulate", "--config", cfg, "--format", "csv",
                     "--out", out, "--seed", "7"]) == 0
        outs.append(open(out).read())
    assert outs[0] == outs[1]  # bit-identical reruns
    header, first = outs[0].splitlines()[:2]
    assert header == "t,q1,q2,p1,p2,h,c_z,i_z"
    # 17-significant-digit decimal rendering
    assert "0.59999999999999998" in first


def test_verify_single_z_grid(tmp_path, capsys):
    assert main(["verify", "--z", "0.5", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"] is True
    assert all(r["pass"] for r in doc["results"])


def test_geodesic_command(tmp_path, capsys):
    cfg = write(tmp_path, "g.json", {
        "space": "S2",
        "geodesic": {"chart": "r", "start": [0.9, 0.2, 0.3, 0.8],
                     "s_end": 5.0},
    })
    assert main(["geodesic", "--config", cfg, "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["results"]["closed_form_residual"] < 1e-6


def test_curvature_command(capsys):
    assert main(["curvature", "--z", "0.7", "--seed", "1",
                 "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["results"]["max_abs_error"] < 1e-5


def test_decompose_center_variant(capsys):
    assert main(["decompose", "--space", "S2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["results"]["variant_residual"] < 1e-9
    capsys.readouterr()
    assert main(["decompose", "--space", "H2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["results"]["center_terms"] is None


@pytest.mark.parametrize("which,rows", [(1, 6), (2, 6), (3, 6), (4, 6)])
def test_tables_commands(which, rows, capsys):
    assert main(["tables", "--which", str(which), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["results"]) == rows


def test_custom_registry(tmp_path, capsys):
    cfg = dict(SIM_CONFIG)
    cfg["hamiltonian"] = {"kind": "Custom", "custom": "cosh-kinetic"}
    path = write(tmp_path, "c.json", cfg)
    assert main(["simulate", "--config", path, "--format", "json",
                 "--out", str(tmp_path / "o.json")]) == 0
    cfg["hamiltonian"] = {"kind": "Custom", "custom": "nope"}
    path = write(tmp_path, "c2.json", cfg)
    assert main(["simulate", "--config", path]) == 2


def test_console_entry_point_runs():
    proc = subprocess.run(RUN + ["tables", "--which", "1", "--format", "csv"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("space,")
