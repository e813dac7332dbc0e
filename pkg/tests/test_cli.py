"""End-to-end checks of the command-line interface.

Each test drives ``photonflow.cli.main`` in-process with a temp output
directory and inspects the files it writes; one test runs the installed
console script in a subprocess.
"""

import json
import subprocess
import sys

import numpy as np
import pytest

from photonflow import __version__
from photonflow.cli import main
from photonflow.fieldio import read_weber


def _write_config(tmp_path, config, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(config))
    return str(path)


def _run(tmp_path, command, config=None, extra=()):
    out = tmp_path / "out"
    argv = [command, "--out", str(out)]
    if config is not None:
        argv += ["--config", _write_config(tmp_path, config)]
    argv += list(extra)
    return main(argv), out


def _load_json(out, name):
    return json.loads((out / name).read_text())


# --- info ---------------------------------------------------------------


def test_info_prints_version_presets_and_tolerances(capsys):
    assert main(["info"]) == 0
    text = capsys.readouterr().out
    assert __version__ in text
    assert "single-wave" in text
    assert "counterprop-pair" in text
    assert "transversality" in text
    assert "PHWF1" in text


def test_console_script_runs():
    result = subprocess.run(
        [sys.executable, "-m", "photonflow", "info"],
        capture_output=True, text=True)
    assert result.returncode == 0
    assert __version__ in result.stdout


# --- evolve ---------------------------------------------------------------


def test_evolve_writes_snapshots_and_diagnostics(tmp_path):
    rc, out = _run(tmp_path, "evolve")
    assert rc == 0
    diag = _load_json(out, "diagnostics.json")
    snapshots = diag["snapshots"]
    assert [s["time"] for s in snapshots] == [0.0, 1.0, 2.0]

    energies = [s["energy"] for s in snapshots]
    numbers = [s["photon_number"] for s in snapshots]
    box = (2.0 * np.pi) ** 3
    np.testing.assert_allclose(energies, box, rtol=1e-12)
    np.testing.assert_allclose(numbers, box, rtol=1e-12)
    assert all(s["transversality_residual"] < 1e-10 for s in snapshots)

    for s in snapshots:
        stored = read_weber(out / s["file"])
        assert stored.representation == "momentum"
        assert stored.time == s["time"]
        assert stored.spec.n_per_axis == diag["grid"]["n"]


def test_evolve_normalize_gives_unit_photon_number(tmp_path):
    rc, out = _run(tmp_path, "evolve",
                   config={"evolve": {"times": [0.0, 0.9, 3.7], "normalize": True}})
    assert rc == 0
    diag = _load_json(out, "diagnostics.json")
    assert diag["normalized"] is True
    for s in diag["snapshots"]:
        assert abs(s["photon_number"] - 1.0) < 1e-12


def test_evolve_resumes_from_snapshot_file(tmp_path):
    rc, first = _run(tmp_path, "evolve", config={"evolve": {"times": [0.0, 0.7]}})
    assert rc == 0

    resume_cfg = _write_config(
        tmp_path,
        {"state": {"file": str(first / "snapshot_01.phwf")},
         "evolve": {"times": [1.5]}},
        name="resume.json")
    resumed_out = tmp_path / "resumed"
    assert main(["evolve", "--config", resume_cfg, "--out", str(resumed_out)]) == 0

    rc, direct = _run(tmp_path, "evolve", config={"evolve": {"times": [1.5]}})
    assert rc == 0

    resumed = read_weber(resumed_out / "snapshot_00.phwf")
    reference = read_weber(direct / "snapshot_00.phwf")
    assert resumed.time == reference.time == 1.5
    np.testing.assert_allclose(resumed.field, reference.field, atol=1e-13)


def test_evolve_zero_state(tmp_path):
    rc, out = _run(tmp_path, "evolve",
                   config={"state": {"components": []}, "evolve": {"times": [0.0, 1.0]}})
    assert rc == 0
    diag = _load_json(out, "diagnostics.json")
    assert all(s["energy"] == 0.0 for s in diag["snapshots"])
    assert all(s["photon_number"] == 0.0 for s in diag["snapshots"])

    rc, _ = _run(tmp_path, "evolve",
                 config={"state": {"components": []},
                         "evolve": {"times": [0.0], "normalize": True}})
    assert rc == 1


def test_evolve_custom_components(tmp_path):
    config = {
        "state": {"components": [
            {"k": [0, 0, 2], "I": 0.5, "handedness": "left", "phase": 0.25},
        ]},
        "evolve": {"times": [0.4]},
    }
    rc, out = _run(tmp_path, "evolve", config=config)
    assert rc == 0
    snap = _load_json(out, "diagnostics.json")["snapshots"][0]
    box = (2.0 * np.pi) ** 3
    assert abs(snap["energy"] - 0.5 * box) < 1e-9
    assert abs(snap["photon_number"] - 0.25 * box) < 1e-9


# --- boost-audit ------------------------------------------------------------


def test_boost_audit_verdict_table(tmp_path):
    rc, out = _run(tmp_path, "boost-audit")
    assert rc == 0
    audits = _load_json(out, "audits.json")
    assert len(audits) == 8

    verdicts = {(a["scenario"], a["recipe"]): a["verdict"] for a in audits}
    for scenario in ("single-wave z-boost", "single-wave x-boost", "two-wave z-boost"):
        assert verdicts[(scenario, "phi_based")] == "four_vector_consistent"
    assert verdicts[("two-wave x-boost", "phi_based")] == "violated"
    for scenario in ("single-wave z-boost", "single-wave x-boost",
                     "two-wave z-boost", "two-wave x-boost"):
        assert verdicts[(scenario, "weber_based")] == "violated"

    failing = next(a for a in audits
                   if a["scenario"] == "two-wave x-boost" and a["recipe"] == "phi_based")
    assert abs(failing["max_mismatch"] - np.sqrt(2.0) / 3.0) < 1e-6


def test_boost_audit_interference_csv(tmp_path):
    rc, out = _run(tmp_path, "boost-audit")
    assert rc == 0
    with open(out / "interference.csv") as fh:
        header = fh.readline().strip()
    assert header == "s,rho_boosted_frame,rho_fourvector,mismatch"
    table = np.loadtxt(out / "interference.csv", delimiter=",", skiprows=1)
    assert table.shape == (256, 4)

    rho = table[:, 1]
    gamma = 2.0 / np.sqrt(3.0)
    assert abs(rho.max() - (1.5 * gamma + 1.0 / np.sqrt(6.0))) < 1e-3
    assert abs(rho.min() - (1.5 * gamma - 1.0 / np.sqrt(6.0))) < 1e-3
    np.testing.assert_allclose(table[:, 3], np.abs(table[:, 1] - table[:, 2]),
                               atol=1e-12)
    # the four-vector route predicts a constant density for this state
    np.testing.assert_allclose(table[:, 2], 1.5 * gamma, atol=1e-9)


# --- trajectories -----------------------------------------------------------


def test_trajectories_single_wave_comoves_at_c(tmp_path):
    rc, out = _run(tmp_path, "trajectories")
    assert rc == 0
    summary = _load_json(out, "summary.json")
    assert summary["guidance"] == "phi_based"
    assert summary["count"] == 16
    assert summary["node_hits"] == 0
    assert abs(summary["max_speed_over_c"] - 1.0) < 1e-9

    checks = summary["frame_consistency"]
    assert [c["guidance"] for c in checks] == ["phi_based", "weber_based"]
    for check in checks:
        assert check["mismatch_over_c"] < 1e-10

    with open(out / "trajectories.csv") as fh:
        header = fh.readline().strip()
    assert header == "traj,t,x,y,z,vx,vy,vz,node_hit"
    table = np.loadtxt(out / "trajectories.csv", delimiter=",", skiprows=1)
    assert set(np.unique(table[:, 0])) == set(range(16))
    assert np.abs(table[:, 5:8] - np.array([0.0, 0.0, 1.0])).max() < 1e-12


def test_trajectories_counterprop_frame_disagreement(tmp_path):
    config = {
        "state": {"preset": "counterprop-pair"},
        "boost": {"direction": [0, 0, 1], "u": 0.5},
        "trajectories": {"t0": 0.0, "t1": 1.0, "step": 0.05,
                         "initial_points": [[0.0, 0.0, 0.0], [0.3, 0.0, 1.1]]},
    }
    rc, out = _run(tmp_path, "trajectories", config=config)
    assert rc == 0
    summary = _load_json(out, "summary.json")
    assert summary["count"] == 2
    by_recipe = {c["guidance"]: c for c in summary["frame_consistency"]}
    assert by_recipe["phi_based"]["mismatch_over_c"] < 1e-10
    assert abs(by_recipe["weber_based"]["mismatch_over_c"] - 0.3) < 1e-9
    np.testing.assert_allclose(by_recipe["phi_based"]["v_velocity_addition"],
                               [0.0, 0.0, -0.2], atol=1e-12)


def test_trajectories_seed_controls_sampling(tmp_path):
    _, out_a = _run(tmp_path, "trajectories", extra=["--seed", "5"])
    csv_a = (out_a / "trajectories.csv").read_text()
    out_b = tmp_path / "again"
    main(["trajectories", "--out", str(out_b), "--seed", "5"])
    assert (out_b / "trajectories.csv").read_text() == csv_a
    out_c = tmp_path / "other-seed"
    main(["trajectories", "--out", str(out_c), "--seed", "6"])
    assert (out_c / "trajectories.csv").read_text() != csv_a


# --- doubleslit -------------------------------------------------------------


def test_doubleslit_two_sources_show_fringes(tmp_path):
    rc, out = _run(tmp_path, "doubleslit")
    assert rc == 0
    summary = _load_json(out, "summary.json")
    assert summary["sources"] == 2
    assert summary["component_count"] == 2
    assert abs(summary["expected_spacing"] - np.pi) < 1e-12
    assert abs(summary["fringe_spacing"] - summary["expected_spacing"]) \
        <= summary["grid"]["cell"]
    assert abs(summary["visibility"] - 0.9) < 1e-6

    table = np.loadtxt(out / "frames.csv", delimiter=",", skiprows=1)
    n = summary["grid"]["n"]
    assert table.shape == (len(summary["times"]) * n, 3)
    assert set(np.unique(table[:, 0])) == set(summary["times"])


def test_doubleslit_unbalanced_sources_lower_visibility(tmp_path):
    ratio = 0.25
    rc, out = _run(tmp_path, "doubleslit",
                   config={"doubleslit": {"intensity_ratio": ratio}})
    assert rc == 0
    summary = _load_json(out, "summary.json")
    expected = 0.9 * 2.0 * np.sqrt(ratio) / (1.0 + ratio)
    assert abs(summary["visibility"] - expected) < 1e-6
    assert abs(summary["visibility"] - 0.72) < 1e-6


def test_doubleslit_single_source_is_fringe_free(tmp_path):
    rc, out = _run(tmp_path, "doubleslit", config={"doubleslit": {"sources": 1}})
    assert rc == 0
    summary = _load_json(out, "summary.json")
    assert summary["fringe_spacing"] is None
    assert summary["expected_spacing"] is None
    assert summary["visibility"] < 1e-9


def test_doubleslit_bundles_keep_fringe_spacing(tmp_path):
    rc, out = _run(tmp_path, "doubleslit",
                   config={"doubleslit": {"bundle_width": 1, "bundle_sigma": 0.8}})
    assert rc == 0
    summary = _load_json(out, "summary.json")
    # offsets -1, 0, +1 around m = +/-1; the m = 0 member of each bundle
    # is dropped, leaving {1, 2} and {-1, -2}
    assert summary["component_count"] == 4
    assert abs(summary["fringe_spacing"] - np.pi) < 1e-12
    # bundle spread washes the pattern out a little
    assert 0.5 < summary["visibility"] < 0.9


# --- config and error handling ----------------------------------------------


def test_invalid_json_reports_position(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "grid": {\n    "n": 16,,\n  }\n}\n')
    rc = main(["evolve", "--config", str(bad), "--out", str(tmp_path / "out")])
    assert rc == 2
    err = capsys.readouterr().err
    assert f"{bad}:3:" in err


def test_unknown_preset_exits_2(tmp_path, capsys):
    rc, _ = _run(tmp_path, "evolve", config={"state": {"preset": "no-such"}})
    assert rc == 2
    err = capsys.readouterr().err
    assert "no-such" in err
    assert "single-wave" in err  # error lists the available presets


def test_off_grid_wave_vector_exits_2(tmp_path, capsys):
    rc, _ = _run(tmp_path, "evolve",
                 config={"state": {"components": [{"k": [0, 0, 1.3], "I": 1.0}]}})
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_tolerance_key_exits_2(tmp_path, capsys):
    rc, _ = _run(tmp_path, "evolve", extra=["--tolerance", "bogus=1e-3"])
    assert rc == 2
    assert "bogus" in capsys.readouterr().err


def test_state_file_combined_with_preset_exits_2(tmp_path):
    rc, _ = _run(tmp_path, "evolve",
                 config={"state": {"file": "x.phwf", "preset": "single-wave"},
                         "evolve": {"times": [0.0]}})
    assert rc == 2


def test_missing_state_file_exits_2(tmp_path):
    rc, _ = _run(tmp_path, "evolve",
                 config={"state": {"file": str(tmp_path / "absent.phwf")},
                         "evolve": {"times": [0.0]}})
    assert rc == 2


def test_corrupt_state_file_exits_1(tmp_path):
    bad = tmp_path / "corrupt.phwf"
    bad.write_bytes(b"PHWF1" + b"\x00" * 16)
    rc, _ = _run(tmp_path, "evolve",
                 config={"state": {"file": str(bad)}, "evolve": {"times": [0.0]}})
    assert rc == 1


def test_tolerance_override_changes_behavior(tmp_path):
    # an absurdly tight audit tolerance makes even the consistent cases fail
    rc, out = _run(tmp_path, "boost-audit", extra=["--tolerance", "audit=1e-30"])
    assert rc == 0
    audits = _load_json(out, "audits.json")
    assert all(a["verdict"] == "violated" for a in audits)
    assert all(a["tolerance"] == 1e-30 for a in audits)
