"""CLI contract tests: parsing, artifacts, reports, exit statuses, and
byte-level determinism of emitted files."""

import json
import math

import pytest

from bogomolny.cli import main, parse_config


def run_cli(*argv) -> int:
    return main(list(argv))


def test_parse_config_skyrme():
    config = parse_config([
        "skyrme", "plot-data", "--gamma", "2", "--n", "1", "--lambda3",
        "1", "--beta", "1", "--cint", "1", "--r-max", "5", "--samples",
        "501",
    ])
    assert config.model == "skyrme"
    assert config.action == "plot-data"
    assert config.params["gamma"] == 2.0
    assert config.params["n"] == 1
    assert config.params["r_max"] == 5.0
    assert config.params["samples"] == 501
    assert config.tolerance is None
    assert config.output_path is None


def test_parse_config_coefficients():
    config = parse_config(["heisenberg", "build", "--f1", "0,1"])
    assert config.params["f1"] == (0.0, 1.0)
    # The --flag=value form carries lists that start with a minus sign.
    config = parse_config(["heisenberg", "build", "--f1=-1,2,0.5"])
    assert config.params["f1"] == (-1.0, 2.0, 0.5)


def test_usage_errors_exit_2(capsys):
    assert run_cli("oscillator", "solve", "--omega", "-1") == 2
    assert run_cli() == 2
    assert run_cli("oscillator") == 2
    assert run_cli("oscillator", "solve", "--badflag", "1") == 2
    assert run_cli("heisenberg", "build", "--f1", "1,,2") == 2
    assert run_cli("skyrme", "profile", "--n", "0") == 2
    assert run_cli("skyrme", "profile", "--samples", "1") == 2
    capsys.readouterr()


def test_help_exits_0(capsys):
    assert run_cli("--help") == 0
    capsys.readouterr()


def test_oscillator_solve_artifact(tmp_path, capsys):
    out = tmp_path / "trajectory.csv"
    status = run_cli(
        "oscillator", "solve", "--m", "1", "--omega", "2", "--c1", "4",
        "--x0", "0.5", "--t-end", "0.9", "--out", str(out),
    )
    assert status == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "t,x,xdot"
    assert len(lines) == 502
    first = lines[1].split(",")
    assert float(first[0]) == 0.0
    assert float(first[1]) == pytest.approx(0.5, abs=1e-12)
    capsys.readouterr()


def test_oscillator_verify_report(tmp_path, capsys):
    report = tmp_path / "report.json"
    status = run_cli(
        "oscillator", "verify", "--m", "1", "--omega", "1", "--c1", "1",
        "--x0", "0", "--t-end", "1.4", "--report", str(report),
    )
    assert status == 0
    payload = json.loads(report.read_text())
    assert set(payload) == {"model", "action", "params", "reports", "pass"}
    assert payload["model"] == "oscillator"
    assert payload["action"] == "verify"
    assert payload["pass"] is True
    names = [entry["model"] for entry in payload["reports"]]
    assert "oscillator.dual_system_analytic" in names
    assert "oscillator.euler_lagrange_fd" in names
    for entry in payload["reports"]:
        assert set(entry) == {
            "model", "params", "n_samples", "max_residual", "l2_residual",
            "tolerance", "pass",
        }
        assert entry["pass"] is True
    out = capsys.readouterr().out
    assert "overall: PASS" in out


def test_heisenberg_verify_passes(capsys):
    status = run_cli(
        "heisenberg", "verify", "--f1", "0,1", "--f2", "0", "--c1const",
        "0", "--grid", "21",
    )
    assert status == 0
    assert "overall: PASS" in capsys.readouterr().out


def test_heisenberg_build_artifact(tmp_path, capsys):
    out = tmp_path / "decomposition.json"
    status = run_cli(
        "heisenberg", "build", "--f1", "0,1", "--f2", "0", "--c1const",
        "0", "--out", str(out),
    )
    assert status == 0
    payload = json.loads(out.read_text())
    assert payload["F1"]["imag"] == [0.0, 0.5]
    assert payload["F2"]["imag"] == [0.0, -0.5]
    capsys.readouterr()


def test_heisenberg_plot_data_artifact(tmp_path, capsys):
    out = tmp_path / "fields.csv"
    status = run_cli(
        "heisenberg", "plot-data", "--f1", "0,1", "--f2", "0",
        "--c1const", "0", "--grid", "11", "--out", str(out),
    )
    assert status == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "x,y,U,V,energy_density"
    assert len(lines) == 1 + 11 * 11
    # Plane fields U=x, V=y at the first grid node (-3, -3).
    first = lines[1].split(",")
    assert float(first[2]) == pytest.approx(-3.0, abs=1e-12)
    assert float(first[3]) == pytest.approx(-3.0, abs=1e-12)
    capsys.readouterr()


def test_skyrme_profile_artifact(tmp_path, capsys):
    out = tmp_path / "profile.csv"
    status = run_cli(
        "skyrme", "profile", "--gamma", "2", "--n", "1", "--lambda3", "1",
        "--beta", "1", "--cint", "1", "--r-max", "5", "--samples", "101",
        "--out", str(out),
    )
    assert status == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "r,f,x1,ode_residual,energy_density"
    assert len(lines) == 102
    first = lines[1].split(",")
    assert float(first[1]) == pytest.approx(2.214293, abs=1e-5)
    capsys.readouterr()


def test_skyrme_plot_data_determinism(tmp_path, capsys):
    out_a = tmp_path / "a.csv"
    out_b = tmp_path / "b.csv"
    for out in (out_a, out_b):
        status = run_cli(
            "skyrme", "plot-data", "--gamma", "2", "--n", "1",
            "--lambda3", "1", "--beta", "1", "--cint", "1", "--r-max",
            "5", "--samples", "501", "--out", str(out),
        )
        assert status == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    capsys.readouterr()


def test_default_output_filenames(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert run_cli("skyrme", "profile", "--samples", "11") == 0
    assert (tmp_path / "skyrme_profile.csv").exists()
    assert run_cli("heisenberg", "build") == 0
    assert (tmp_path / "heisenberg_decomposition.json").exists()
    assert run_cli("oscillator", "solve", "--t-end", "1.0") == 0
    assert (tmp_path / "oscillator_trajectory.csv").exists()
    capsys.readouterr()


def test_verification_failure_exits_1(capsys):
    assert run_cli("skyrme", "verify", "--tol", "1e-15") == 1
    assert "overall: FAIL" in capsys.readouterr().out


def test_domain_errors_exit_3(capsys):
    # X1 leaves [-1, 1] at these couplings.
    assert run_cli("skyrme", "profile", "--cint=-0.5") == 3
    # Requested window crosses the turning time.
    assert run_cli("oscillator", "solve", "--t-end", "2.0") == 3
    # Initial position beyond the turning amplitude.
    assert run_cli("oscillator", "solve", "--x0", "5") == 3
    err = capsys.readouterr().err
    assert "model-domain error" in err


def test_explicit_figure_rendering(tmp_path, capsys):
    out = tmp_path / "profile.csv"
    fig = tmp_path / "profile_figure.png"
    status = run_cli(
        "skyrme", "plot-data", "--samples", "51", "--out", str(out),
        "--fig", str(fig),
    )
    assert status == 0
    assert fig.exists() and fig.stat().st_size > 0
    capsys.readouterr()


def test_report_renders_figure_alongside_artifact(tmp_path, capsys):
    out = tmp_path / "fields.csv"
    report = tmp_path / "fields_report.json"
    status = run_cli(
        "heisenberg", "plot-data", "--grid", "11", "--out", str(out),
        "--report", str(report),
    )
    assert status == 0
    assert report.exists()
    assert (tmp_path / "fields.png").exists()
    capsys.readouterr()


def test_verify_writes_no_figure(tmp_path, capsys):
    report = tmp_path / "verify.json"
    status = run_cli(
        "oscillator", "verify", "--t-end", "1.2", "--report", str(report),
    )
    assert status == 0
    assert report.exists()
    assert not list(tmp_path.glob("*.png"))
    capsys.readouterr()
