"""Command-line interface tests: outputs, exit codes, manifests, goldens."""

import json
import math
import os
import subprocess
import sys
from pathlib import Path

import pytest

from evoflow import cli
from evoflow.cli import main
from evoflow.errors import GuardRefusal, InternalCheckError

GOLDEN = Path(__file__).parent / "golden"


def run_main(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def base_config(seed=11, n=2000, **experiment):
    exp = {
        "checkpoints": [0.5, 1.0],
        "moment_orders": [1, 2],
        "tail_radii": [3.0],
    }
    exp.update(experiment)
    return {
        "schema_version": 1,
        "model": {"dim": 3, "k0": 0.0, "schedule": {"kind": "constant", "c0": 1.0}},
        "certificate": "auto",
        "experiment": exp,
        "sim": {"n_paths": n, "dt": 0.01, "seed": seed},
    }


def write_config(tmp_path, cfg, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(cfg, indent=2) + "\n")
    return path


# -------------------------------------------------------------------- goldens


@pytest.mark.parametrize(
    "args,golden",
    [
        ([], "help_main.txt"),
        (["special"], "help_special.txt"),
        (["bounds"], "help_bounds.txt"),
        (["certify"], "help_certify.txt"),
        (["simulate"], "help_simulate.txt"),
        (["verify"], "help_verify.txt"),
    ],
)
def test_help_matches_golden(args, golden):
    env = dict(os.environ, COLUMNS="80")
    proc = subprocess.run(
        [sys.executable, "-m", "evoflow", *args, "--help"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / golden).read_text()


def test_usage_error_exits_2():
    proc = subprocess.run(
        [sys.executable, "-m", "evoflow", "bounds", "--kind", "nonsense"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


# ----------------------------------------------------------- small subcommands


def test_bounds_worked_example(capsys):
    code, out, _ = run_main(
        [
            "bounds",
            "--kind",
            "second_moment",
            "--nu",
            "3",
            "--lambda",
            "0",
            "--r0",
            "0",
            "--t",
            "1",
        ],
        capsys,
    )
    assert code == 0
    assert out.strip() == "3"


def test_bounds_concentration_modes(capsys):
    common = ["bounds", "--kind", "concentration", "--nu", "3", "--lambda", "0",
              "--r0", "0", "--t", "1", "--r", "4"]
    code, out, _ = run_main(common + ["--delta", "0.8125"], capsys)
    assert code == 0
    assert out.strip() == "0.0185175684859"
    # without --delta the optimizer lands on the same optimum
    code, out2, _ = run_main(common, capsys)
    assert code == 0
    assert out2.strip() == "0.0185175684859"


def test_special_laguerre(capsys):
    code, out, _ = run_main(
        ["special", "--kind", "laguerre", "--p", "2", "--alpha", "0.5", "--x", "1"],
        capsys,
    )
    assert code == 0
    # L_2^(1/2)(1) = ((a+1)(a+2) - 2(a+2)z + z^2)/2 at a = 1/2, z = 1
    val = float(out.strip())
    assert val == pytest.approx(-0.125, rel=1e-12)


def test_certify_sphere_example(capsys):
    code, out, _ = run_main(
        [
            "certify",
            "--model",
            "sphere",
            "--dim",
            "3",
            "--k0",
            "1",
            "--schedule",
            "ricci",
            "--sub-horizon",
            "0.2",
        ],
        capsys,
    )
    assert code == 0
    assert out == "nu = 3\nlambda = -4\nhorizon = 0.2\norigin = analytic_model\n"


def test_certify_from_config(tmp_path, capsys):
    cfg = base_config()
    cfg["experiment"]["sub_horizon"] = 1.5
    path = write_config(tmp_path, cfg)
    code, out, _ = run_main(["certify", "--config", str(path)], capsys)
    assert code == 0
    assert "nu = 3" in out and "lambda = 0" in out


def test_certify_refuses_config_and_model_flags(tmp_path, capsys):
    path = write_config(tmp_path, base_config())
    code, _, err = run_main(
        ["certify", "--config", str(path), "--model", "euclidean", "--dim", "3"],
        capsys,
    )
    assert code == 2
    assert "config error" in err


# ----------------------------------------------------------------- exit codes


def test_missing_config_exits_2(tmp_path, capsys):
    code, _, err = run_main(
        ["verify", "--config", str(tmp_path / "missing.json"),
         "--out", str(tmp_path / "o")],
        capsys,
    )
    assert code == 2
    assert "config error" in err


def test_unknown_config_key_exits_2(tmp_path, capsys):
    cfg = base_config()
    cfg["typo_key"] = 1
    path = write_config(tmp_path, cfg)
    code, _, err = run_main(
        ["verify", "--config", str(path), "--out", str(tmp_path / "o")], capsys
    )
    assert code == 2
    assert "typo_key" in err


def test_domain_error_exits_2(capsys):
    code, _, err = run_main(
        ["bounds", "--kind", "second_moment", "--nu", "0.5", "--lambda", "0",
         "--r0", "0", "--t", "1"],
        capsys,
    )
    assert code == 2
    assert "domain error" in err


def test_guard_refusal_exits_3(capsys, monkeypatch):
    def boom(model, sub_horizon, **kw):
        raise GuardRefusal("nope")

    monkeypatch.setattr(cli, "certify", boom)
    code, _, err = run_main(
        ["certify", "--model", "euclidean", "--dim", "3", "--sub-horizon", "1"],
        capsys,
    )
    assert code == 3
    assert "guard refusal" in err


def test_internal_check_error_exits_3(capsys, monkeypatch):
    def boom(model, sub_horizon, **kw):
        raise InternalCheckError("grid violation")

    monkeypatch.setattr(cli, "certify", boom)
    code, _, err = run_main(
        ["certify", "--model", "euclidean", "--dim", "3", "--sub-horizon", "1"],
        capsys,
    )
    assert code == 3
    assert "internal check failed" in err


def test_bounds_exp_moment_domain_limit(capsys):
    # the analytic bound exists for theta Lam < 1; past that it is a
    # domain error, exit 2 (the 0.5 guard belongs to the estimator)
    code, _, err = run_main(
        ["bounds", "--kind", "exp_moment", "--nu", "3", "--lambda", "0",
         "--r0", "0", "--t", "1", "--theta", "1.2"],
        capsys,
    )
    assert code == 2
    assert "domain error" in err


# --------------------------------------------------------------------- verify


def test_verify_pass_and_outputs(tmp_path, capsys):
    path = write_config(tmp_path, base_config())
    out_dir = tmp_path / "out"
    code, out, _ = run_main(
        ["verify", "--config", str(path), "--out", str(out_dir)], capsys
    )
    assert code == 0
    assert "status: pass" in out
    names = sorted(p.name for p in out_dir.iterdir())
    assert names == [
        "bounds_vs_estimates.png",
        "manifest.json",
        "report.csv",
        "report.json",
        "slack.png",
    ]
    report = json.loads((out_dir / "report.json").read_text())
    assert report["status"] == "pass"
    manifest = json.loads((out_dir / "manifest.json").read_text())
    assert manifest["command"] == "verify"
    assert manifest["config"]["schema_version"] == 1
    assert manifest["config"]["sim"]["seed"] == 11
    assert manifest["seed"] == 11
    assert manifest["outputs"] == [
        "bounds_vs_estimates.png",
        "report.csv",
        "report.json",
        "slack.png",
    ]
    assert manifest["wall_clock_seconds"] >= 0.0
    assert "wall_clock_seconds" not in report


def test_verify_no_figures(tmp_path, capsys):
    path = write_config(tmp_path, base_config())
    out_dir = tmp_path / "out"
    code, _, _ = run_main(
        ["verify", "--config", str(path), "--out", str(out_dir), "--no-figures"],
        capsys,
    )
    assert code == 0
    names = sorted(p.name for p in out_dir.iterdir())
    assert names == ["manifest.json", "report.csv", "report.json"]


def test_verify_violation_exits_1(tmp_path, capsys):
    cfg = base_config(n=20_000)
    cfg["certificate"] = {"nu": 1.0, "lambda": -2.0, "horizon": "inf"}
    path = write_config(tmp_path, cfg)
    out_dir = tmp_path / "out"
    code, out, _ = run_main(
        ["verify", "--config", str(path), "--out", str(out_dir), "--no-figures"],
        capsys,
    )
    assert code == 1
    assert "status: violation" in out
    assert "fail" in out


def test_verify_manifest_rerun_is_byte_identical(tmp_path, capsys):
    path = write_config(tmp_path, base_config())
    first = tmp_path / "first"
    second = tmp_path / "second"
    code, _, _ = run_main(
        ["verify", "--config", str(path), "--out", str(first)], capsys
    )
    assert code == 0
    code, _, _ = run_main(
        [
            "verify",
            "--config",
            str(first / "manifest.json"),
            "--out",
            str(second),
            "--workers",
            "4",
        ],
        capsys,
    )
    assert code == 0
    for name in ("report.json", "report.csv", "bounds_vs_estimates.png", "slack.png"):
        assert (first / name).read_bytes() == (second / name).read_bytes(), name


def test_verify_seed_precedence(tmp_path, capsys, monkeypatch):
    cfg = base_config()
    del cfg["sim"]["seed"]
    path = write_config(tmp_path, cfg)

    # no seed anywhere: refused
    monkeypatch.delenv("EVOFLOW_SEED", raising=False)
    code, _, err = run_main(
        ["verify", "--config", str(path), "--out", str(tmp_path / "a")], capsys
    )
    assert code == 2 and "seed" in err

    # environment supplies one
    monkeypatch.setenv("EVOFLOW_SEED", "21")
    code, _, _ = run_main(
        ["verify", "--config", str(path), "--out", str(tmp_path / "b"),
         "--no-figures"],
        capsys,
    )
    assert code == 0
    manifest = json.loads((tmp_path / "b" / "manifest.json").read_text())
    assert manifest["seed"] == 21

    # the flag wins over the environment
    code, _, _ = run_main(
        ["verify", "--config", str(path), "--out", str(tmp_path / "c"),
         "--seed", "33", "--no-figures"],
        capsys,
    )
    assert code == 0
    manifest = json.loads((tmp_path / "c" / "manifest.json").read_text())
    assert manifest["seed"] == 33
    assert manifest["config"]["sim"]["seed"] == 33


def test_verify_flag_seed_beats_config_seed(tmp_path, capsys):
    path = write_config(tmp_path, base_config(seed=11))
    code, _, _ = run_main(
        ["verify", "--config", str(path), "--out", str(tmp_path / "d"),
         "--seed", "99", "--no-figures"],
        capsys,
    )
    assert code == 0
    manifest = json.loads((tmp_path / "d" / "manifest.json").read_text())
    assert manifest["seed"] == 99


# ------------------------------------------------------------------- simulate


def test_simulate_outputs(tmp_path, capsys):
    path = write_config(tmp_path, base_config(n=500))
    out_dir = tmp_path / "sim"
    code, out, _ = run_main(
        ["simulate", "--config", str(path), "--t", "0.5", "--out", str(out_dir)],
        capsys,
    )
    assert code == 0
    assert "mean_squared_radius" in out
    names = sorted(p.name for p in out_dir.iterdir())
    assert names == ["manifest.json", "samples.csv", "samples.meta.json"]
    manifest = json.loads((out_dir / "manifest.json").read_text())
    assert manifest["command"] == "simulate"
    assert manifest["config"]["experiment"]["checkpoints"] == [0.5]
    header = (out_dir / "samples.csv").read_text().splitlines()[0]
    assert header == "path_index,terminal_radius,sup_radius,stopped_flag"


def test_simulate_requires_some_time(tmp_path, capsys):
    cfg = base_config(n=100)
    cfg["experiment"]["checkpoints"] = []
    path = write_config(tmp_path, cfg)
    code, _, err = run_main(
        ["simulate", "--config", str(path), "--out", str(tmp_path / "s")], capsys
    )
    assert code == 2
    assert "config error" in err


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    out = capsys.readouterr().out
    assert "evoflow" in out


def test_inf_round_trip_in_manifest(tmp_path, capsys):
    # a user certificate with an infinite horizon must survive the
    # manifest re-run path: inf is serialized as the string "inf"
    cfg = base_config()
    cfg["certificate"] = {"nu": 3.0, "lambda": 0.0, "horizon": "inf"}
    path = write_config(tmp_path, cfg)
    out_dir = tmp_path / "inf"
    code, _, _ = run_main(
        ["verify", "--config", str(path), "--out", str(out_dir), "--no-figures"],
        capsys,
    )
    assert code == 0
    manifest = json.loads((out_dir / "manifest.json").read_text())
    assert manifest["config"]["certificate"]["horizon"] == "inf"
    rerun = tmp_path / "inf2"
    code, _, _ = run_main(
        ["verify", "--config", str(out_dir / "manifest.json"), "--out", str(rerun),
         "--no-figures"],
        capsys,
    )
    assert code == 0
    assert (out_dir / "report.json").read_bytes() == (rerun / "report.json").read_bytes()
