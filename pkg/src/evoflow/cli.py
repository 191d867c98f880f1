"""Command line interface.

Five subcommands: special (closed-form function evaluation), bounds
(certificate bound evaluation), certify (derive a certificate for a
model), simulate (run one simulation and save the samples), verify (run
a full bound-verification experiment and write report, figures and
manifest).

Exit codes: 0 success / all checks pass, 1 a verified bound violation,
2 usage or config errors (including bad domains), 3 guard refusals and
failed internal self-checks. Numbers print with 12 significant digits.

Every run that writes files also writes manifest.json: the command, the
fully resolved config (seed pinned), and the produced outputs. A
manifest is itself accepted wherever a config is, so
`evoflow verify --config out/manifest.json` reproduces the run that
wrote it byte for byte (wall-clock time lives only in the manifest).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

from ._version import __version__
from .bounds import (
    BoundQuery,
    Certificate,
    concentration_bound,
    concentration_bound_optimized,
    concentration_rate,
    even_moment_bound,
    exit_time_bound,
    exit_time_bound_optimized,
    exp_moment_bound,
    first_moment_bound,
    second_moment_bound,
)
from .config import (
    CONFIG_SCHEMA_VERSION,
    build_model,
    build_spec,
    load_config,
    resolved_config,
)
from .errors import ConfigError, DomainError, GuardRefusal, InternalCheckError
from .geometry import certify
from .harness import format_number, run_verification, write_report
from .simulate import simulate_radial, simulate_sup_radial, write_samples
from .special import (
    gaussian_even_moment,
    gaussian_exp_moment,
    laguerre_value,
    laguerre_generating_closed,
    laguerre_generating_sum,
    lambda_integral,
)

SPECIAL_KINDS = (
    "laguerre",
    "generating_sum",
    "generating_closed",
    "gaussian_even_moment",
    "gaussian_exp_moment",
    "lambda_integral",
)

BOUND_KINDS = (
    "second_moment",
    "first_moment",
    "even_moment",
    "exp_moment",
    "concentration",
    "exit",
    "rate",
)

MODEL_NAMES = ("euclidean", "sphere", "hyperbolic")


def _require(args: argparse.Namespace, kind: str, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise ConfigError(f"kind {kind} requires {', '.join(missing)}")


def _print_value(x: float) -> None:
    print(format_number(x))


def _jsonable(value):
    # Strict-JSON view of a config/manifest payload: inf becomes the
    # string "inf" (readable back by the loader), NaN is refused.
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, float):
        if math.isnan(value):
            raise DomainError("NaN is not representable in a manifest")
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
    return value


def _write_manifest(
    out_dir: Path,
    command: str,
    config: dict,
    seed: int,
    workers: int,
    outputs: list[Path],
    wall_clock_seconds: float,
) -> Path:
    manifest = {
        "schema_version": CONFIG_SCHEMA_VERSION,
        "command": command,
        "config": _jsonable(config),
        "seed": seed,
        "workers": workers,
        "version": __version__,
        "outputs": sorted(p.name for p in outputs),
        "wall_clock_seconds": wall_clock_seconds,
    }
    path = out_dir / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2) + "\n")
    return path


def _cmd_special(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "laguerre":
        _require(args, kind, "p", "alpha", "x")
        _print_value(laguerre_value(args.p, args.alpha, args.x))
    elif kind == "generating_sum":
        _require(args, kind, "gamma", "alpha", "x", "terms")
        _print_value(laguerre_generating_sum(args.gamma, args.alpha, args.x, args.terms))
    elif kind == "generating_closed":
        _require(args, kind, "gamma", "alpha", "x")
        _print_value(laguerre_generating_closed(args.gamma, args.alpha, args.x))
    elif kind == "gaussian_even_moment":
        _require(args, kind, "mu", "sigma2", "p")
        _print_value(gaussian_even_moment(args.mu, args.sigma2, args.p))
    elif kind == "gaussian_exp_moment":
        _require(args, kind, "mu", "sigma2", "theta")
        _print_value(gaussian_exp_moment(args.mu, args.sigma2, args.theta))
    else:
        _require(args, kind, "lam", "t")
        _print_value(lambda_integral(args.lam, args.t))
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    cert = Certificate(
        nu=args.nu, lam=args.lam, horizon=args.horizon, origin="user_supplied"
    )
    q = BoundQuery(
        cert=cert, t=args.t, r0=args.r0,
        p=args.p, theta=args.theta, r=args.r, delta=args.delta,
    )
    kind = args.kind
    if kind == "second_moment":
        _print_value(second_moment_bound(q))
    elif kind == "first_moment":
        _print_value(first_moment_bound(q))
    elif kind == "even_moment":
        _require(args, kind, "p")
        _print_value(even_moment_bound(q))
    elif kind == "exp_moment":
        _require(args, kind, "theta")
        _print_value(exp_moment_bound(q))
    elif kind == "concentration":
        _require(args, kind, "r")
        if args.delta is not None:
            _print_value(concentration_bound(q))
        else:
            _print_value(concentration_bound_optimized(q)[1])
    elif kind == "exit":
        _require(args, kind, "r")
        if args.delta is not None:
            _print_value(exit_time_bound(q))
        else:
            _print_value(exit_time_bound_optimized(q)[1])
    else:
        _print_value(concentration_rate(cert, args.t))
    return 0


def _model_config_from_flags(args: argparse.Namespace) -> dict:
    name = args.model
    k0 = args.k0
    if name == "euclidean":
        if k0 not in (None, 0.0):
            raise ConfigError(f"euclidean model has k0 = 0, got --k0 {k0}")
        k0 = 0.0
    elif k0 is None:
        raise ConfigError(f"--k0 is required for the {name} model")
    elif name == "sphere" and not k0 > 0.0:
        raise ConfigError(f"sphere model needs k0 > 0, got {k0}")
    elif name == "hyperbolic" and not k0 < 0.0:
        raise ConfigError(f"hyperbolic model needs k0 < 0, got {k0}")
    if args.schedule == "ricci":
        schedule: dict = {"kind": "ricci_flow"}
        if args.c0 is not None:
            raise ConfigError("--c0 applies only to the constant schedule")
    else:
        schedule = {"kind": "constant", "c0": 1.0 if args.c0 is None else args.c0}
    return {
        "dim": args.dim,
        "k0": k0,
        "schedule": schedule,
        "drift": {"constant": args.drift},
    }


def _cmd_certify(args: argparse.Namespace) -> int:
    sub_horizon = args.sub_horizon
    if args.config is not None:
        if args.model is not None:
            raise ConfigError("pass either --config or --model flags, not both")
        doc = load_config(args.config)
        model = build_model(doc["model"])
        if sub_horizon is None:
            exp = doc.get("experiment", {})
            sub_horizon = exp.get("sub_horizon") if isinstance(exp, dict) else None
    else:
        if args.model is None or args.dim is None:
            raise ConfigError("certify needs --config, or --model and --dim")
        model = build_model(_model_config_from_flags(args))
    if sub_horizon is None:
        raise ConfigError("certify needs --sub-horizon (or experiment.sub_horizon in the config)")
    cert = certify(model, float(sub_horizon))
    print(f"nu = {format_number(cert.nu)}")
    print(f"lambda = {format_number(cert.lam)}")
    print(f"horizon = {format_number(cert.horizon)}")
    print(f"origin = {cert.origin}")
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    doc = load_config(args.config)
    spec = build_spec(doc, flag_seed=args.seed)
    if args.t is not None:
        t = args.t
    elif spec.checkpoints:
        t = spec.checkpoints[-1]
    else:
        raise ConfigError("simulate needs --t or a nonempty experiment.checkpoints")

    runner = simulate_sup_radial if spec.sim.record_sup else simulate_radial
    samples = runner(spec.model, spec.r0, t, spec.sim, workers=args.workers)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    csv_path, meta_path = write_samples(samples, out / "samples")

    # Pin the simulated time into the manifest's config so a re-run from
    # the manifest reproduces this exact run without extra flags.
    config = resolved_config(spec)
    config["experiment"]["checkpoints"] = [float(t)]
    outputs = [csv_path, meta_path]
    manifest = _write_manifest(
        out, "simulate", config, spec.sim.seed, args.workers, outputs,
        time.perf_counter() - started,
    )

    print(f"n = {samples.n}")
    print(f"t = {format_number(t)}")
    mean_sq = float((samples.terminal_radii ** 2).mean())
    print(f"mean_squared_radius = {format_number(mean_sq)}")
    if samples.sup_radii is not None:
        print(f"mean_sup_radius = {format_number(float(samples.sup_radii.mean()))}")
    for p in (*outputs, manifest):
        print(f"wrote {p}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    doc = load_config(args.config)
    spec = build_spec(doc, flag_seed=args.seed)
    report = run_verification(spec, workers=args.workers)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    json_path, csv_path = write_report(report, out)
    outputs = [json_path, csv_path]
    if not args.no_figures:
        from .plots import render_figures

        outputs.extend(render_figures(report, out))
    manifest = _write_manifest(
        out, "verify", resolved_config(spec), spec.sim.seed, args.workers,
        outputs, time.perf_counter() - started,
    )

    for c in report.checks:
        params = " ".join(f"{k}={v}" for k, v in c.params.items())
        line = f"{c.verdict:7s} {c.kind} t={format_number(c.t)}"
        if params:
            line += f" [{params}]"
        if c.bound is not None:
            line += f" bound={format_number(c.bound)}"
        if c.estimate is not None:
            line += (
                f" mean={format_number(c.estimate.mean)}"
                f" stderr={format_number(c.estimate.stderr)}"
            )
        if c.reason:
            line += f" ({c.reason})"
        print(line)
    print(f"status: {report.status}")
    for p in (*outputs, manifest):
        print(f"wrote {p}")
    return 0 if report.status == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evoflow",
        description="Radial diffusion bounds and Monte Carlo verification "
        "on evolving constant-curvature spaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_special = sub.add_parser(
        "special", help="evaluate a closed-form special function",
        description="Evaluate one of the package's closed-form special functions.",
    )
    p_special.add_argument("--kind", choices=SPECIAL_KINDS, required=True)
    p_special.add_argument("--p", type=int, help="polynomial degree / moment order")
    p_special.add_argument("--alpha", type=float, help="Laguerre order")
    p_special.add_argument("--x", type=float, help="function argument")
    p_special.add_argument("--gamma", type=float, help="generating series weight, |gamma| < 1")
    p_special.add_argument("--terms", type=int, help="number of series terms")
    p_special.add_argument("--mu", type=float, help="Gaussian mean")
    p_special.add_argument("--sigma2", type=float, help="Gaussian variance")
    p_special.add_argument("--theta", type=float, help="exponential weight")
    p_special.add_argument("--lambda", dest="lam", type=float, help="growth rate")
    p_special.add_argument("--t", type=float, help="time")
    p_special.set_defaults(func=_cmd_special)

    p_bounds = sub.add_parser(
        "bounds", help="evaluate a certificate bound",
        description="Evaluate a proven bound under a (nu, lambda) certificate.",
    )
    p_bounds.add_argument("--kind", choices=BOUND_KINDS, required=True)
    p_bounds.add_argument("--nu", type=float, required=True, help="certificate dimension bound")
    p_bounds.add_argument(
        "--lambda", dest="lam", type=float, required=True, help="certificate growth rate"
    )
    p_bounds.add_argument(
        "--horizon", type=float, default=math.inf,
        help="certificate validity horizon (default: inf)",
    )
    p_bounds.add_argument("--r0", type=float, default=0.0, help="start radius (default: 0)")
    p_bounds.add_argument("--t", type=float, required=True, help="time of evaluation")
    p_bounds.add_argument("--p", type=int, help="moment order for even_moment")
    p_bounds.add_argument("--theta", type=float, help="weight for exp_moment")
    p_bounds.add_argument("--r", type=float, help="radius for concentration / exit")
    p_bounds.add_argument(
        "--delta", type=float,
        help="fixed Chernoff parameter in (0, 1); omit to optimize over it",
    )
    p_bounds.set_defaults(func=_cmd_bounds)

    p_certify = sub.add_parser(
        "certify", help="derive a certificate for a model",
        description="Derive and self-check a drift certificate for a model "
        "over a finite sub-horizon.",
    )
    p_certify.add_argument("--config", help="config file; its model block is certified")
    p_certify.add_argument("--model", choices=MODEL_NAMES, help="built-in model family")
    p_certify.add_argument("--dim", type=int, help="dimension (>= 2)")
    p_certify.add_argument("--k0", type=float, help="base sectional curvature")
    p_certify.add_argument(
        "--schedule", choices=("constant", "ricci"), default="constant",
        help="scale schedule (default: constant)",
    )
    p_certify.add_argument("--c0", type=float, help="scale for the constant schedule")
    p_certify.add_argument(
        "--drift", type=float, default=0.0, help="constant radial drift (default: 0)"
    )
    p_certify.add_argument(
        "--sub-horizon", type=float, help="certify on [0, sub_horizon)"
    )
    p_certify.set_defaults(func=_cmd_certify)

    p_sim = sub.add_parser(
        "simulate", help="run one simulation and save the samples",
        description="Simulate the radial process and write samples.csv, "
        "samples.meta.json and manifest.json.",
    )
    p_sim.add_argument("--config", required=True, help="config or manifest file")
    p_sim.add_argument("--t", type=float, help="time to simulate to "
                       "(default: last experiment checkpoint)")
    p_sim.add_argument("--seed", type=int, help="overrides sim.seed and EVOFLOW_SEED")
    p_sim.add_argument("--workers", type=int, default=1, help="worker threads (default: 1)")
    p_sim.add_argument("--out", required=True, help="output directory")
    p_sim.set_defaults(func=_cmd_simulate)

    p_verify = sub.add_parser(
        "verify", help="verify proven bounds against simulations",
        description="Run every check in the config and write report.json, "
        "report.csv, figures and manifest.json.",
    )
    p_verify.add_argument("--config", required=True, help="config or manifest file")
    p_verify.add_argument("--seed", type=int, help="overrides sim.seed and EVOFLOW_SEED")
    p_verify.add_argument("--workers", type=int, default=1, help="worker threads (default: 1)")
    p_verify.add_argument(
        "--no-figures", action="store_true", help="skip rendering the report figures"
    )
    p_verify.add_argument("--out", required=True, help="output directory")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except GuardRefusal as exc:
        print(f"guard refusal: {exc}", file=sys.stderr)
        return 3
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
