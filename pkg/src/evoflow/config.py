"""Strict JSON experiment configs: schema checks, model/spec construction.

A config is one JSON object with a schema_version and model / certificate
/ experiment / sim blocks. Unknown keys anywhere are errors: a typo in a
scientific config should fail loudly, not silently fall back to a
default. Infinity is spelled as the string "inf" (JSON has no inf
literal). A run manifest written by the CLI embeds the resolved config
under "config", and the loader unwraps that transparently, so a manifest
is itself a valid input for reproducing a run.

Seed precedence, highest first: the --seed flag, sim.seed in the file,
the EVOFLOW_SEED environment variable. Missing everywhere is an error.
"""

from __future__ import annotations

import json
import math
import os
from pathlib import Path

from .bounds import Certificate
from .errors import ConfigError
from .geometry import (
    ConstantSchedule,
    DriftSpec,
    EvolvingModel,
    ModelSpace,
    RicciFlowSchedule,
    TabulatedSchedule,
)
from .harness import ExperimentSpec
from .simulate import SimConfig

CONFIG_SCHEMA_VERSION = 1

SEED_ENV_VAR = "EVOFLOW_SEED"


def _expect_object(obj, path: str) -> dict:
    if not isinstance(obj, dict):
        raise ConfigError(f"{path} must be a JSON object, got {type(obj).__name__}")
    return obj


def _check_keys(obj: dict, allowed: tuple[str, ...], required: tuple[str, ...], path: str) -> None:
    unknown = sorted(set(obj) - set(allowed))
    if unknown:
        raise ConfigError(f"unknown key(s) {unknown} in {path}; allowed: {sorted(allowed)}")
    missing = sorted(set(required) - set(obj))
    if missing:
        raise ConfigError(f"missing required key(s) {missing} in {path}")


def _number(value, path: str, allow_inf: bool = False) -> float:
    if value == "inf" and allow_inf:
        return math.inf
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{path} must be a number, got {value!r}")
    return float(value)


def _integer(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{path} must be an integer, got {value!r}")
    return value


def _boolean(value, path: str) -> bool:
    if not isinstance(value, bool):
        raise ConfigError(f"{path} must be true or false, got {value!r}")
    return value


def _number_list(value, path: str) -> list[float]:
    if not isinstance(value, list):
        raise ConfigError(f"{path} must be a list of numbers, got {value!r}")
    return [_number(v, f"{path}[{i}]") for i, v in enumerate(value)]


def _integer_list(value, path: str) -> list[int]:
    if not isinstance(value, list):
        raise ConfigError(f"{path} must be a list of integers, got {value!r}")
    return [_integer(v, f"{path}[{i}]") for i, v in enumerate(value)]


def load_config(path: str | Path) -> dict:
    """Read and structurally validate a config (or run manifest) file."""
    path = Path(path)
    try:
        raw = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    obj = _expect_object(obj, "config")
    if "command" in obj and "config" in obj:
        # A run manifest: the resolved config is embedded under "config".
        obj = _expect_object(obj["config"], 'manifest["config"]')
    _check_keys(
        obj,
        allowed=("schema_version", "model", "certificate", "experiment", "sim"),
        required=("schema_version", "model", "sim"),
        path="config",
    )
    version = _integer(obj["schema_version"], "schema_version")
    if version != CONFIG_SCHEMA_VERSION:
        raise ConfigError(
            f"unsupported schema_version {version}; this build reads "
            f"{CONFIG_SCHEMA_VERSION}"
        )
    return obj


def build_model(obj) -> EvolvingModel:
    obj = _expect_object(obj, "model")
    _check_keys(obj, ("dim", "k0", "schedule", "drift"), ("dim", "k0"), "model")
    dim = _integer(obj["dim"], "model.dim")
    k0 = _number(obj["k0"], "model.k0")
    space = ModelSpace(dim, k0)

    sched_obj = obj.get("schedule", {"kind": "constant"})
    sched_obj = _expect_object(sched_obj, "model.schedule")
    kind = sched_obj.get("kind")
    if kind == "constant":
        _check_keys(sched_obj, ("kind", "c0"), ("kind",), "model.schedule")
        schedule = ConstantSchedule(c0=_number(sched_obj.get("c0", 1.0), "model.schedule.c0"))
    elif kind == "ricci_flow":
        # The rate is pinned by (dim, k0): this schedule is the
        # self-similar solution, not a free rescaling. A rate key (as
        # written back into manifests) is accepted but must agree.
        _check_keys(sched_obj, ("kind", "rate"), ("kind",), "model.schedule")
        schedule = RicciFlowSchedule.for_space(space)
        if "rate" in sched_obj:
            given = _number(sched_obj["rate"], "model.schedule.rate")
            if not math.isclose(given, schedule.rate, rel_tol=1e-12, abs_tol=1e-15):
                raise ConfigError(
                    f"model.schedule.rate {given} contradicts the rate "
                    f"{schedule.rate} determined by dim and k0"
                )
    elif kind == "tabulated":
        _check_keys(
            sched_obj, ("kind", "times", "values", "horizon"),
            ("kind", "times", "values"), "model.schedule",
        )
        horizon = sched_obj.get("horizon")
        schedule = TabulatedSchedule(
            _number_list(sched_obj["times"], "model.schedule.times"),
            _number_list(sched_obj["values"], "model.schedule.values"),
            horizon=None if horizon is None else _number(horizon, "model.schedule.horizon"),
        )
    else:
        raise ConfigError(
            f"model.schedule.kind must be constant, ricci_flow or tabulated, got {kind!r}"
        )

    drift_obj = _expect_object(obj.get("drift", {"constant": 0.0}), "model.drift")
    if "callable" in drift_obj:
        raise ConfigError("callable drifts cannot be built from config files")
    _check_keys(drift_obj, ("constant",), (), "model.drift")
    drift = DriftSpec(constant=_number(drift_obj.get("constant", 0.0), "model.drift.constant"))

    return EvolvingModel(space=space, schedule=schedule, drift=drift)


def build_certificate(obj) -> Certificate | str:
    if obj is None or obj == "auto":
        return "auto"
    obj = _expect_object(obj, "certificate")
    _check_keys(obj, ("nu", "lambda", "horizon", "origin"), ("nu", "lambda", "horizon"), "certificate")
    origin = obj.get("origin", "user_supplied")
    if not isinstance(origin, str):
        raise ConfigError(f"certificate.origin must be a string, got {origin!r}")
    return Certificate(
        nu=_number(obj["nu"], "certificate.nu"),
        lam=_number(obj["lambda"], "certificate.lambda"),
        horizon=_number(obj["horizon"], "certificate.horizon", allow_inf=True),
        origin=origin,
    )


def resolve_seed(config_seed: int | None, flag_seed: int | None, env=os.environ) -> int:
    """--seed flag beats sim.seed beats EVOFLOW_SEED; none set is an error."""
    if flag_seed is not None:
        return flag_seed
    if config_seed is not None:
        return config_seed
    raw = env.get(SEED_ENV_VAR)
    if raw is not None:
        try:
            return int(raw, 10)
        except ValueError as exc:
            raise ConfigError(f"{SEED_ENV_VAR}={raw!r} is not an integer") from exc
    raise ConfigError(
        f"no seed given: set sim.seed in the config, pass --seed, or export {SEED_ENV_VAR}"
    )


def build_sim(obj, flag_seed: int | None = None, env=os.environ) -> SimConfig:
    obj = _expect_object(obj, "sim")
    _check_keys(
        obj,
        ("n_paths", "dt", "seed", "backend", "record_sup", "sphere_policy"),
        ("n_paths", "dt"),
        "sim",
    )
    config_seed = None if "seed" not in obj else _integer(obj["seed"], "sim.seed")
    return SimConfig(
        n_paths=_integer(obj["n_paths"], "sim.n_paths"),
        dt=_number(obj["dt"], "sim.dt"),
        seed=resolve_seed(config_seed, flag_seed, env),
        backend=obj.get("backend", "radial_euler"),
        record_sup=_boolean(obj.get("record_sup", False), "sim.record_sup"),
        sphere_policy=obj.get("sphere_policy", "stop_at_cut"),
    )


_EXPERIMENT_KEYS = (
    "r0",
    "checkpoints",
    "moment_orders",
    "theta_values",
    "tail_radii",
    "exit_radii",
    "qv",
    "tightness",
    "sub_horizon",
)


def build_spec(config: dict, flag_seed: int | None = None, env=os.environ) -> ExperimentSpec:
    """Assemble the full ExperimentSpec from a validated config object."""
    model = build_model(config["model"])
    sim = build_sim(config["sim"], flag_seed, env)
    certificate = build_certificate(config.get("certificate"))
    exp = _expect_object(config.get("experiment", {}), "experiment")
    _check_keys(exp, _EXPERIMENT_KEYS, (), "experiment")
    sub_horizon = exp.get("sub_horizon")
    return ExperimentSpec(
        model=model,
        sim=sim,
        checkpoints=tuple(_number_list(exp.get("checkpoints", []), "experiment.checkpoints")),
        r0=_number(exp.get("r0", 0.0), "experiment.r0"),
        certificate=certificate,
        sub_horizon=None if sub_horizon is None else _number(sub_horizon, "experiment.sub_horizon"),
        moment_orders=tuple(_integer_list(exp.get("moment_orders", []), "experiment.moment_orders")),
        theta_values=tuple(_number_list(exp.get("theta_values", []), "experiment.theta_values")),
        tail_radii=tuple(_number_list(exp.get("tail_radii", []), "experiment.tail_radii")),
        exit_radii=tuple(_number_list(exp.get("exit_radii", []), "experiment.exit_radii")),
        qv=_boolean(exp.get("qv", False), "experiment.qv"),
        tightness=_boolean(exp.get("tightness", False), "experiment.tightness"),
    )


def resolved_config(spec: ExperimentSpec) -> dict:
    """The fully resolved config (seed pinned), as embedded in manifests."""
    payload = spec.to_config()
    return {
        "schema_version": CONFIG_SCHEMA_VERSION,
        "model": payload["model"],
        "certificate": payload["certificate"],
        "experiment": payload["experiment"],
        "sim": payload["sim"],
    }


__all__ = [
    "CONFIG_SCHEMA_VERSION",
    "SEED_ENV_VAR",
    "load_config",
    "build_model",
    "build_certificate",
    "build_sim",
    "build_spec",
    "resolve_seed",
    "resolved_config",
]
