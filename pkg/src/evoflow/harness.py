"""End-to-end verification: certificate, simulations, bounds, verdicts, report.

run_verification turns an ExperimentSpec into a Report: one simulation
per checkpoint (shared by every statistic evaluated there), one
upper-bound evaluation per requested statistic, and a one-sided z = 3
test per pair. The bounds are theorems, so a statistically significant
violation is treated as an implementation bug, not noise; guard refusals
and under-powered tail checks are recorded as skipped, never as failures.

Reports serialize to JSON and CSV with a fixed field order and decimal
floats at 12 significant digits, so byte-identical output is a hard
contract: rerunning with the same seed must reproduce the files exactly,
regardless of worker count. Wall-clock time is therefore recorded on the
Report object and in the run manifest, never inside the serialized
report body.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import math
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ._version import __version__
from .bounds import (
    BoundQuery,
    Certificate,
    concentration_bound,
    concentration_bound_optimized,
    even_moment_bound,
    exit_time_bound,
    exit_time_bound_optimized,
    exp_moment_bound,
)
from .errors import ConfigError, DomainError, GuardRefusal
from .geometry import EvolvingModel, certify
from .simulate import (
    MCEstimate,
    SimConfig,
    estimate_exp_moment,
    estimate_moment,
    estimate_tail,
    realized_quadratic_variation,
    simulate_radial,
    simulate_sup_radial,
)

CHECK_KINDS = ("moment", "exp_moment", "tail", "exit", "qv", "tightness")
VERDICTS = ("pass", "fail", "skipped")

# One-sided test threshold; per-check false-failure rate under a valid
# certificate is below Phi(-3) ~ 0.135%.
Z_ONE_SIDED = 3.0

# Probability checks need n * bound >= this many expected exceedances
# for the z test to carry any power; below it the row is skipped.
MIN_EXPECTED_COUNT = 20.0

# The realized-QV identity holds up to an O(sqrt(dt)) scheme error; the
# check allows this fraction of t on top of the identity value.
QV_RELATIVE_ALLOWANCE = 0.05

REPORT_SCHEMA_VERSION = 1

_CHECK_FIELDS = (
    "kind",
    "t",
    "params",
    "bound",
    "bound_raw",
    "estimate_mean",
    "estimate_stderr",
    "n",
    "verdict",
    "slack",
    "reason",
)


@dataclass(frozen=True)
class ExperimentSpec:
    """Everything run_verification needs: model, certificate, checks, sim.

    certificate is either a Certificate or the string "auto", which
    derives one with geometry.certify over a window covering every
    checkpoint (sub_horizon overrides the window's end). Statistic lists
    may be empty; an empty checkpoint list yields an empty, passing
    report.
    """

    model: EvolvingModel
    sim: SimConfig
    checkpoints: tuple[float, ...]
    r0: float = 0.0
    certificate: Certificate | str = "auto"
    sub_horizon: float | None = None
    moment_orders: tuple[int, ...] = ()
    theta_values: tuple[float, ...] = ()
    tail_radii: tuple[float, ...] = ()
    exit_radii: tuple[float, ...] = ()
    qv: bool = False
    tightness: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "checkpoints", tuple(float(t) for t in self.checkpoints))
        object.__setattr__(self, "moment_orders", tuple(self.moment_orders))
        object.__setattr__(self, "theta_values", tuple(float(x) for x in self.theta_values))
        object.__setattr__(self, "tail_radii", tuple(float(x) for x in self.tail_radii))
        object.__setattr__(self, "exit_radii", tuple(float(x) for x in self.exit_radii))
        if not self.r0 >= 0.0:
            raise ConfigError(f"r0 must be nonnegative, got {self.r0}")
        for t in self.checkpoints:
            if not (math.isfinite(t) and t > 0.0):
                raise ConfigError(f"checkpoints must be finite and positive, got {t}")
        for p in self.moment_orders:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ConfigError(f"moment orders must be positive integers, got {p!r}")
        for x in self.theta_values:
            if not (math.isfinite(x) and x >= 0.0):
                raise ConfigError(f"theta values must be finite and >= 0, got {x}")
        for name, radii in (("tail", self.tail_radii), ("exit", self.exit_radii)):
            for r in radii:
                if not (math.isfinite(r) and r > 0.0):
                    raise ConfigError(f"{name} radii must be finite and positive, got {r}")
        if not isinstance(self.certificate, Certificate) and self.certificate != "auto":
            raise ConfigError(
                f'certificate must be a Certificate or "auto", got {self.certificate!r}'
            )
        if self.sub_horizon is not None and not self.sub_horizon > 0.0:
            raise ConfigError(f"sub_horizon must be positive, got {self.sub_horizon}")

    def to_config(self) -> dict:
        cert = self.certificate
        return {
            "model": self.model.to_config(),
            "certificate": cert if cert == "auto" else cert.to_config(),
            "experiment": {
                "r0": self.r0,
                "checkpoints": list(self.checkpoints),
                "moment_orders": list(self.moment_orders),
                "theta_values": list(self.theta_values),
                "tail_radii": list(self.tail_radii),
                "exit_radii": list(self.exit_radii),
                "qv": self.qv,
                "tightness": self.tightness,
                "sub_horizon": self.sub_horizon,
            },
            "sim": self.sim.to_config(),
        }

    def digest(self) -> str:
        payload = json.dumps(self.to_config(), sort_keys=True).encode()
        return hashlib.sha256(payload).hexdigest()[:16]


@dataclass(frozen=True)
class BoundCheck:
    """One statistic vs one proven bound at one checkpoint."""

    kind: str
    t: float
    params: dict
    bound: float | None
    bound_raw: float | None
    estimate: MCEstimate | None
    verdict: str
    slack: float | None
    reason: str = ""


@dataclass
class Report:
    """Outcome of a verification run.

    wall_clock_seconds is bookkeeping for the manifest; the serialized
    report omits it so reruns stay byte-identical.
    """

    spec_digest: str
    certificate: Certificate
    checks: list[BoundCheck]
    seed: int
    version: str = __version__
    status: str = "pass"
    wall_clock_seconds: float | None = None


def _verdict(estimate: MCEstimate, bound: float) -> str:
    if estimate.mean - Z_ONE_SIDED * estimate.stderr > bound:
        return "fail"
    return "pass"


def _slack(estimate: MCEstimate | None, bound: float | None) -> float | None:
    if estimate is None or bound is None or not bound > 0.0:
        return None
    return (bound - estimate.mean) / bound


def _check(
    kind: str,
    t: float,
    params: dict,
    bound: float,
    bound_raw: float,
    estimate: MCEstimate,
) -> BoundCheck:
    return BoundCheck(
        kind=kind,
        t=t,
        params=params,
        bound=bound,
        bound_raw=bound_raw,
        estimate=estimate,
        verdict=_verdict(estimate, bound),
        slack=_slack(estimate, bound),
    )


def _skipped(
    kind: str,
    t: float,
    params: dict,
    reason: str,
    bound: float | None = None,
    bound_raw: float | None = None,
    estimate: MCEstimate | None = None,
) -> BoundCheck:
    return BoundCheck(
        kind=kind,
        t=t,
        params=params,
        bound=bound,
        bound_raw=bound_raw,
        estimate=estimate,
        verdict="skipped",
        slack=_slack(estimate, bound),
        reason=reason,
    )


def _stream_seed(seed: int, checkpoint_index: int, purpose: int) -> int:
    """Derived 64-bit seed for one (checkpoint, purpose) simulation.

    Purposes: 0 terminal run, 1 supremum run, 2 quadratic variation.
    Deterministic and platform-independent via SeedSequence hashing.
    """
    ss = np.random.SeedSequence([seed, checkpoint_index, purpose])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def resolve_certificate(spec: ExperimentSpec) -> Certificate:
    """The spec's certificate, deriving one via certify for "auto".

    The auto window ends at sub_horizon when given, otherwise slightly
    past the last checkpoint (10%, capped midway to a finite model
    horizon) so every checkpoint sits strictly inside it.
    """
    model = spec.model
    past_model = [t for t in spec.checkpoints if not t < model.horizon]
    if past_model:
        raise ConfigError(
            f"checkpoints {past_model} do not lie strictly below the model "
            f"horizon {model.horizon}"
        )
    if isinstance(spec.certificate, Certificate):
        cert = spec.certificate
    else:
        sub = spec.sub_horizon
        if sub is None:
            t_max = max(spec.checkpoints) if spec.checkpoints else None
            if t_max is None:
                sub = model.horizon / 2.0 if math.isfinite(model.horizon) else 1.0
            elif math.isfinite(model.horizon):
                sub = min(1.1 * t_max, (t_max + model.horizon) / 2.0)
            else:
                sub = 1.1 * t_max
        cert = certify(model, sub)
    limit = min(model.horizon, cert.horizon)
    bad = [t for t in spec.checkpoints if not t < limit]
    if bad:
        raise ConfigError(
            f"checkpoints {bad} do not lie strictly below the model/certificate "
            f"horizon {limit}"
        )
    if spec.exit_radii and cert.lam < 0.0:
        raise ConfigError(
            "exit-time checks require a certificate with lam >= 0; "
            f"got lam = {cert.lam}"
        )
    return cert


def run_verification(spec: ExperimentSpec, workers: int = 1) -> Report:
    """Execute every requested check and assemble the report.

    One terminal-radius simulation per checkpoint feeds the moment,
    exponential and tail checks there; exit checks draw a separate
    supremum run and the QV identity a separate plain run, each on its
    own derived seed. Output is a pure function of (spec, seed).
    """
    started = time.perf_counter()
    cert = resolve_certificate(spec)
    model, r0 = spec.model, spec.r0
    checks: list[BoundCheck] = []

    for idx, t in enumerate(spec.checkpoints):
        need_terminal = bool(spec.moment_orders or spec.theta_values or spec.tail_radii)
        samples = None
        if need_terminal:
            cfg = dataclasses.replace(spec.sim, seed=_stream_seed(spec.sim.seed, idx, 0))
            samples = simulate_radial(model, r0, t, cfg, workers=workers, certificate=cert)

        for p in spec.moment_orders:
            bound = even_moment_bound(BoundQuery(cert=cert, t=t, r0=r0, p=p))
            checks.append(_check("moment", t, {"p": p}, bound, bound, estimate_moment(samples, p)))

        for theta in spec.theta_values:
            params = {"theta": theta}
            try:
                bound = exp_moment_bound(BoundQuery(cert=cert, t=t, r0=r0, theta=theta))
            except DomainError as exc:
                checks.append(_skipped("exp_moment", t, params, str(exc)))
                continue
            try:
                est = estimate_exp_moment(samples, theta, cert)
            except GuardRefusal as exc:
                checks.append(_skipped("exp_moment", t, params, str(exc), bound, bound))
                continue
            checks.append(_check("exp_moment", t, params, bound, bound, est))

        for r in spec.tail_radii:
            q = BoundQuery(cert=cert, t=t, r0=r0, r=r)
            delta_star, bound = concentration_bound_optimized(q)
            # degenerate optimum delta = 0 means the raw bound is exactly 1
            raw = 1.0 if delta_star == 0.0 else concentration_bound(
                dataclasses.replace(q, delta=delta_star)
            )
            params = {"r": r, "delta": delta_star}
            if cert.lam < 0.0:
                # Flagged: the Chernoff expression is evaluated as proved
                # even though lam < 0 makes it conservative.
                params["lambda_negative"] = 1
            est = estimate_tail(samples, r)
            if spec.sim.n_paths * bound < MIN_EXPECTED_COUNT:
                checks.append(
                    _skipped(
                        "tail", t, params,
                        f"under-powered: n*bound = {spec.sim.n_paths * bound:.3g} "
                        f"is below {MIN_EXPECTED_COUNT:g} expected exceedances",
                        bound, raw, est,
                    )
                )
            else:
                checks.append(_check("tail", t, params, bound, raw, est))

        if spec.exit_radii:
            if spec.sim.backend != "radial_euler":
                for r in spec.exit_radii:
                    checks.append(
                        _skipped(
                            "exit", t, {"r": r},
                            "supremum statistics require the radial_euler backend",
                        )
                    )
            else:
                cfg = dataclasses.replace(spec.sim, seed=_stream_seed(spec.sim.seed, idx, 1))
                sup_samples = simulate_sup_radial(
                    model, r0, t, cfg, workers=workers, certificate=cert
                )
                sup_view = dataclasses.replace(
                    sup_samples, terminal_radii=sup_samples.sup_radii
                )
                for r in spec.exit_radii:
                    q = BoundQuery(cert=cert, t=t, r0=r0, r=r)
                    delta_star, bound = exit_time_bound_optimized(q)
                    raw = 1.0 if delta_star == 0.0 else exit_time_bound(
                        dataclasses.replace(q, delta=delta_star)
                    )
                    params = {"r": r, "delta": delta_star}
                    est = estimate_tail(sup_view, r)
                    if spec.sim.n_paths * bound < MIN_EXPECTED_COUNT:
                        checks.append(
                            _skipped(
                                "exit", t, params,
                                f"under-powered: n*bound = "
                                f"{spec.sim.n_paths * bound:.3g} is below "
                                f"{MIN_EXPECTED_COUNT:g} expected exceedances",
                                bound, raw, est,
                            )
                        )
                    else:
                        checks.append(_check("exit", t, params, bound, raw, est))

        if spec.qv:
            if spec.sim.backend != "radial_euler":
                checks.append(
                    _skipped(
                        "qv", t, {"dt": spec.sim.dt},
                        "quadratic variation requires the radial_euler backend",
                    )
                )
            else:
                cfg = dataclasses.replace(spec.sim, seed=_stream_seed(spec.sim.seed, idx, 2))
                est = realized_quadratic_variation(model, r0, t, cfg, workers=workers)
                bound = (1.0 + QV_RELATIVE_ALLOWANCE) * t
                checks.append(_check("qv", t, {"dt": spec.sim.dt}, bound, bound, est))

    if spec.tightness:
        parents = [
            c for c in checks
            if c.kind in ("moment", "exp_moment") and c.estimate is not None
            and c.bound is not None and c.bound > 0.0
        ]
        for parent in parents:
            est = MCEstimate(
                mean=parent.estimate.mean / parent.bound,
                stderr=parent.estimate.stderr / parent.bound,
                n=parent.estimate.n,
                level=parent.estimate.level,
            )
            params = {"of": parent.kind, **parent.params}
            checks.append(_check("tightness", parent.t, params, 1.0, 1.0, est))

    status = "violation" if any(c.verdict == "fail" for c in checks) else "pass"
    return Report(
        spec_digest=spec.digest(),
        certificate=cert,
        checks=checks,
        seed=spec.sim.seed,
        version=__version__,
        status=status,
        wall_clock_seconds=time.perf_counter() - started,
    )


def tightness_ratio(check: BoundCheck) -> float:
    """estimate.mean / bound: how much of the bound the estimate uses."""
    if check.estimate is None:
        raise DomainError("check carries no estimate (skipped before estimation)")
    if check.bound is None or not check.bound > 0.0:
        raise DomainError(f"tightness ratio needs a positive bound, got {check.bound}")
    return check.estimate.mean / check.bound


def format_number(x: float) -> str:
    """Decimal at 12 significant digits, the fixed numeric output format."""
    return format(float(x), ".12g")


def _json_atom(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            raise DomainError("NaN is not representable in a report")
        if math.isinf(value):
            return '"inf"' if value > 0 else '"-inf"'
        return format_number(value)
    if isinstance(value, str):
        return json.dumps(value)
    raise DomainError(f"unsupported report value {value!r}")


def canonical_json(value, indent: int = 0) -> str:
    """Deterministic JSON: insertion order, 12-digit floats, 2-space indent.

    The stdlib serializer cannot format floats to a fixed significant-
    digit budget, which the byte-identity contract needs; parsing this
    output with json.loads and re-emitting it is byte-stable.
    """
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        rows = [
            f"{inner}{json.dumps(str(k))}: {canonical_json(v, indent + 1)}"
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(rows) + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        rows = [f"{inner}{canonical_json(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(rows) + "\n" + pad + "]"
    return _json_atom(value)


def check_to_dict(check: BoundCheck) -> dict:
    est = check.estimate
    return {
        "kind": check.kind,
        "t": check.t,
        "params": dict(check.params),
        "bound": check.bound,
        "bound_raw": check.bound_raw,
        "estimate_mean": None if est is None else est.mean,
        "estimate_stderr": None if est is None else est.stderr,
        "n": None if est is None else est.n,
        "verdict": check.verdict,
        "slack": check.slack,
        "reason": check.reason,
    }


def report_to_dict(report: Report) -> dict:
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "spec_digest": report.spec_digest,
        "seed": report.seed,
        "version": report.version,
        "status": report.status,
        "certificate": report.certificate.to_config(),
        "checks": [check_to_dict(c) for c in report.checks],
    }


def render_report_json(report: Report | dict) -> str:
    payload = report if isinstance(report, dict) else report_to_dict(report)
    return canonical_json(payload) + "\n"


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_number(value)
    return str(value)


def _params_cell(params: dict) -> str:
    return ";".join(f"{k}={_csv_cell(v)}" for k, v in params.items())


def render_report_csv(report: Report) -> str:
    """Flat CSV twin of the JSON report, one row per check, fixed columns."""
    lines = [",".join(_CHECK_FIELDS)]
    for check in report.checks:
        row = check_to_dict(check)
        row["params"] = _params_cell(row["params"])
        lines.append(",".join(_csv_cell(row[name]) for name in _CHECK_FIELDS))
    return "\n".join(lines) + "\n"


def write_report(report: Report, out_dir: str | Path) -> tuple[Path, Path]:
    """Write report.json and report.csv under out_dir; returns the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    json_path = out / "report.json"
    csv_path = out / "report.csv"
    json_path.write_text(render_report_json(report))
    csv_path.write_text(render_report_csv(report))
    return json_path, csv_path


__all__ = [
    "CHECK_KINDS",
    "VERDICTS",
    "Z_ONE_SIDED",
    "MIN_EXPECTED_COUNT",
    "QV_RELATIVE_ALLOWANCE",
    "REPORT_SCHEMA_VERSION",
    "ExperimentSpec",
    "BoundCheck",
    "Report",
    "resolve_certificate",
    "run_verification",
    "tightness_ratio",
    "format_number",
    "canonical_json",
    "check_to_dict",
    "report_to_dict",
    "render_report_json",
    "render_report_csv",
    "write_report",
]
