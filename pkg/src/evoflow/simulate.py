"""Monte Carlo backends for the radial process, and the estimators on top.

Two backends with no shared randomness or discretization:

* radial_euler: Euler-Maruyama on the radial equation
  d rho = drift(s, rho) ds + d beta. The (m-1)/(2 rho) part of the
  drift is singular at the origin, so it is not discretized as a
  displacement: near the pole (and at every radius when there is no
  cut locus) a step is taken as the radius of an m-dimensional flat
  move, which generates that term exactly, plus an Euler displacement
  for the regular remainder. On spheres away from the origin the plain
  signed one-dimensional move is used, with the drift never evaluated
  closer to the cut locus than a numerical floor. Supports drifted
  models, running suprema and realized quadratic variation.

* ambient_exact: the process is realized as static Brownian motion on
  the base space run at the changed time tau(t). Flat models get an
  exact terminal Gaussian draw; curved models use a projected-increment
  walk on the embedded sphere or hyperboloid. Drift-free models only.

Randomness is counter-based: path i of a run seeded with s consumes the
Philox stream keyed by (s << 64) | i, so results are a pure function of
(seed, path index) and never depend on chunking or worker count. The
scheme is recorded in the sample metadata under rng_algorithm.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from statistics import NormalDist

import numpy as np

from .bounds import Certificate
from .errors import ConfigError, DomainError, GuardRefusal
from .geometry import EvolvingModel, cut_locus_radius, radial_drift, time_change

BACKENDS = ("radial_euler", "ambient_exact")
SPHERE_POLICIES = ("stop_at_cut", "reflect_inward")

RNG_ALGORITHM = "philox4x64:key=(seed<<64)|path_index"

# Paths per worker task; sized so the per-chunk increment matrix stays
# in the tens of megabytes.
_CHUNK_TARGET_ELEMENTS = 4_000_000

_SEED_LIMIT = 2 ** 64


@dataclass(frozen=True)
class SimConfig:
    """Simulation parameters shared by both backends.

    dt is the Euler step for radial_euler and the changed-time step for
    the curved ambient walks. record_sup and sphere_policy only affect
    the Euler backend.
    """

    n_paths: int
    dt: float
    seed: int
    backend: str = "radial_euler"
    record_sup: bool = False
    sphere_policy: str = "stop_at_cut"

    def __post_init__(self) -> None:
        if not isinstance(self.n_paths, int) or self.n_paths < 1:
            raise ConfigError(f"n_paths must be a positive integer, got {self.n_paths!r}")
        if not self.dt > 0.0:
            raise ConfigError(f"dt must be positive, got {self.dt}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < _SEED_LIMIT:
            raise ConfigError(f"seed must be an integer in [0, 2^64), got {self.seed!r}")
        if self.backend not in BACKENDS:
            raise ConfigError(f"backend must be one of {BACKENDS}, got {self.backend!r}")
        if self.sphere_policy not in SPHERE_POLICIES:
            raise ConfigError(
                f"sphere_policy must be one of {SPHERE_POLICIES}, got {self.sphere_policy!r}"
            )

    def to_config(self) -> dict:
        return {
            "n_paths": self.n_paths,
            "dt": self.dt,
            "seed": self.seed,
            "backend": self.backend,
            "record_sup": self.record_sup,
            "sphere_policy": self.sphere_policy,
        }


@dataclass(frozen=True)
class SampleMeta:
    """Provenance of a sample set: model, start, time, config, RNG scheme."""

    model_digest: str
    model: dict
    r0: float
    t: float
    config: SimConfig
    rng_algorithm: str = RNG_ALGORITHM
    certificate: dict | None = None


@dataclass
class SampleSet:
    """Terminal radii (and optionally running suprema) of one simulation."""

    terminal_radii: np.ndarray
    stopped_flags: np.ndarray
    meta: SampleMeta
    sup_radii: np.ndarray | None = None

    @property
    def n(self) -> int:
        return int(self.terminal_radii.shape[0])


@dataclass(frozen=True)
class MCEstimate:
    """Sample mean with its standard error; interval is a score interval
    when the estimate is a frequency, otherwise None."""

    mean: float
    stderr: float
    n: int
    level: float = 0.95
    interval: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        if not 0.0 < self.level < 1.0:
            raise DomainError(f"level must lie in (0, 1), got {self.level}")

    def ci(self) -> tuple[float, float]:
        z = NormalDist().inv_cdf(0.5 + self.level / 2.0)
        return self.mean - z * self.stderr, self.mean + z * self.stderr


def _path_generator(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=(seed << 64) | index))


def _step_sizes(t: float, dt: float) -> np.ndarray:
    n_full = int(math.floor(t / dt + 1e-9))
    sizes = [dt] * n_full
    rem = t - n_full * dt
    if rem > 1e-9 * dt:
        sizes.append(rem)
    if not sizes:
        sizes = [t]
    return np.asarray(sizes, dtype=float)


def _run_chunks(total: int, chunk: int, workers: int, fn) -> None:
    spans = [(a, min(a + chunk, total)) for a in range(0, total, chunk)]
    if workers <= 1 or len(spans) == 1:
        for a, b in spans:
            fn(a, b)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for _ in pool.map(lambda span: fn(*span), spans):
            pass


def _validate_common(model: EvolvingModel, r0: float, t: float, config: SimConfig) -> None:
    if not r0 >= 0.0:
        raise DomainError(f"r0 must be nonnegative, got {r0}")
    k0 = model.space.base_curvature
    if k0 > 0.0 and not r0 < math.pi / math.sqrt(k0):
        raise DomainError(
            f"base radius {r0} is not inside the cut locus at {math.pi / math.sqrt(k0)}"
        )
    if not 0.0 < t < model.horizon:
        raise DomainError(f"t must lie in (0, {model.horizon}), got {t}")
    if math.isfinite(model.horizon) and config.dt > model.horizon / 100.0:
        raise ConfigError(
            f"dt = {config.dt} is too coarse: must not exceed horizon/100 = "
            f"{model.horizon / 100.0}"
        )


def _cot_defect(x: np.ndarray) -> np.ndarray:
    """cot(x) - 1/x, regular at the origin."""
    small = np.abs(x) < 1e-4
    safe = np.where(small, 1.0, x)
    main = np.cos(safe) / np.sin(safe) - 1.0 / safe
    return np.where(small, -x / 3.0 - x ** 3 / 45.0, main)


def _coth_defect(x: np.ndarray) -> np.ndarray:
    """coth(x) - 1/x, regular at the origin."""
    small = np.abs(x) < 1e-4
    safe = np.where(small, 1.0, x)
    main = 1.0 / np.tanh(safe) - 1.0 / safe
    return np.where(small, x / 3.0 - x ** 3 / 45.0, main)


def _regular_drift(model: EvolvingModel, s: float, rho: np.ndarray) -> np.ndarray:
    """radial_drift minus its (m-1)/(2 rho) singular part; finite at rho = 0."""
    m = model.space.dim
    k0 = model.space.base_curvature
    c = model.schedule.c(s)
    cp = model.schedule.c_prime(s)
    if k0 == 0.0:
        curv = 0.0
    elif k0 > 0.0:
        root = math.sqrt(k0)
        curv = (m - 1) * root / (2.0 * c) * _cot_defect(root * rho / c)
    else:
        root = math.sqrt(-k0)
        curv = (m - 1) * root / (2.0 * c) * _coth_defect(root * rho / c)
    return curv + (cp / c) * rho + model.drift.b(s)


def _euler_paths(
    model: EvolvingModel,
    r0: float,
    t: float,
    config: SimConfig,
    want_sup: bool,
    want_qv: bool,
    workers: int,
):
    dts = _step_sizes(t, config.dt)
    n_steps = len(dts)
    lefts = np.concatenate(([0.0], np.cumsum(dts)[:-1]))
    eps0 = 10.0 * math.sqrt(config.dt)
    m = model.space.dim
    k0 = model.space.base_curvature
    spherical = k0 > 0.0
    if spherical:
        # c is continuous on [0, t]; the coarse-dt guard below only needs
        # the smallest cut radius along the run.
        cut_min = min(
            cut_locus_radius(model, float(s)) for s in np.linspace(0.0, t, 64)
        )
        if eps0 >= 0.5 * cut_min:
            raise ConfigError(
                f"dt = {config.dt} is too coarse near the cut locus: the origin "
                f"floor {eps0:.4g} reaches half the cut radius {cut_min:.4g}"
            )

    n = config.n_paths
    terminal = np.empty(n)
    stopped = np.zeros(n, dtype=bool)
    sup = np.empty(n) if want_sup else None
    qv = np.empty(n) if want_qv else None
    start_rho = model.schedule.c(0.0) * r0
    stop_policy = config.sphere_policy == "stop_at_cut"

    def run_span(a: int, b: int) -> None:
        size = b - a
        draws = np.empty((size, n_steps * m))
        for i in range(size):
            draws[i] = _path_generator(config.seed, a + i).standard_normal(
                n_steps * m
            )
        draws = draws.reshape(size, n_steps, m)
        rho = np.full(size, start_rho)
        halt = np.zeros(size, dtype=bool)
        run_sup = rho.copy() if want_sup else None
        run_qv = np.zeros(size) if want_qv else None
        for k in range(n_steps):
            h = float(dts[k])
            root_h = math.sqrt(h)
            s = float(lefts[k])
            active = ~halt
            z = draws[:, k, :]
            # Displacements are capped at the floor scale so a
            # near-singular drift cannot fling a path across the domain.
            reg_disp = np.clip(_regular_drift(model, s, rho) * h, -eps0, eps0)
            first = rho + reg_disp + root_h * z[:, 0]
            perp = h * np.sum(z[:, 1:] ** 2, axis=1)
            norm_prop = np.sqrt(first * first + perp)
            if spherical:
                # The flat-move radius linearizes around the origin pole
                # and would fold the wrong way at the cut locus, so away
                # from the pole take the signed one-dimensional move.
                cut_s = cut_locus_radius(model, s)
                upper = cut_s - min(eps0, 1e-3 * cut_s)
                rho_eval = np.clip(rho, eps0, upper)
                full_disp = np.clip(
                    radial_drift(model, s, rho_eval) * h, -eps0, eps0
                )
                plain_prop = np.abs(rho + full_disp + root_h * z[:, 0])
                near_pole = rho < eps0
                prop = np.where(near_pole, norm_prop, plain_prop)
                applied = np.where(near_pole, reg_disp, full_disp)
                cut_next = cut_locus_radius(model, min(s + h, t))
                if stop_policy:
                    hit = active & (prop >= cut_next)
                    prop[hit] = cut_next
                else:
                    over = prop > cut_next
                    prop[over] = 2.0 * cut_next - prop[over]
                    np.abs(prop, out=prop)
            else:
                prop = norm_prop
                applied = reg_disp
            if want_qv:
                inc = prop - rho - applied
                run_qv[active] += inc[active] ** 2
            rho = np.where(active, prop, rho)
            if spherical and stop_policy:
                halt |= hit
            if want_sup:
                np.maximum(run_sup, rho, out=run_sup)
        terminal[a:b] = rho
        stopped[a:b] = halt
        if want_sup:
            sup[a:b] = run_sup
        if want_qv:
            qv[a:b] = run_qv

    chunk = max(1, min(8192, _CHUNK_TARGET_ELEMENTS // max(1, n_steps * m)))
    _run_chunks(n, chunk, workers, run_span)
    return terminal, stopped, sup, qv


def _ambient_flat(model, r0, t, config, workers):
    tau = time_change(model, t)
    c_t = model.schedule.c(t)
    m = model.space.dim
    n = config.n_paths
    terminal = np.empty(n)

    def run_span(a: int, b: int) -> None:
        size = b - a
        draws = np.empty((size, m))
        for i in range(size):
            draws[i] = _path_generator(config.seed, a + i).standard_normal(m)
        scaled = math.sqrt(tau) * draws
        scaled[:, 0] += r0
        terminal[a:b] = c_t * np.sqrt(np.sum(scaled * scaled, axis=1))

    _run_chunks(n, max(1, _CHUNK_TARGET_ELEMENTS // m), workers, run_span)
    return terminal


def _ambient_sphere(model, r0, t, config, workers):
    k0 = model.space.base_curvature
    radius = 1.0 / math.sqrt(k0)
    tau = time_change(model, t)
    c_t = model.schedule.c(t)
    m = model.space.dim
    dts = _step_sizes(tau, config.dt)
    n_steps = len(dts)
    roots = np.sqrt(dts)
    n = config.n_paths
    terminal = np.empty(n)
    phi0 = r0 / radius
    start = np.zeros(m + 1)
    start[0] = radius * math.cos(phi0)
    start[1] = radius * math.sin(phi0)

    def run_span(a: int, b: int) -> None:
        size = b - a
        draws = np.empty((size, n_steps * (m + 1)))
        for i in range(size):
            draws[i] = _path_generator(config.seed, a + i).standard_normal(
                n_steps * (m + 1)
            )
        draws = draws.reshape(size, n_steps, m + 1)
        x = np.tile(start, (size, 1))
        for k in range(n_steps):
            xi = roots[k] * draws[:, k, :]
            radial = np.sum(xi * x, axis=1) / (radius * radius)
            y = x + xi - radial[:, None] * x
            y_norm = np.sqrt(np.sum(y * y, axis=1))
            x = radius * y / y_norm[:, None]
        angle = np.arccos(np.clip(x[:, 0] / radius, -1.0, 1.0))
        terminal[a:b] = c_t * radius * angle

    chunk = max(1, _CHUNK_TARGET_ELEMENTS // max(1, n_steps * (m + 1)))
    _run_chunks(n, chunk, workers, run_span)
    return terminal


def _ambient_hyperboloid(model, r0, t, config, workers):
    k0 = model.space.base_curvature
    radius = 1.0 / math.sqrt(-k0)
    tau = time_change(model, t)
    c_t = model.schedule.c(t)
    m = model.space.dim
    dts = _step_sizes(tau, config.dt)
    n_steps = len(dts)
    roots = np.sqrt(dts)
    n = config.n_paths
    terminal = np.empty(n)
    start = np.zeros(m + 1)
    start[0] = radius * math.cosh(r0 / radius)
    start[1] = radius * math.sinh(r0 / radius)

    def run_span(a: int, b: int) -> None:
        size = b - a
        draws = np.empty((size, n_steps * m))
        for i in range(size):
            draws[i] = _path_generator(config.seed, a + i).standard_normal(n_steps * m)
        draws = draws.reshape(size, n_steps, m)
        x = np.tile(start, (size, 1))
        for k in range(n_steps):
            zeta = roots[k] * draws[:, k, :]
            xs = x[:, 1:]
            nrm = np.sqrt(np.sum(xs * xs, axis=1))
            # Orthonormal radial direction in the spatial slice; any
            # fixed unit vector serves at the pole itself.
            safe = nrm > 1e-300
            e = np.zeros_like(xs)
            e[:, 0] = 1.0
            e[safe] = xs[safe] / nrm[safe, None]
            zr = np.sum(zeta * e, axis=1)
            zperp = zeta - zr[:, None] * e
            # Transported pole frame: the radial tangent direction at x is
            # (|xs|/R, (x0/R) e); perpendicular directions stay spatial.
            y = x.copy()
            y[:, 0] += zr * nrm / radius
            y[:, 1:] += zr[:, None] * (x[:, 0:1] / radius) * e + zperp
            # Lorentz renormalization back onto the sheet.
            q = y[:, 0] ** 2 - np.sum(y[:, 1:] ** 2, axis=1)
            x = radius * y / np.sqrt(q)[:, None]
        ratio = np.maximum(x[:, 0] / radius, 1.0)
        terminal[a:b] = c_t * radius * np.arccosh(ratio)

    chunk = max(1, _CHUNK_TARGET_ELEMENTS // max(1, n_steps * m))
    _run_chunks(n, chunk, workers, run_span)
    return terminal


def simulate_radial(
    model: EvolvingModel,
    r0: float,
    t: float,
    config: SimConfig,
    workers: int = 1,
    certificate: Certificate | None = None,
) -> SampleSet:
    """Draw terminal g(t)-radii of n_paths independent paths.

    r0 is the base-space start radius; the path starts at g(0)-radius
    c(0) r0. With record_sup set (Euler backend only) the running
    maximum over grid times is attached to the result. Worker count
    never affects values, only scheduling.
    """
    _validate_common(model, r0, t, config)
    if config.backend == "ambient_exact":
        if not model.drift.is_zero:
            raise ConfigError(
                "ambient_exact has no exact law for drifted models; use radial_euler"
            )
        if config.record_sup:
            raise ConfigError("record_sup requires the radial_euler backend")
        k0 = model.space.base_curvature
        if k0 == 0.0:
            terminal = _ambient_flat(model, r0, t, config, workers)
        elif k0 > 0.0:
            terminal = _ambient_sphere(model, r0, t, config, workers)
        else:
            terminal = _ambient_hyperboloid(model, r0, t, config, workers)
        stopped = np.zeros(config.n_paths, dtype=bool)
        sup = None
    else:
        terminal, stopped, sup, _ = _euler_paths(
            model, r0, t, config, config.record_sup, False, workers
        )
    meta = SampleMeta(
        model_digest=model.digest(),
        model=model.to_config(),
        r0=r0,
        t=t,
        config=config,
        certificate=certificate.to_config() if certificate is not None else None,
    )
    return SampleSet(
        terminal_radii=terminal, stopped_flags=stopped, meta=meta, sup_radii=sup
    )


def simulate_sup_radial(
    model: EvolvingModel,
    r0: float,
    t: float,
    config: SimConfig,
    workers: int = 1,
    certificate: Certificate | None = None,
) -> SampleSet:
    """simulate_radial with the running supremum recorded (Euler backend).

    The grid supremum under-estimates the continuous one, which is the
    conservative direction when checking upper bounds on sup statistics.
    """
    if config.backend != "radial_euler":
        raise ConfigError("supremum recording requires the radial_euler backend")
    cfg = replace(config, record_sup=True)
    return simulate_radial(model, r0, t, cfg, workers=workers, certificate=certificate)


def realized_quadratic_variation(
    model: EvolvingModel,
    r0: float,
    t: float,
    config: SimConfig,
    workers: int = 1,
) -> MCEstimate:
    """Mean realized quadratic variation sum (d rho - drift dt)^2 over paths.

    For the exact process this is t; the Euler estimate carries an
    O(sqrt(dt)) discretization error on top of Monte Carlo noise.
    """
    if config.backend != "radial_euler":
        raise ConfigError("quadratic variation requires the radial_euler backend")
    _, _, _, qv = _euler_paths(model, r0, t, config, False, True, workers)
    return _estimate_from(qv)


def _estimate_from(values: np.ndarray, level: float = 0.95) -> MCEstimate:
    n = values.shape[0]
    if n < 2:
        raise DomainError(f"need at least 2 samples for a standard error, got {n}")
    mean = float(np.mean(values))
    stderr = float(np.std(values, ddof=1) / math.sqrt(n))
    return MCEstimate(mean=mean, stderr=stderr, n=n, level=level)


def estimate_moment(samples: SampleSet, p: int, level: float = 0.95) -> MCEstimate:
    """Mean and standard error of rho^(2p)."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 1:
        raise DomainError(f"p must be a positive integer, got {p!r}")
    return _estimate_from(samples.terminal_radii ** (2 * p), level)


def estimate_exp_moment(
    samples: SampleSet, theta: float, cert: Certificate, level: float = 0.95
) -> MCEstimate:
    """Mean and standard error of exp(theta rho^2 / 2).

    Refuses theta Lam(t) > 0.5: beyond that point the estimator's
    variance blows up long before its mean stops being finite, and a
    single run cannot be trusted.
    """
    if not theta >= 0.0:
        raise DomainError(f"theta must be nonnegative, got {theta}")
    x = theta * cert.spread(samples.meta.t)
    if x > 0.5:
        raise GuardRefusal(
            f"exp-moment estimate refused: theta*Lam(t) = {x:.6g} exceeds 0.5, "
            "the variance guard for a single Monte Carlo run"
        )
    vals = np.exp(theta * samples.terminal_radii ** 2 / 2.0)
    return _estimate_from(vals, level)


def wilson_interval(successes: int, n: int, level: float = 0.95) -> tuple[float, float]:
    """Binomial score (Wilson) interval for a frequency."""
    if n < 1 or not 0 <= successes <= n:
        raise DomainError(f"invalid counts: {successes}/{n}")
    z = NormalDist().inv_cdf(0.5 + level / 2.0)
    phat = successes / n
    denom = 1.0 + z * z / n
    center = (phat + z * z / (2 * n)) / denom
    half = z * math.sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def estimate_tail(samples: SampleSet, r: float, level: float = 0.95) -> MCEstimate:
    """Empirical frequency of rho >= r with a binomial score interval."""
    if not r >= 0.0:
        raise DomainError(f"r must be nonnegative, got {r}")
    flags = (samples.terminal_radii >= r).astype(float)
    est = _estimate_from(flags, level)
    interval = wilson_interval(int(flags.sum()), samples.n, level)
    return MCEstimate(
        mean=est.mean, stderr=est.stderr, n=est.n, level=level, interval=interval
    )


def _fmt(x: float) -> str:
    # shortest representation that parses back to the same float, so a
    # write/read cycle reproduces the sample set bit for bit
    return repr(x)


def write_samples(samples: SampleSet, base: str | Path) -> tuple[Path, Path]:
    """Write <base>.csv (one row per path) and <base>.meta.json."""
    base = Path(base)
    csv_path = base.with_suffix(".csv")
    meta_path = base.with_suffix(".meta.json")
    lines = ["path_index,terminal_radius,sup_radius,stopped_flag"]
    sup = samples.sup_radii
    for i in range(samples.n):
        sup_txt = _fmt(float(sup[i])) if sup is not None else ""
        lines.append(
            f"{i},{_fmt(float(samples.terminal_radii[i]))},{sup_txt},"
            f"{int(bool(samples.stopped_flags[i]))}"
        )
    csv_path.write_text("\n".join(lines) + "\n")
    meta = {
        "schema_version": 1,
        "model_digest": samples.meta.model_digest,
        "model": samples.meta.model,
        "r0": samples.meta.r0,
        "t": samples.meta.t,
        "sim": samples.meta.config.to_config(),
        "rng_algorithm": samples.meta.rng_algorithm,
        "certificate": samples.meta.certificate,
    }
    meta_path.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return csv_path, meta_path


def read_samples(base: str | Path) -> SampleSet:
    """Read back a sample set written by write_samples."""
    base = Path(base)
    meta_raw = json.loads(base.with_suffix(".meta.json").read_text())
    rows = base.with_suffix(".csv").read_text().strip().splitlines()
    header, rows = rows[0], rows[1:]
    if header != "path_index,terminal_radius,sup_radius,stopped_flag":
        raise ConfigError(f"unexpected sample CSV header: {header}")
    terminal = np.empty(len(rows))
    stopped = np.zeros(len(rows), dtype=bool)
    sup_vals: list[float] = []
    for i, row in enumerate(rows):
        idx, term, sup_txt, flag = row.split(",")
        if int(idx) != i:
            raise ConfigError(f"sample CSV rows out of order at {i}")
        terminal[i] = float(term)
        stopped[i] = flag == "1"
        if sup_txt:
            sup_vals.append(float(sup_txt))
    sup = np.asarray(sup_vals) if len(sup_vals) == len(rows) else None
    meta = SampleMeta(
        model_digest=meta_raw["model_digest"],
        model=meta_raw["model"],
        r0=meta_raw["r0"],
        t=meta_raw["t"],
        config=SimConfig(**meta_raw["sim"]),
        rng_algorithm=meta_raw["rng_algorithm"],
        certificate=meta_raw.get("certificate"),
    )
    return SampleSet(
        terminal_radii=terminal, stopped_flags=stopped, meta=meta, sup_radii=sup
    )


__all__ = [
    "BACKENDS",
    "SPHERE_POLICIES",
    "RNG_ALGORITHM",
    "SimConfig",
    "SampleMeta",
    "SampleSet",
    "MCEstimate",
    "simulate_radial",
    "simulate_sup_radial",
    "realized_quadratic_variation",
    "estimate_moment",
    "estimate_exp_moment",
    "estimate_tail",
    "wilson_interval",
    "write_samples",
    "read_samples",
]
