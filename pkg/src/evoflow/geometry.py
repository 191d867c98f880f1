"""Evolving constant-curvature model spaces and their radial quantities.

A model is a constant-curvature space (dimension m >= 2, base sectional
curvature k0 at unit scale) whose metric is conformally rescaled by a
positive schedule c(t), optionally carrying a radial drift of magnitude
b(t). Distances from the pole scale as rho = c(t) * r_base, and the
generator identity Lap_{g(t)} = c(t)^{-2} Lap_base reduces everything
to base-space formulas:

    radial drift   (1/(2c)) Lap_base r |_{r = rho/c} + (c'/c) rho + b(t)
    base Laplacian of the distance:
        k0 > 0   (m-1) sqrt(k0) cot(sqrt(k0) r)
        k0 = 0   (m-1) / r
        k0 < 0   (m-1) sqrt(-k0) coth(sqrt(-k0) r)

The schedule kind "ricci_flow" is the exact self-similar solution
c(t)^2 = 1 - 2 (m-1) k0 t, collapsing in finite time for k0 > 0.

certify() produces growth certificates (nu, lam) dominating the
generator applied to rho^2. For the built-in schedules the pair comes
from an exact comparison chain; tabulated schedules fall back to grid
suprema. Either way the certificate is re-verified on a dense
(time x radius) grid before being returned.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import integrate, interpolate

from .bounds import Certificate
from .errors import DomainError, InternalCheckError

SCHEDULE_KINDS = ("constant", "ricci_flow", "tabulated")

# Grid used when a supremum over time or radius has no closed form.
_FALLBACK_GRID = 1024


@dataclass(frozen=True)
class ModelSpace:
    """Static constant-curvature space: dimension and unit-scale curvature."""

    dim: int
    base_curvature: float

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or isinstance(self.dim, bool) or self.dim < 2:
            raise DomainError(f"dimension must be an integer >= 2, got {self.dim!r}")
        if not math.isfinite(self.base_curvature):
            raise DomainError(f"curvature must be finite, got {self.base_curvature}")

    def radial_laplacian(self, r_base):
        """Lap_base applied to the distance from the pole, at base radius r_base."""
        m, k0 = self.dim, self.base_curvature
        r = np.asarray(r_base, dtype=float)
        if k0 > 0.0:
            s = math.sqrt(k0)
            out = (m - 1) * s * np.cos(s * r) / np.sin(s * r)
        elif k0 == 0.0:
            out = (m - 1) / r
        else:
            s = math.sqrt(-k0)
            out = (m - 1) * s / np.tanh(s * r)
        return out if out.ndim else float(out)


class ScaleSchedule:
    """Interface for the conformal factor c(t); see the concrete kinds below."""

    kind: str = ""

    @property
    def horizon(self) -> float:
        raise NotImplementedError

    def c(self, t: float) -> float:
        raise NotImplementedError

    def c_prime(self, t: float) -> float:
        raise NotImplementedError

    def time_change(self, t: float) -> float:
        """tau(t) = int_0^t c(s)^-2 ds, the clock of the equivalent static motion."""
        raise NotImplementedError

    def to_config(self) -> dict:
        raise NotImplementedError

    def _check_time(self, t: float) -> None:
        if not 0.0 <= t < self.horizon:
            raise DomainError(
                f"time {t} outside the schedule window [0, {self.horizon})"
            )


@dataclass(frozen=True)
class ConstantSchedule(ScaleSchedule):
    """Static metric, c(t) = c0."""

    c0: float = 1.0
    kind: str = field(default="constant", init=False)

    def __post_init__(self) -> None:
        if not self.c0 > 0.0:
            raise DomainError(f"scale must be positive, got {self.c0}")

    @property
    def horizon(self) -> float:
        return math.inf

    def c(self, t: float) -> float:
        self._check_time(t)
        return self.c0

    def c_prime(self, t: float) -> float:
        self._check_time(t)
        return 0.0

    def time_change(self, t: float) -> float:
        self._check_time(t)
        return t / (self.c0 * self.c0)

    def to_config(self) -> dict:
        return {"kind": "constant", "c0": self.c0}


@dataclass(frozen=True)
class RicciFlowSchedule(ScaleSchedule):
    """Self-similar Ricci flow scaling, c(t)^2 = 1 - rate * t.

    rate = 2 (m-1) k0 couples the schedule to the space it flows; use
    for_space() to build a matching instance. Positive rate (spherical
    case) collapses at t = 1/rate; nonpositive rate runs forever.
    """

    rate: float
    kind: str = field(default="ricci_flow", init=False)

    def __post_init__(self) -> None:
        if not math.isfinite(self.rate):
            raise DomainError(f"rate must be finite, got {self.rate}")

    @classmethod
    def for_space(cls, space: ModelSpace) -> "RicciFlowSchedule":
        return cls(rate=2.0 * (space.dim - 1) * space.base_curvature)

    @property
    def horizon(self) -> float:
        return 1.0 / self.rate if self.rate > 0.0 else math.inf

    def c(self, t: float) -> float:
        self._check_time(t)
        return math.sqrt(1.0 - self.rate * t)

    def c_prime(self, t: float) -> float:
        self._check_time(t)
        return -self.rate / (2.0 * math.sqrt(1.0 - self.rate * t))

    def time_change(self, t: float) -> float:
        self._check_time(t)
        if self.rate == 0.0:
            return t
        return -math.log1p(-self.rate * t) / self.rate

    def to_config(self) -> dict:
        return {"kind": "ricci_flow", "rate": self.rate}


class TabulatedSchedule(ScaleSchedule):
    """Scale factor given by samples, filled in by monotone cubic interpolation.

    The interpolant (PCHIP) never overshoots the data, so positive
    samples yield a positive c(t). The time change integral has no
    closed form here and is evaluated by adaptive quadrature to 1e-10
    relative accuracy.
    """

    kind = "tabulated"

    def __init__(self, times, values, horizon: float | None = None):
        times = np.asarray(times, dtype=float)
        values = np.asarray(values, dtype=float)
        if times.ndim != 1 or times.size < 2 or times.shape != values.shape:
            raise DomainError("tabulated schedule needs matching 1-d arrays, >= 2 points")
        if times[0] != 0.0:
            raise DomainError("tabulated schedule must start at t = 0")
        if not np.all(np.diff(times) > 0.0):
            raise DomainError("tabulated times must be strictly increasing")
        if not np.all(values > 0.0):
            raise DomainError("tabulated scale values must be positive")
        self._times = times
        self._values = values
        self._horizon = float(times[-1]) if horizon is None else float(horizon)
        if not 0.0 < self._horizon <= times[-1]:
            raise DomainError(
                f"horizon must lie in (0, {times[-1]}], got {self._horizon}"
            )
        self._interp = interpolate.PchipInterpolator(times, values)
        self._deriv = self._interp.derivative()

    @property
    def horizon(self) -> float:
        return self._horizon

    def c(self, t: float) -> float:
        self._check_time(t)
        return float(self._interp(t))

    def c_prime(self, t: float) -> float:
        self._check_time(t)
        return float(self._deriv(t))

    def time_change(self, t: float) -> float:
        self._check_time(t)
        if t == 0.0:
            return 0.0
        value, _ = integrate.quad(
            lambda s: float(self._interp(s)) ** -2, 0.0, t, epsabs=0.0, epsrel=1e-10,
            limit=200,
        )
        return value

    def to_config(self) -> dict:
        return {
            "kind": "tabulated",
            "times": [float(x) for x in self._times],
            "values": [float(x) for x in self._values],
            "horizon": self._horizon,
        }

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TabulatedSchedule)
            and np.array_equal(self._times, other._times)
            and np.array_equal(self._values, other._values)
            and self._horizon == other._horizon
        )


@dataclass(frozen=True)
class DriftSpec:
    """Radial drift magnitude b(t); constant by default, or a callable of time.

    Only constant drifts are expressible in config files; callables are
    for library use.
    """

    constant: float = 0.0
    fn: Callable[[float], float] | None = None

    def __post_init__(self) -> None:
        if self.fn is None and not math.isfinite(self.constant):
            raise DomainError(f"drift constant must be finite, got {self.constant}")

    def b(self, t: float) -> float:
        if self.fn is not None:
            return float(self.fn(t))
        return self.constant

    @property
    def is_zero(self) -> bool:
        return self.fn is None and self.constant == 0.0

    def max_positive(self, t_max: float, samples: int = _FALLBACK_GRID) -> float:
        """sup of max(b(t), 0) over [0, t_max]; exact for constant drift."""
        if self.fn is None:
            return max(self.constant, 0.0)
        grid = np.linspace(0.0, t_max, samples)
        return float(max(0.0, max(self.b(float(s)) for s in grid)))

    def to_config(self) -> dict:
        if self.fn is not None:
            # Descriptive only; the config parser refuses to build these.
            return {"callable": getattr(self.fn, "__name__", "anonymous")}
        return {"constant": self.constant}


@dataclass(frozen=True)
class EvolvingModel:
    """A model space with a scale schedule and an optional radial drift."""

    space: ModelSpace
    schedule: ScaleSchedule
    drift: DriftSpec = field(default_factory=DriftSpec)

    @property
    def horizon(self) -> float:
        return self.schedule.horizon

    @property
    def super_ricci_marker(self) -> bool | None:
        """Whether d/dt g <= Ric holds along the flow.

        Decidable for the closed-form schedule kinds, where it reduces
        to k0 >= 0; None for tabulated schedules.
        """
        if self.schedule.kind in ("constant", "ricci_flow"):
            return self.space.base_curvature >= 0.0
        return None

    def to_config(self) -> dict:
        return {
            "dim": self.space.dim,
            "k0": self.space.base_curvature,
            "schedule": self.schedule.to_config(),
            "drift": self.drift.to_config(),
        }

    def digest(self) -> str:
        payload = json.dumps(self.to_config(), sort_keys=True).encode()
        return hashlib.sha256(payload).hexdigest()[:16]


def euclidean_model(dim: int, drift: DriftSpec | None = None) -> EvolvingModel:
    """Static flat space of the given dimension."""
    return EvolvingModel(
        space=ModelSpace(dim, 0.0),
        schedule=ConstantSchedule(),
        drift=drift or DriftSpec(),
    )


def sphere_ricci_model(dim: int, k0: float) -> EvolvingModel:
    """Shrinking round sphere under its self-similar Ricci flow scaling."""
    if not k0 > 0.0:
        raise DomainError(f"sphere requires k0 > 0, got {k0}")
    space = ModelSpace(dim, k0)
    return EvolvingModel(space=space, schedule=RicciFlowSchedule.for_space(space))


def hyperbolic_ricci_model(dim: int, k0: float) -> EvolvingModel:
    """Expanding hyperbolic space under its self-similar Ricci flow scaling."""
    if not k0 < 0.0:
        raise DomainError(f"hyperbolic space requires k0 < 0, got {k0}")
    space = ModelSpace(dim, k0)
    return EvolvingModel(space=space, schedule=RicciFlowSchedule.for_space(space))


def cut_locus_radius(model: EvolvingModel, t: float) -> float:
    """Distance from the pole to its cut locus at time t; infinite for k0 <= 0."""
    k0 = model.space.base_curvature
    if k0 <= 0.0:
        model.schedule._check_time(t)
        return math.inf
    return math.pi * model.schedule.c(t) / math.sqrt(k0)


def _validate_radius(model: EvolvingModel, t: float, rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=float)
    if not np.all(rho > 0.0):
        raise DomainError("radius must be strictly positive")
    cut = cut_locus_radius(model, t)
    if math.isfinite(cut) and not np.all(rho < cut):
        raise DomainError(f"radius must stay below the cut locus radius {cut}")
    return rho


def radial_drift(model: EvolvingModel, t: float, rho):
    """Drift of the g(t)-radius of the diffusion, away from the cut locus.

    Accepts scalar or array rho (strictly between 0 and the cut radius).
    """
    rho_arr = _validate_radius(model, t, rho)
    c = model.schedule.c(t)
    cp = model.schedule.c_prime(t)
    lap = model.space.radial_laplacian(rho_arr / c)
    out = lap / (2.0 * c) + (cp / c) * rho_arr + model.drift.b(t)
    return out if np.ndim(rho) else float(out)


def lyapunov_lhs(model: EvolvingModel, t: float, rho):
    """Generator plus time derivative applied to rho^2: 2 rho drift + 1."""
    rho_arr = _validate_radius(model, t, rho)
    out = 2.0 * rho_arr * radial_drift(model, t, rho_arr) + 1.0
    return out if np.ndim(rho) else float(out)


def lyapunov_lhs_base(model: EvolvingModel, t: float, rho):
    """Same quantity assembled in base-space coordinates.

    Independent code path used to pin down the conformal distance law
    rho = c(t) r_base; must agree with lyapunov_lhs to rounding error.
    """
    rho_arr = _validate_radius(model, t, rho)
    c = model.schedule.c(t)
    cp = model.schedule.c_prime(t)
    r_base = rho_arr / c
    lap = model.space.radial_laplacian(r_base)
    out = (
        r_base * lap
        + 1.0
        + 2.0 * c * cp * r_base * r_base
        + 2.0 * c * model.drift.b(t) * r_base
    )
    return out if np.ndim(rho) else float(out)


def time_change(model: EvolvingModel, t: float) -> float:
    """Accumulated clock tau(t) = int_0^t c(s)^-2 ds of the static motion."""
    return model.schedule.time_change(t)


def _schedule_log_derivative_sup(model: EvolvingModel, sub_horizon: float) -> float:
    """sup over [0, sub_horizon] of (c^2)'/c^2 = 2 c'/c."""
    sched = model.schedule
    if sched.kind == "constant":
        return 0.0
    if sched.kind == "ricci_flow":
        # -rate/(1 - rate t) is monotone away from its value at t = 0.
        return -sched.rate
    grid = np.linspace(0.0, sub_horizon, _FALLBACK_GRID)
    vals = [2.0 * sched.c_prime(float(s)) / sched.c(float(s)) for s in grid]
    return max(vals) + 1e-9


def _inverse_scale_sup(model: EvolvingModel, sub_horizon: float) -> float:
    """sup over [0, sub_horizon] of 1/c(t)."""
    sched = model.schedule
    if sched.kind == "constant":
        return 1.0 / sched.c0
    if sched.kind == "ricci_flow":
        # c is monotone, so the sup sits at an endpoint.
        lo = 1.0 / sched.c(0.0)
        hi = 1.0 / sched.c(sub_horizon)
        return max(lo, hi)
    grid = np.linspace(0.0, sub_horizon, _FALLBACK_GRID)
    return max(1.0 / sched.c(float(s)) for s in grid) * (1.0 + 1e-12)


def certify(
    model: EvolvingModel,
    sub_horizon: float,
    grid: tuple[int, int] = (100, 1000),
) -> Certificate:
    """Growth certificate (nu, lam) with 2 rho drift + 1 <= nu + lam rho^2
    for all times in [0, sub_horizon] and radii inside the cut locus.

    The pair comes from the comparison chain
        x cot x <= 1            (spherical part)
        x coth x <= 1 + x       (hyperbolic part)
        2 rho <= 1 + rho^2
    applied to each term of the drift, with suprema of the schedule
    quantities over the window. A (time x radius) grid check must then
    hold and raises InternalCheckError if it does not.
    """
    if not 0.0 < sub_horizon < model.horizon:
        raise DomainError(
            f"sub_horizon must lie in (0, {model.horizon}), got {sub_horizon}"
        )
    nt, nr = grid
    if not (isinstance(nt, int) and isinstance(nr, int) and nt >= 2 and nr >= 2):
        raise DomainError(f"grid must be two integers >= 2, got {grid!r}")
    m = model.space.dim
    k0 = model.space.base_curvature
    b_plus = model.drift.max_positive(sub_horizon)
    lam = _schedule_log_derivative_sup(model, sub_horizon) + b_plus
    nu = float(m) + b_plus
    if k0 < 0.0:
        hyper = (m - 1) * math.sqrt(-k0) * _inverse_scale_sup(model, sub_horizon) / 2.0
        nu += hyper
        lam += hyper

    times = np.linspace(0.0, sub_horizon, nt)
    fractions = np.linspace(0.0, 1.0, nr + 2)[1:-1]
    for t in times:
        t = float(t)
        cut = cut_locus_radius(model, t)
        radii = fractions * (cut if math.isfinite(cut) else 100.0)
        lhs = lyapunov_lhs(model, t, radii)
        rhs = nu + lam * radii * radii
        slack = rhs - lhs
        tol = 1e-12 * np.maximum(1.0, np.abs(rhs))
        if not np.all(slack >= -tol):
            worst = float(np.min(slack))
            raise InternalCheckError(
                f"certificate ({nu}, {lam}) failed the grid check at t = {t} "
                f"(worst slack {worst})"
            )
    origin = "numeric_grid" if model.schedule.kind == "tabulated" else "analytic_model"
    return Certificate(nu=nu, lam=lam, horizon=sub_horizon, origin=origin)


__all__ = [
    "ModelSpace",
    "ScaleSchedule",
    "ConstantSchedule",
    "RicciFlowSchedule",
    "TabulatedSchedule",
    "DriftSpec",
    "EvolvingModel",
    "euclidean_model",
    "sphere_ricci_model",
    "hyperbolic_ricci_model",
    "SCHEDULE_KINDS",
    "cut_locus_radius",
    "radial_drift",
    "lyapunov_lhs",
    "lyapunov_lhs_base",
    "time_change",
    "certify",
]
