"""Closed-form moment, exponential and concentration bounds.

All bounds are driven by a growth certificate (nu, lam): a pair for
which the generator applied to the squared radius is dominated by
nu + lam * rho^2 up to the certificate horizon. Given such a pair the
radial process is stochastically dominated by a squared Bessel-type
process whose moments are explicit, and everything below is an exact
evaluation of that comparison law. The recurring quantities are

    growth   e^{lam t}
    spread   Lam(t) = (e^{lam t} - 1)/lam      (t at lam = 0)

so a query at time t is a pure function of (nu, lam, r0, t) and the
statistic parameters.

Probability-type bounds can exceed 1 for weak parameters; callers that
report them should clamp with clamp_probability and keep the raw value
alongside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InternalCheckError
from .special import lambda_integral, laguerre_value

CERTIFICATE_ORIGINS = (
    "user_supplied",
    "analytic_model",
    "curvature_bounds",
    "numeric_grid",
)

# delta grid resolution for the ternary search in the optimized
# concentration bound; the objective is convex in delta.
_OPT_TOL = 1e-10


@dataclass(frozen=True)
class Certificate:
    """Growth certificate (nu, lam) valid on [0, horizon).

    nu >= 1 always holds because the squared radius has unit quadratic
    variation; a smaller nu cannot dominate the generator at the origin.
    """

    nu: float
    lam: float
    horizon: float = math.inf
    origin: str = "user_supplied"

    def __post_init__(self) -> None:
        if not self.nu >= 1.0:
            raise DomainError(f"certificate requires nu >= 1, got {self.nu}")
        if not math.isfinite(self.lam):
            raise DomainError(f"lam must be finite, got {self.lam}")
        if not self.horizon > 0.0:
            raise DomainError(f"horizon must be positive, got {self.horizon}")
        if self.origin not in CERTIFICATE_ORIGINS:
            raise DomainError(
                f"unknown certificate origin {self.origin!r}; "
                f"expected one of {CERTIFICATE_ORIGINS}"
            )

    def spread(self, t: float) -> float:
        """Lam(t) for this certificate's growth rate."""
        return lambda_integral(self.lam, t)

    def to_config(self) -> dict:
        return {
            "nu": self.nu,
            "lambda": self.lam,
            "horizon": self.horizon,
            "origin": self.origin,
        }


@dataclass(frozen=True)
class BoundQuery:
    """A bound evaluation request: certificate, start radius, time, extras.

    r0 is the starting radius entering the comparison law. The time must
    lie strictly inside the certificate's validity window. Statistic
    parameters (p, theta, r, delta) are only consulted by the bounds
    that need them.
    """

    cert: Certificate
    t: float
    r0: float = 0.0
    p: int | None = None
    theta: float | None = None
    r: float | None = None
    delta: float | None = None

    def __post_init__(self) -> None:
        if not self.r0 >= 0.0:
            raise DomainError(f"r0 must be nonnegative, got {self.r0}")
        if not 0.0 < self.t < self.cert.horizon:
            raise DomainError(
                f"t must lie in (0, {self.cert.horizon}), got {self.t}"
            )

    def _growth_terms(self) -> tuple[float, float]:
        # (r0^2 e^{lam t}, Lam(t))
        return self.r0 ** 2 * math.exp(self.cert.lam * self.t), self.cert.spread(self.t)


def clamp_probability(x: float) -> float:
    """Clamp a raw probability bound into [0, 1]."""
    return min(max(x, 0.0), 1.0)


def second_moment_bound(q: BoundQuery) -> float:
    """Upper bound on E rho_t^2: r0^2 e^{lam t} + nu Lam(t)."""
    head, spread = q._growth_terms()
    return head + q.cert.nu * spread


def first_moment_bound(q: BoundQuery) -> float:
    """Upper bound on E rho_t, the square root of the second moment bound."""
    return math.sqrt(second_moment_bound(q))


def even_moment_bound(q: BoundQuery) -> float:
    """Upper bound on E rho_t^{2p}: (2 Lam)^p p! L_p^{nu/2-1}(-r0^2 e^{lam t}/(2 Lam))."""
    if q.p is None or not isinstance(q.p, int) or isinstance(q.p, bool) or q.p < 0:
        raise DomainError(f"even moment bound needs integer p >= 0, got {q.p!r}")
    if q.p == 0:
        return 1.0
    head, spread = q._growth_terms()
    arg = -head / (2.0 * spread)
    return (2.0 * spread) ** q.p * math.factorial(q.p) * laguerre_value(
        q.p, q.cert.nu / 2.0 - 1.0, arg
    )


def exp_moment_bound(q: BoundQuery) -> float:
    """Upper bound on E exp(theta rho_t^2 / 2), finite while theta Lam(t) < 1."""
    if q.theta is None or not q.theta >= 0.0:
        raise DomainError(f"exponential bound needs theta >= 0, got {q.theta!r}")
    head, spread = q._growth_terms()
    x = q.theta * spread
    if not x < 1.0:
        raise DomainError(f"exponential bound diverges: theta*Lam(t) = {x} is not < 1")
    return (1.0 - x) ** (-q.cert.nu / 2.0) * math.exp(
        q.theta * head / (2.0 * (1.0 - x))
    )


def _concentration_log(q: BoundQuery, delta: float) -> float:
    head, spread = q._growth_terms()
    r = q.r
    return (
        -(q.cert.nu / 2.0) * math.log1p(-delta)
        + head * delta / (2.0 * (1.0 - delta) * spread)
        - delta * r * r / (2.0 * spread)
    )


def concentration_bound(q: BoundQuery) -> float:
    """Raw tail bound on P(rho_t >= r) at a fixed Chernoff parameter delta.

    Equals (1-delta)^{-nu/2} exp(r0^2 delta e^{lam t} / (2 (1-delta) Lam)
    - delta r^2 / (2 Lam)) for delta in (0, 1). The value can exceed 1;
    reporting layers clamp it.
    """
    if q.r is None or not q.r > 0.0:
        raise DomainError(f"concentration bound needs r > 0, got {q.r!r}")
    if q.delta is None or not 0.0 < q.delta < 1.0:
        raise DomainError(f"concentration bound needs delta in (0, 1), got {q.delta!r}")
    return math.exp(_concentration_log(q, q.delta))


def concentration_bound_optimized(q: BoundQuery) -> tuple[float, float]:
    """Best Chernoff parameter and the clamped tail bound it attains.

    For r0 = 0 the optimum is closed form, delta* = 1 - nu Lam(t)/r^2,
    degenerating to the trivial bound 1 when r^2 <= nu Lam(t). For
    r0 > 0 the log-bound is convex in delta and a ternary search locates
    the optimum to 1e-10.
    """
    if q.r is None or not q.r > 0.0:
        raise DomainError(f"optimized bound needs r > 0, got {q.r!r}")
    head, spread = q._growth_terms()
    if q.r0 == 0.0:
        ratio = q.cert.nu * spread / (q.r * q.r)
        if ratio >= 1.0:
            return 0.0, 1.0
        delta = 1.0 - ratio
        return delta, clamp_probability(math.exp(_concentration_log(q, delta)))
    lo, hi = 1e-12, 1.0 - 1e-12
    while hi - lo > _OPT_TOL:
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if _concentration_log(q, m1) <= _concentration_log(q, m2):
            hi = m2
        else:
            lo = m1
    delta = 0.5 * (lo + hi)
    return delta, clamp_probability(math.exp(_concentration_log(q, delta)))


def concentration_rate(cert: Certificate, t: float) -> float:
    """Asymptotic Gaussian decay rate -1/(2 Lam(t)) of the tail bound in r^2."""
    if not 0.0 < t < cert.horizon:
        raise DomainError(f"t must lie in (0, {cert.horizon}), got {t}")
    return -1.0 / (2.0 * cert.spread(t))


def exit_time_bound(q: BoundQuery) -> float:
    """Raw bound on P(sup_{s <= t} rho_s >= r); requires lam >= 0.

    The running supremum shares the terminal tail bound only when the
    comparison process has nonnegative growth rate, so lam < 0 is a
    domain error rather than a silent extrapolation.
    """
    if q.cert.lam < 0.0:
        raise DomainError(
            f"exit time bound requires lam >= 0, got lam = {q.cert.lam}"
        )
    return concentration_bound(q)


def exit_time_bound_optimized(q: BoundQuery) -> tuple[float, float]:
    """Optimized-delta variant of exit_time_bound; requires lam >= 0."""
    if q.cert.lam < 0.0:
        raise DomainError(
            f"exit time bound requires lam >= 0, got lam = {q.cert.lam}"
        )
    return concentration_bound_optimized(q)


def _curvature_lhs(r: np.ndarray, m: int, c1: float, c2: float) -> np.ndarray:
    # 2 r s coth(s) + 2 c2 r (1 + r) + 2 with s = sqrt((m-1) c1 (1 + r^2));
    # the c1 = 0 limit of s coth(s) is 1.
    a = (m - 1) * c1
    if a == 0.0:
        radial = 2.0 * r
    else:
        s = np.sqrt(a * (1.0 + r * r))
        radial = 2.0 * r * s / np.tanh(s)
    return radial + 2.0 * c2 * r * (1.0 + r) + 2.0


def certificate_from_curvature(m: int, c1: float, c2: float) -> Certificate:
    """Certificate for a space with Ricci curvature >= -(m-1) c1 (1 + r^2)
    and time-derivative/drift term bounded by c2 (1 + r).

    The comparison chain uses coth(s) <= 1 + 1/s, sqrt(1 + r^2) <= 1 + r
    and 2r <= 1 + r^2, giving nu = 3 + sqrt((m-1) c1) + c2 and
    lam = 1 + 3 sqrt((m-1) c1) + 3 c2. The chain is re-verified on a
    dense radius grid before the certificate is returned.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise DomainError(f"dimension must be an integer >= 2, got {m!r}")
    if not c1 >= 0.0:
        raise DomainError(f"c1 must be nonnegative, got {c1}")
    if not c2 >= 0.0:
        raise DomainError(f"c2 must be nonnegative, got {c2}")
    root = math.sqrt((m - 1) * c1)
    nu = 3.0 + root + c2
    lam = 1.0 + 3.0 * root + 3.0 * c2
    grid = np.linspace(0.0, 100.0, 10_000)
    lhs = _curvature_lhs(grid, m, c1, c2)
    rhs = nu + lam * grid * grid
    slack = rhs - lhs
    tol = 1e-9 * np.maximum(1.0, np.abs(rhs))
    if not np.all(slack >= -tol):
        worst = float(np.min(slack))
        raise InternalCheckError(
            f"curvature certificate failed its grid check (worst slack {worst})"
        )
    if nu < 2.0:
        raise InternalCheckError(f"curvature certificate nu = {nu} fell below 2")
    return Certificate(nu=nu, lam=lam, horizon=math.inf, origin="curvature_bounds")


__all__ = [
    "Certificate",
    "BoundQuery",
    "CERTIFICATE_ORIGINS",
    "clamp_probability",
    "second_moment_bound",
    "first_moment_bound",
    "even_moment_bound",
    "exp_moment_bound",
    "concentration_bound",
    "concentration_bound_optimized",
    "concentration_rate",
    "exit_time_bound",
    "exit_time_bound_optimized",
    "certificate_from_curvature",
]
