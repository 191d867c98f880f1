"""Moment and concentration bounds for radial diffusions on evolving
constant-curvature spaces, with Monte Carlo verification.

The library is organized as a pipeline: geometry describes the evolving
model space and derives (nu, lambda) drift certificates; bounds turns a
certificate into moment, exponential-moment, concentration and exit-time
bounds; simulate draws radial paths with reproducible counter-based
randomness; harness compares the two sides and renders reports; special
holds the closed-form functions everything else leans on.
"""

from ._version import __version__
from .bounds import (
    BoundQuery,
    Certificate,
    certificate_from_curvature,
    clamp_probability,
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
from .errors import ConfigError, DomainError, GuardRefusal, InternalCheckError
from .geometry import (
    ConstantSchedule,
    DriftSpec,
    EvolvingModel,
    ModelSpace,
    RicciFlowSchedule,
    TabulatedSchedule,
    certify,
    cut_locus_radius,
    euclidean_model,
    hyperbolic_ricci_model,
    lyapunov_lhs,
    radial_drift,
    sphere_ricci_model,
    time_change,
)
from .harness import (
    BoundCheck,
    ExperimentSpec,
    Report,
    render_report_csv,
    render_report_json,
    resolve_certificate,
    run_verification,
    tightness_ratio,
    write_report,
)
from .simulate import (
    MCEstimate,
    SampleSet,
    SimConfig,
    estimate_exp_moment,
    estimate_moment,
    estimate_tail,
    read_samples,
    realized_quadratic_variation,
    simulate_radial,
    simulate_sup_radial,
    wilson_interval,
    write_samples,
)
from .special import (
    gaussian_even_moment,
    gaussian_exp_moment,
    laguerre_generating_closed,
    laguerre_generating_sum,
    laguerre_value,
    lambda_integral,
)

__all__ = [
    "__version__",
    "BoundQuery",
    "Certificate",
    "certificate_from_curvature",
    "clamp_probability",
    "concentration_bound",
    "concentration_bound_optimized",
    "concentration_rate",
    "even_moment_bound",
    "exit_time_bound",
    "exit_time_bound_optimized",
    "exp_moment_bound",
    "first_moment_bound",
    "second_moment_bound",
    "ConfigError",
    "DomainError",
    "GuardRefusal",
    "InternalCheckError",
    "ConstantSchedule",
    "DriftSpec",
    "EvolvingModel",
    "ModelSpace",
    "RicciFlowSchedule",
    "TabulatedSchedule",
    "certify",
    "cut_locus_radius",
    "euclidean_model",
    "hyperbolic_ricci_model",
    "lyapunov_lhs",
    "radial_drift",
    "sphere_ricci_model",
    "time_change",
    "BoundCheck",
    "ExperimentSpec",
    "Report",
    "render_report_csv",
    "render_report_json",
    "resolve_certificate",
    "run_verification",
    "tightness_ratio",
    "write_report",
    "MCEstimate",
    "SampleSet",
    "SimConfig",
    "estimate_exp_moment",
    "estimate_moment",
    "estimate_tail",
    "read_samples",
    "realized_quadratic_variation",
    "simulate_radial",
    "simulate_sup_radial",
    "wilson_interval",
    "write_samples",
    "gaussian_even_moment",
    "gaussian_exp_moment",
    "laguerre_generating_closed",
    "laguerre_generating_sum",
    "laguerre_value",
    "lambda_integral",
]
