"""Hurwitz zeta, generalized polylogarithm, and confluent hypergeometric
functions, with a verification engine that numerically certifies the
identities tying them together."""

from .bernoulli import (
    BernoulliTable,
    bernoulli_numbers,
    bernoulli_poly,
    bernoulli_table,
    fourier_b2_partial,
    periodic_bernoulli,
    sawtooth_sum,
)
from .confluent import (
    ConfluentParams,
    asymptotic_ratio,
    connection_residual,
    connection_rhs,
    kummer_m,
    ode_residual,
    tricomi_u,
    tricomi_u_gamma,
    tricomi_u_integral,
)
from .errors import (
    CapExceeded,
    ConvergenceError,
    DivergenceSuspected,
    DomainError,
    HurwitzLabError,
    NoConvergence,
    PoleError,
    StripError,
    ToleranceNotMet,
    UnknownCheckId,
)
from .numerics import (
    QuadratureSpec,
    QuadResult,
    complex_pow,
    gamma,
    integrate_semi_infinite,
    integrate_unit_interval,
    log_gamma,
    upper_incomplete_gamma,
)
from .verify import (
    GridSpec,
    PointResult,
    ResidualReport,
    check_asymptotics,
    check_connection,
    check_fourier,
    check_hurwitz_relation,
    check_riemann_fe,
    check_vanishing_identity,
    check_via_u_agreement,
    run_suite,
)
from .zeta import (
    EvalParams,
    ZetaResult,
    hurwitz_direct,
    hurwitz_em,
    hurwitz_rhs,
    hurwitz_via_u,
    polylog_l,
    riemann_zeta,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "HurwitzLabError", "DomainError", "PoleError", "StripError", "CapExceeded",
    "ConvergenceError", "NoConvergence", "ToleranceNotMet",
    "DivergenceSuspected", "UnknownCheckId",
    # numerics
    "QuadratureSpec", "QuadResult", "log_gamma", "gamma", "complex_pow",
    "upper_incomplete_gamma", "integrate_unit_interval", "integrate_semi_infinite",
    # bernoulli
    "BernoulliTable", "bernoulli_numbers", "bernoulli_table", "bernoulli_poly",
    "periodic_bernoulli", "sawtooth_sum", "fourier_b2_partial",
    # confluent
    "ConfluentParams", "kummer_m", "tricomi_u_integral", "tricomi_u_gamma",
    "tricomi_u", "connection_rhs", "connection_residual", "ode_residual",
    "asymptotic_ratio",
    # zeta
    "EvalParams", "ZetaResult", "hurwitz_direct", "hurwitz_em", "hurwitz_via_u",
    "polylog_l", "riemann_zeta", "hurwitz_rhs",
    # verify
    "GridSpec", "PointResult", "ResidualReport", "check_hurwitz_relation",
    "check_riemann_fe", "check_via_u_agreement", "check_connection",
    "check_vanishing_identity", "check_asymptotics", "check_fourier",
    "run_suite",
]
