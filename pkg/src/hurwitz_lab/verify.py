"""Residual checks for every identity the library implements, plus the
grid sweep machinery that turns them into structured reports.

Each check evaluates its two sides by independent routes, records
per-point residuals, and gates on the maximum relative residual.  A
point that raises is recorded as a failed point (with the error message)
and fails the report without aborting the sweep.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Sequence

from .bernoulli import fourier_b2_partial, periodic_bernoulli, sawtooth_sum
from .confluent import asymptotic_ratio, connection_rhs, tricomi_u
from .errors import DomainError, HurwitzLabError, UnknownCheckId
from .numerics import complex_pow, gamma, integrate_unit_interval
from .zeta import (
    DEFAULT_PARAMS,
    EvalParams,
    hurwitz_em,
    hurwitz_rhs,
    hurwitz_via_u,
    polylog_l,
)

__all__ = [
    "GridSpec",
    "PointResult",
    "ResidualReport",
    "check_hurwitz_relation",
    "check_riemann_fe",
    "check_via_u_agreement",
    "check_connection",
    "check_vanishing_identity",
    "check_asymptotics",
    "check_fourier",
    "run_suite",
    "CHECK_IDS",
    "DEFAULT_TOLERANCES",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class GridSpec:
    """The (s, z) points a verification sweep covers."""

    s_points: tuple
    z_points: tuple
    params: EvalParams = DEFAULT_PARAMS

    def __post_init__(self):
        if not self.s_points or not self.z_points:
            raise DomainError("grid must contain at least one s and one z point")
        for s in self.s_points:
            if abs(complex(s) - 1.0) <= 1e-12:
                raise DomainError("grid s values must exclude the pole s = 1")
        for z in self.z_points:
            if not (0.0 < float(z) <= 1.0):
                raise DomainError("grid z values must lie in (0, 1]")


@dataclass
class PointResult:
    """One evaluated grid point.  s/z are None where a check's sample
    space is not an (s, z) pair; extra carries check-specific payload."""

    s: complex | None
    z: float | None
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    error_bound: float
    extra: dict = field(default_factory=dict)
    error: str | None = None


@dataclass
class ResidualReport:
    """Aggregated evidence for one check.

    passed requires every point to have evaluated cleanly, the maximum
    relative residual to sit below tolerance, and any check-specific
    gate (monotone ladder, strict decrease) to hold.
    """

    check_id: str
    tolerance: float
    points: list
    max_abs: float
    max_rel: float
    passed: bool
    params_echo: EvalParams
    timestamp: str
    details: dict = field(default_factory=dict)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _finish(check_id, tolerance, points, params, extra_gate=True, details=None):
    clean = [p for p in points if p.error is None]
    max_abs = max((p.abs_residual for p in clean), default=0.0)
    max_rel = max((p.rel_residual for p in clean), default=0.0)
    no_errors = len(clean) == len(points) and points
    passed = bool(no_errors and max_rel <= tolerance and extra_gate)
    return ResidualReport(
        check_id=check_id,
        tolerance=tolerance,
        points=points,
        max_abs=max_abs,
        max_rel=max_rel,
        passed=passed,
        params_echo=params,
        timestamp=_now(),
        details=details or {},
    )


def _residual_point(s, z, lhs, rhs, bound, extra=None) -> PointResult:
    abs_res = abs(lhs - rhs)
    rel_res = abs_res / max(1.0, abs(lhs))
    return PointResult(
        s=s,
        z=z,
        lhs=lhs,
        rhs=rhs,
        abs_residual=abs_res,
        rel_residual=rel_res,
        error_bound=bound,
        extra=extra or {},
    )


def _failed_point(s, z, exc) -> PointResult:
    return PointResult(
        s=s,
        z=z,
        lhs=0j,
        rhs=0j,
        abs_residual=math.inf,
        rel_residual=math.inf,
        error_bound=math.inf,
        error=f"{type(exc).__name__}: {exc}",
    )


def check_hurwitz_relation(grid: GridSpec, tol: float) -> ResidualReport:
    """zeta(s,z) (Euler-Maclaurin) against the polylogarithm combination
    Gamma(1-s){(2 pi i)^{s-1} L(1-s,z) + (-2 pi i)^{s-1} L(1-s,1-z)}."""
    for s in grid.s_points:
        if complex(s).real >= 0:
            raise DomainError("functional-relation grid needs Re s < 0 everywhere")
    points = []
    for s in grid.s_points:
        for z in grid.z_points:
            try:
                lhs = hurwitz_em(s, z, grid.params)
                rhs = hurwitz_rhs(s, z, grid.params)
                points.append(
                    _residual_point(complex(s), float(z), lhs.value, rhs.value,
                                    lhs.error + rhs.error)
                )
            except HurwitzLabError as exc:
                points.append(_failed_point(complex(s), float(z), exc))
    return _finish("hurwitz", tol, points, grid.params)


def check_riemann_fe(s_points: Sequence[complex], tol: float,
                     params: EvalParams = DEFAULT_PARAMS) -> ResidualReport:
    """zeta(s) against 2^s pi^{s-1} Gamma(1-s) sin(pi s/2) zeta(1-s);
    the right side assembles the convergent-domain Dirichlet series."""
    points = []
    for s in s_points:
        s = complex(s)
        if s.real >= 0:
            raise DomainError("functional-equation check needs Re s < 0")
        try:
            lhs = hurwitz_em(s, 1.0, params)
            zeta_mirror = polylog_l(1.0 - s, 1.0, params)
            rhs_value = (
                complex_pow(2.0, s)
                * complex_pow(math.pi, s - 1.0)
                * gamma(1.0 - s)
                * cmath.sin(math.pi * s / 2.0)
                * zeta_mirror.value
            )
            bound = lhs.error + abs(rhs_value) * 1e-14 + zeta_mirror.error
            points.append(_residual_point(s, 1.0, lhs.value, rhs_value, bound))
        except HurwitzLabError as exc:
            points.append(_failed_point(s, 1.0, exc))
    return _finish("riemann-fe", tol, points, params)


def check_via_u_agreement(grid: GridSpec, tol: float) -> ResidualReport:
    """u-sum route against the Euler-Maclaurin route on Re s > -1."""
    points = []
    for s in grid.s_points:
        s = complex(s)
        for z in grid.z_points:
            z = float(z)
            try:
                if not (0.0 < z < 1.0):
                    raise DomainError("u-sum agreement needs z in (0, 1)")
                lhs = hurwitz_via_u(s, z, grid.params)
                rhs = hurwitz_em(s, z, grid.params)
                points.append(
                    _residual_point(s, z, lhs.value, rhs.value, lhs.error + rhs.error)
                )
            except HurwitzLabError as exc:
                points.append(_failed_point(s, z, exc))
    return _finish("via-u", tol, points, grid.params)


def _connection_point(alpha, gamma_p, x, params) -> PointResult:
    extra = {
        "alpha": [alpha.real, alpha.imag],
        "gamma": [gamma_p.real, gamma_p.imag],
        "x": [x.real, x.imag],
    }
    u_val = tricomi_u(alpha, gamma_p, x, params.confluent)
    rhs = connection_rhs(alpha, gamma_p, x, params.confluent)
    abs_res = abs(u_val - rhs)
    rel_res = abs_res / max(1.0, abs(u_val))
    return PointResult(
        s=gamma_p,
        z=None,
        lhs=u_val,
        rhs=rhs,
        abs_residual=abs_res,
        rel_residual=rel_res,
        error_bound=max(params.quad.target_abs_tol * 10.0, 1e-13 * abs(u_val)),
        extra=extra,
    )


def check_connection(sample_size: int, seed: int, tol: float,
                     params: EvalParams = DEFAULT_PARAMS,
                     triples: Sequence = ()) -> ResidualReport:
    """Seeded random (alpha, gamma, x) sample of the connection identity,
    plus any explicitly supplied triples (evaluated after the sample)."""
    if sample_size < 0:
        raise DomainError("sample_size must be non-negative")
    rng = random.Random(seed)
    cases = []
    for _ in range(sample_size):
        alpha = complex(rng.uniform(0.6, 2.5), rng.uniform(-1.0, 1.0))
        while True:
            gamma_p = complex(rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 2.0))
            if abs(gamma_p - round(gamma_p.real)) > 0.05:
                break
        x = complex(rng.uniform(0.5, 5.0), rng.uniform(-2.0, 2.0))
        cases.append((alpha, gamma_p, x))
    cases.extend((complex(a), complex(g), complex(x)) for a, g, x in triples)
    points = []
    for alpha, gamma_p, x in cases:
        try:
            points.append(_connection_point(alpha, gamma_p, x, params))
        except HurwitzLabError as exc:
            bad = _failed_point(gamma_p, None, exc)
            bad.extra = {
                "alpha": [alpha.real, alpha.imag],
                "gamma": [gamma_p.real, gamma_p.imag],
                "x": [x.real, x.imag],
            }
            points.append(bad)
    return _finish("connection", tol, points, params)


def check_vanishing_identity(grid: GridSpec, tol: float) -> ResidualReport:
    """Gated form: the functional-relation residual itself (the two are
    algebraically equivalent).  Alongside it, an ungated diagnostic
    evaluates the sawtooth route directly:

        z^{1-s}/(s-1) + z^{-s}/2 + z^{-s} s * int_0^1 (1/2 - z t) (1-t)^{-s-1} dt

    which should vanish; the integral is taken with the singular factor
    moved to the left endpoint (t -> 1-u) and its quadrature bound is
    recorded with the point."""
    for s in grid.s_points:
        if complex(s).real >= 0:
            raise DomainError("vanishing-identity grid needs Re s < 0 everywhere")
    points = []
    for s in grid.s_points:
        s = complex(s)
        for z in grid.z_points:
            z = float(z)
            try:
                if not (0.0 < z < 1.0):
                    raise DomainError("vanishing identity needs z in (0, 1)")
                lhs = hurwitz_em(s, z, grid.params)
                rhs = hurwitz_rhs(s, z, grid.params)
                point = _residual_point(s, z, lhs.value, rhs.value,
                                        lhs.error + rhs.error)
                # sawtooth_sum(z t)/pi is the closed form of the sine sum
                # (1/2 - z t); substitute t = 1-u to park the algebraic
                # singularity at the left endpoint.
                quad = integrate_unit_interval(
                    lambda u, _s=s, _z=z: (
                        sawtooth_sum(_z * (1.0 - u)) / math.pi
                        * cmath.exp((-_s - 1.0) * math.log(u))
                    ),
                    grid.params.quad,
                )
                log_z = math.log(z)
                diag = (
                    cmath.exp((1.0 - s) * log_z) / (s - 1.0)
                    + 0.5 * cmath.exp(-s * log_z)
                    + cmath.exp(-s * log_z) * s * quad.value
                )
                point.extra = {
                    "diagnostic_value": [diag.real, diag.imag],
                    "diagnostic_quad_bound": abs(s) * z ** (-s.real) * quad.error,
                    "diagnostic_vs_gated": abs(abs(diag) - point.abs_residual),
                }
                points.append(point)
            except HurwitzLabError as exc:
                points.append(_failed_point(s, z, exc))
    return _finish("vanishing", tol, points, grid.params)


_EXACT_LAW = 1e-12


def check_asymptotics(alphas_gammas: Sequence, ladder: Sequence[float],
                      params: EvalParams = DEFAULT_PARAMS,
                      tol: float = _EXACT_LAW) -> ResidualReport:
    """|x^alpha U - 1| must fall strictly along the magnitude ladder for
    each (alpha, gamma) pair; a pair whose ratios all sit below 1e-12 is
    an exact law and passes outright.  The per-pair residual is the worst
    consecutive increase (clipped at zero), so the max-residual gate is
    exactly the monotonicity gate."""
    ladder = [float(m) for m in ladder]
    if not ladder:
        raise DomainError("magnitude ladder must be non-empty")
    if any(b <= a for a, b in zip(ladder, ladder[1:])):
        raise DomainError("magnitude ladder must increase")
    points = []
    for alpha, gamma_p in alphas_gammas:
        alpha = complex(alpha)
        gamma_p = complex(gamma_p)
        try:
            ratios = asymptotic_ratio(alpha, gamma_p, ladder, params.confluent)
            exact = all(r <= _EXACT_LAW for r in ratios)
            if exact:
                violation = 0.0
            else:
                violation = max(
                    (b - a for a, b in zip(ratios, ratios[1:])), default=0.0
                )
                violation = max(violation, 0.0)
            points.append(
                PointResult(
                    s=alpha,
                    z=None,
                    lhs=complex(ratios[-1]),
                    rhs=0j,
                    abs_residual=violation,
                    rel_residual=violation,
                    error_bound=params.quad.target_abs_tol * 10.0,
                    extra={
                        "gamma": [gamma_p.real, gamma_p.imag],
                        "magnitudes": ladder,
                        "ratios": ratios,
                        "exact_law": exact,
                    },
                )
            )
        except HurwitzLabError as exc:
            bad = _failed_point(alpha, None, exc)
            bad.extra = {"gamma": [gamma_p.real, gamma_p.imag]}
            points.append(bad)
    return _finish("asymptotics", tol, points, params)


def check_fourier(t_values: Sequence[float], ladder: Sequence[int], tol: float,
                  params: EvalParams = DEFAULT_PARAMS) -> ResidualReport:
    """Partial cosine sums against the periodic quadratic.

    The worst error over the t sample must fall strictly along the
    doubling ladder of term counts, and the final per-t errors gate at
    tol."""
    ladder = [int(n) for n in ladder]
    if not ladder or any(b <= a for a, b in zip(ladder, ladder[1:])):
        raise DomainError("term-count ladder must be non-empty and increasing")
    ladder_max = []
    for n in ladder:
        worst = max(
            abs(fourier_b2_partial(t, n) - periodic_bernoulli(2, t)) for t in t_values
        )
        ladder_max.append(worst)
    monotone = all(b < a for a, b in zip(ladder_max, ladder_max[1:]))
    n_final = ladder[-1]
    points = []
    for t in t_values:
        lhs = complex(fourier_b2_partial(t, n_final))
        rhs = complex(periodic_bernoulli(2, t))
        point = _residual_point(None, float(t), lhs, rhs, 1.0 / (math.pi**2 * n_final))
        point.extra = {"n_terms": n_final}
        points.append(point)
    details = {"ladder": ladder, "ladder_max_errors": ladder_max, "monotone": monotone}
    return _finish("fourier", tol, points, params, extra_gate=monotone, details=details)


# --- default grids ---------------------------------------------------------

DEFAULT_RELATION_S = (
    complex(-0.5), complex(-1.5), complex(-2.5), complex(-3.5),
    complex(-0.5, 2.0), complex(-0.5, -2.0),
    complex(-1.5, 2.0), complex(-1.5, -2.0),
    complex(-2.5, 2.0), complex(-2.5, -2.0),
)
DEFAULT_RELATION_Z = (0.1, 0.25, 0.5, 0.75, 0.9)
DEFAULT_RIEMANN_S = (complex(-0.5), complex(-1.0), complex(-1.5), complex(-2.0), complex(-2.5))
DEFAULT_VIA_U_S = (complex(2.0), complex(0.5), complex(0.0), complex(0.5, 1.0))
DEFAULT_VIA_U_Z = (0.25, 0.5, 0.75)
DEFAULT_ASYMPTOTIC_PAIRS = (
    (complex(1.0), complex(0.5)),
    (complex(2.0), complex(1.0)),
    (complex(1.5), complex(0.25)),
    (complex(1.0), complex(2.0)),
)
DEFAULT_MAGNITUDE_LADDER = (10.0, 100.0, 1000.0, 10000.0)
DEFAULT_FOURIER_T = (0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
DEFAULT_FOURIER_LADDER = (16, 32, 64, 128, 256, 512, 1024, 2048, 4096)

# The specialised connection points (alpha=1, gamma=1-s, x=-2 pi i l z):
# s off the integers, |x| kept modest so the alternating Kummer sum does
# not lose digits to cancellation.
CONNECTION_SPECIAL_SLZ = (
    (complex(0.5), 3, 0.25),
    (complex(-0.5), 1, 0.5),
    (complex(-1.5), 2, 0.3),
    (complex(0.5, 1.0), 1, 0.4),
    (complex(-2.5), 1, 0.75),
)


def connection_special_triples():
    """(alpha, gamma, x) triples realising the zeta-side specialisation."""
    out = []
    for s, l, z in CONNECTION_SPECIAL_SLZ:
        out.append((complex(1.0), 1.0 - s, complex(0.0, -_TWO_PI * l * z)))
    return tuple(out)


CHECK_IDS = (
    "hurwitz",
    "riemann-fe",
    "via-u",
    "connection",
    "vanishing",
    "asymptotics",
    "fourier",
)

DEFAULT_TOLERANCES = {
    "hurwitz": 1e-8,
    "riemann-fe": 1e-9,
    "via-u": 1e-6,
    "connection": 1e-8,
    "vanishing": 1e-8,
    "asymptotics": _EXACT_LAW,
    "fourier": 1e-6,
}


def run_suite(which: Sequence[str], params: EvalParams = DEFAULT_PARAMS, *,
              seed: int = 42,
              tol_overrides: dict | None = None,
              s_points: Sequence[complex] | None = None,
              z_points: Sequence[float] | None = None) -> list:
    """Run the selected checks on their default grids, in the order
    given, deterministically under a fixed seed.

    s_points/z_points, when supplied, replace the default grid of the
    grid-based checks (hurwitz, vanishing, via-u).
    """
    tols = dict(DEFAULT_TOLERANCES)
    if tol_overrides:
        tols.update(tol_overrides)
    for cid in which:
        if cid not in CHECK_IDS:
            raise UnknownCheckId(f"unknown check id {cid!r}")
    reports = []
    for cid in which:
        tol = tols[cid]
        if cid == "hurwitz":
            grid = GridSpec(tuple(s_points or DEFAULT_RELATION_S),
                            tuple(z_points or DEFAULT_RELATION_Z), params)
            reports.append(check_hurwitz_relation(grid, tol))
        elif cid == "riemann-fe":
            reports.append(check_riemann_fe(DEFAULT_RIEMANN_S, tol, params))
        elif cid == "via-u":
            grid = GridSpec(tuple(s_points or DEFAULT_VIA_U_S),
                            tuple(z_points or DEFAULT_VIA_U_Z), params)
            reports.append(check_via_u_agreement(grid, tol))
        elif cid == "connection":
            reports.append(
                check_connection(100, seed, tol, params,
                                 triples=connection_special_triples())
            )
        elif cid == "vanishing":
            grid = GridSpec(tuple(s_points or DEFAULT_RELATION_S),
                            tuple(z_points or DEFAULT_RELATION_Z), params)
            reports.append(check_vanishing_identity(grid, tol))
        elif cid == "asymptotics":
            reports.append(
                check_asymptotics(DEFAULT_ASYMPTOTIC_PAIRS,
                                  DEFAULT_MAGNITUDE_LADDER, params, tol)
            )
        elif cid == "fourier":
            reports.append(
                check_fourier(DEFAULT_FOURIER_T, DEFAULT_FOURIER_LADDER, tol, params)
            )
    return reports
