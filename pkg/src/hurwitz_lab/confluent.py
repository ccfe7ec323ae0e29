"""Confluent hypergeometric functions.

The regular solution F(alpha, gamma; x) (Kummer series), the solution
U(alpha, gamma; x) singled out at the irregular point x = infinity, the
connection formula between them, and residual checks (ODE, asymptotics).

U is computed by two independent routes:

* laplace-integral:  U = (1/Gamma(alpha)) * integral_0^inf
  e^{-xu} (1+u)^{gamma-alpha-1} u^{alpha-1} du, evaluated on the ray
  u = e^{i phi} v with phi = -arg(x), which turns e^{-xu} into e^{-|x|v}
  with no oscillation.  The rotation stays inside the quadrant swept
  between the positive real axis and the ray, where neither branch
  point (u = 0, u = -1) is crossed, so the principal branches track
  continuously.  Valid for Re alpha > 0 and |arg x| <= pi/2 (x != 0),
  which covers the real-positive and purely-imaginary arguments needed
  downstream.

* incomplete-gamma (alpha = 1 only):  substituting t = x(1+u) gives
  U(1, gamma; x) = e^x x^{1-gamma} Gamma(gamma-1, x); in scaled form
  this is exactly the continued-fraction factor H(gamma-1, x), which
  never over- or underflows.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, NoConvergence, PoleError
from .numerics import (
    DEFAULT_QUAD,
    QuadratureSpec,
    complex_pow,
    integrate_semi_infinite,
    log_gamma,
    upper_gamma_scaled,
)

__all__ = [
    "ConfluentParams",
    "DEFAULT_CONFLUENT",
    "kummer_m",
    "tricomi_u_integral",
    "tricomi_u_gamma",
    "tricomi_u",
    "connection_rhs",
    "connection_residual",
    "ode_residual",
    "asymptotic_ratio",
]

_INTEGER_GAMMA_GUARD = 1e-8


@dataclass(frozen=True)
class ConfluentParams:
    """Evaluation knobs: series cap and stopping threshold for the Kummer
    sum, quadrature spec for the Laplace integral, and the U route."""

    series_cap: int = 10000
    term_tol: float = 1e-16
    quad: QuadratureSpec = DEFAULT_QUAD
    u_route: str = "auto"

    def __post_init__(self):
        if not (1 <= self.series_cap <= 100000):
            raise DomainError("series_cap must be in 1..100000")
        if self.term_tol <= 0:
            raise DomainError("term_tol must be positive")
        if self.u_route not in ("laplace-integral", "incomplete-gamma", "auto"):
            raise DomainError(f"unknown u_route {self.u_route!r}")


DEFAULT_CONFLUENT = ConfluentParams()


def _near_integer(w: complex, guard: float):
    n = round(w.real)
    if abs(w - n) <= guard:
        return n
    return None


def kummer_m(alpha: complex, gamma_p: complex, x: complex,
             params: ConfluentParams = DEFAULT_CONFLUENT) -> complex:
    """Kummer series F(alpha, gamma; x) = sum (alpha)_n x^n / ((gamma)_n n!).

    Terms follow the recurrence term *= (alpha+n) x / ((gamma+n)(n+1));
    summation stops after three consecutive terms below term_tol times
    the partial sum, so a lone near-zero term cannot end the sum early.
    An exactly zero term means the series terminated (alpha a
    non-positive integer) and is final.
    """
    alpha = complex(alpha)
    gamma_p = complex(gamma_p)
    x = complex(x)
    if alpha == 0:
        return complex(1.0)
    n_bad = _near_integer(gamma_p, 1e-12)
    if n_bad is not None and n_bad <= 0:
        raise PoleError(f"Kummer series undefined at gamma = {n_bad}")
    term = complex(1.0)
    total = complex(1.0)
    small_run = 0
    for n in range(params.series_cap):
        term = term * (alpha + n) * x / ((gamma_p + n) * (n + 1))
        total += term
        if term == 0:
            return total
        if abs(term) <= params.term_tol * abs(total):
            small_run += 1
            if small_run >= 3:
                return total
        else:
            small_run = 0
    raise NoConvergence(
        f"Kummer series cap {params.series_cap} reached at alpha={alpha}, "
        f"gamma={gamma_p}, x={x}",
        partial_sum=total,
        last_term=term,
    )


def tricomi_u_integral(alpha: complex, gamma_p: complex, x: complex,
                       params: ConfluentParams = DEFAULT_CONFLUENT) -> complex:
    """U by the Laplace integral on the decay-optimal rotated ray."""
    alpha = complex(alpha)
    gamma_p = complex(gamma_p)
    x = complex(x)
    if alpha.real <= 0:
        raise DomainError("Laplace route needs Re alpha > 0")
    if x == 0:
        raise DomainError("Laplace route needs x != 0")
    phi = -cmath.phase(x)
    if abs(phi) > 0.5 * math.pi + 1e-12:
        raise DomainError("Laplace route needs Re x > 0 or x purely imaginary")
    mod_x = abs(x)
    rot = cmath.exp(1j * phi)
    c = gamma_p - alpha - 1.0
    am1 = alpha - 1.0

    def integrand(v: float) -> complex:
        if v <= 0.0:
            # endpoint limit of v^(alpha-1): 1 at alpha = 1, 0 for Re alpha > 1
            return complex(1.0) if am1 == 0 else 0j
        # log-space product so extreme nodes underflow cleanly to 0
        return cmath.exp(-mod_x * v + c * cmath.log(1.0 + rot * v) + am1 * math.log(v))

    result = integrate_semi_infinite(integrand, params.quad)
    prefactor = cmath.exp(1j * phi * alpha - log_gamma(alpha))
    return prefactor * result.value


def tricomi_u_gamma(alpha: complex, gamma_p: complex, x: complex) -> complex:
    """U(1, gamma; x) through the incomplete gamma function.

    Only alpha = 1 is supported; in scaled form the value is the
    continued-fraction factor H(gamma-1, x) itself, so no intermediate
    e^x or x^{1-gamma} can overflow.
    """
    alpha = complex(alpha)
    gamma_p = complex(gamma_p)
    x = complex(x)
    if alpha != 1:
        raise DomainError("incomplete-gamma route is specific to alpha = 1")
    if x == 0:
        raise DomainError("incomplete-gamma route needs x != 0")
    return upper_gamma_scaled(gamma_p - 1.0, x)


def tricomi_u(alpha: complex, gamma_p: complex, x: complex,
              params: ConfluentParams = DEFAULT_CONFLUENT) -> complex:
    """U by the route selected in params (auto prefers the closed form
    when alpha = 1, the Laplace integral otherwise)."""
    route = params.u_route
    if route == "auto":
        route = "incomplete-gamma" if complex(alpha) == 1 else "laplace-integral"
    if route == "incomplete-gamma":
        return tricomi_u_gamma(alpha, gamma_p, x)
    return tricomi_u_integral(alpha, gamma_p, x, params)


def connection_rhs(alpha: complex, gamma_p: complex, x: complex,
                   params: ConfluentParams = DEFAULT_CONFLUENT) -> complex:
    """Expansion of U in the fundamental system at x = 0:

        U = Gamma(1-gamma)/Gamma(alpha-gamma+1) * F(alpha, gamma; x)
          + Gamma(gamma-1)/Gamma(alpha) * x^{1-gamma} e^x F(1-alpha, 2-gamma; -x)

    Integer gamma is the logarithmic degenerate case and is refused
    (guard band 1e-8).  A pole in a denominator gamma factor is a zero
    of the whole term, not an error.
    """
    alpha = complex(alpha)
    gamma_p = complex(gamma_p)
    x = complex(x)
    if _near_integer(gamma_p, _INTEGER_GAMMA_GUARD) is not None:
        raise PoleError(f"connection formula degenerates at integer gamma ~ {gamma_p}")

    try:
        coeff1 = cmath.exp(log_gamma(1.0 - gamma_p) - log_gamma(alpha - gamma_p + 1.0))
    except PoleError:
        coeff1 = 0j
    term1 = coeff1 * kummer_m(alpha, gamma_p, x, params) if coeff1 != 0 else 0j

    try:
        log_coeff2 = log_gamma(gamma_p - 1.0) - log_gamma(alpha)
    except PoleError:
        term2 = 0j
    else:
        factor = cmath.exp(log_coeff2 + (1.0 - gamma_p) * cmath.log(x) + x)
        term2 = factor * kummer_m(1.0 - alpha, 2.0 - gamma_p, -x, params)
    return term1 + term2


def connection_residual(alpha: complex, gamma_p: complex, x: complex,
                        params: ConfluentParams = DEFAULT_CONFLUENT) -> float:
    """|U_route - connection_rhs| / max(1, |U_route|)."""
    u_val = tricomi_u(alpha, gamma_p, x, params)
    rhs = connection_rhs(alpha, gamma_p, x, params)
    return abs(u_val - rhs) / max(1.0, abs(u_val))


def ode_residual(y_kind: str, alpha: complex, gamma_p: complex, x: complex,
                 h: float | None = None,
                 params: ConfluentParams = DEFAULT_CONFLUENT) -> float:
    """Finite-difference residual of x y'' + (gamma - x) y' - alpha y = 0.

    Central differences with step h (default 1e-4 * max(1, |x|)); the
    sampled solution is the Kummer series or the selected U route.
    """
    alpha = complex(alpha)
    gamma_p = complex(gamma_p)
    x = complex(x)
    if h is None:
        h = 1e-4 * max(1.0, abs(x))
    if abs(x) < 10.0 * h:
        raise DomainError("x must stay at least 10 h away from the origin")
    if y_kind == "kummer":
        def y(w):
            return kummer_m(alpha, gamma_p, w, params)
    elif y_kind == "tricomi":
        def y(w):
            return tricomi_u(alpha, gamma_p, w, params)
    else:
        raise DomainError(f"unknown solution kind {y_kind!r}")
    y0 = y(x)
    yp = y(x + h)
    ym = y(x - h)
    d1 = (yp - ym) / (2.0 * h)
    d2 = (yp - 2.0 * y0 + ym) / (h * h)
    residual = x * d2 + (gamma_p - x) * d1 - alpha * y0
    return abs(residual) / max(1.0, abs(y0))


def asymptotic_ratio(alpha: complex, gamma_p: complex,
                     magnitudes: Sequence[float],
                     params: ConfluentParams = DEFAULT_CONFLUENT) -> list:
    """|x^alpha U(alpha, gamma; x) - 1| along x = |x| on the positive
    real axis; the decay of U at the irregular point makes the sequence
    shrink as the magnitudes grow."""
    alpha = complex(alpha)
    if alpha.real <= 0:
        raise DomainError("asymptotic law requires Re alpha > 0")
    mags = list(magnitudes)
    if not mags:
        raise DomainError("magnitudes must be non-empty")
    if any(m < 5.0 for m in mags) or any(b <= a for a, b in zip(mags, mags[1:])):
        raise DomainError("magnitudes must be increasing and each >= 5")
    out = []
    for m in mags:
        x = complex(m)
        u_val = tricomi_u(alpha, gamma_p, x, params)
        out.append(abs(complex_pow(x, alpha) * u_val - 1.0))
    return out
