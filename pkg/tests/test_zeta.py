"""The three zeta routes, the polylogarithm, and the functional relation."""

import math
from dataclasses import replace

import numpy as np
import pytest

from hurwitz_lab.errors import DomainError, PoleError, StripError
from hurwitz_lab.zeta import (
    DEFAULT_PARAMS,
    EvalParams,
    hurwitz_direct,
    hurwitz_em,
    hurwitz_rhs,
    hurwitz_via_u,
    polylog_l,
    riemann_zeta,
)

P = DEFAULT_PARAMS

PI2_6 = math.pi**2 / 6.0
PI2_2 = math.pi**2 / 2.0


def brute_hurwitz(s: complex, z: float, n_terms: int = 1_000_000) -> complex:
    """Oracle: heavy partial sum plus integral tail, vectorised."""
    k = np.arange(n_terms, dtype=float)
    total = complex(np.sum(np.exp(-s * np.log(k + z))))
    return total + (n_terms - 1 + z) ** (1.0 - s) / (s - 1.0)


# --- direct series ----------------------------------------------------------

def test_direct_basel():
    # sum 1/(k+1)^2 = pi^2/6, classical; cross-checked by brute force
    oracle = brute_hurwitz(2.0, 1.0)
    assert abs(oracle - PI2_6) < 1e-10
    got = hurwitz_direct(2.0, 1.0, P)
    assert abs(got.value - PI2_6) < 1e-9


def test_direct_half():
    # sum 1/(k+1/2)^2 = 4 sum_odd 1/j^2 = 4 (pi^2/8) = pi^2/2
    got = hurwitz_direct(2.0, 0.5, P)
    assert abs(got.value - PI2_2) < 1e-9


def test_direct_agrees_with_em_at_three():
    tight = replace(P, tol_abs=1e-12)
    d = hurwitz_direct(3.0, 1.0, tight)
    e = hurwitz_em(3.0, 1.0, tight)
    assert abs(d.value - e.value) <= 1e-11


def test_direct_domain():
    with pytest.raises(DomainError):
        hurwitz_direct(1.0, 0.5, P)
    with pytest.raises(DomainError):
        hurwitz_direct(0.5, 0.5, P)
    with pytest.raises(DomainError):
        hurwitz_direct(2.0, 0.0, P)
    with pytest.raises(DomainError):
        hurwitz_direct(2.0, 1.5, P)


# --- Euler-Maclaurin continuation -------------------------------------------

def test_em_at_zero_is_half_minus_z():
    for z in (0.25, 0.5, 0.75):
        got = hurwitz_em(0.0, z, P)
        assert abs(got.value - (0.5 - z)) < 1e-12


def test_em_at_minus_one():
    # with m >= 2 the remainder vanishes for the degree-1 summand and the
    # finite expansion gives -z^2/2 + z/2 - 1/12 exactly
    for z in (0.25, 1.0):
        expected = -z * z / 2.0 + z / 2.0 - 1.0 / 12.0
        got = hurwitz_em(-1.0, z, P)
        assert abs(got.value - expected) < 1e-12
    assert abs(hurwitz_em(-1.0, 1.0, P).value - (-1.0 / 12.0)) < 1e-12


def test_em_agrees_with_direct_complex():
    s = complex(2.0, 3.0)
    tight = replace(P, tol_abs=1e-11)
    d = hurwitz_direct(s, 0.3, tight)
    e = hurwitz_em(s, 0.3, tight)
    assert abs(d.value - e.value) <= 1e-10


def test_em_pole_and_strip():
    with pytest.raises(PoleError):
        hurwitz_em(1.0, 0.5, P)
    with pytest.raises(StripError):
        hurwitz_em(-2.0, 0.5, replace(P, em_order=2))


def test_em_lowest_order_no_shift_instance():
    # order 2 with no directly summed head is the base instance of the
    # continuation; it must agree with the default configuration inside
    # its narrower strip Re s > -1
    base = replace(P, em_order=2, em_shift=0)
    for s, z in ((0.5, 0.3), (complex(-0.5, 1.0), 0.7), (2.0, 0.25)):
        got = hurwitz_em(s, z, base)
        ref = hurwitz_em(s, z, P)
        assert abs(got.value - ref.value) <= 1e-9


def test_em_order_ladder_stable():
    for s in (complex(-0.5), complex(-2.5, 1.0)):
        values = [
            hurwitz_em(s, 0.3, replace(P, em_order=m)).value for m in (4, 6, 8)
        ]
        assert abs(values[0] - values[1]) <= 1e-9
        assert abs(values[1] - values[2]) <= 1e-9


def test_em_pole_residue():
    # (s-1) zeta(s,z) -> 1 as s -> 1+
    for z in (0.3, 0.8):
        drift = []
        for eps in (1e-2, 1e-3, 1e-4):
            s = 1.0 + eps
            drift.append(abs(eps * hurwitz_em(s, z, P).value - 1.0))
        assert drift[0] > drift[1] > drift[2]
        assert drift[2] < 1e-3


def test_em_half_argument_identity():
    # zeta(s, 1/2) = (2^s - 1) zeta(s)
    for s in (2.0, 3.0, 4.0):
        lhs = hurwitz_em(s, 0.5, P).value
        rhs = (2.0**s - 1.0) * riemann_zeta(s, P).value
        assert abs(lhs - rhs) <= 1e-9 * abs(rhs)


def test_conjugation_symmetry_all_routes():
    s = complex(1.7, 1.3)
    z = 0.35
    for fn in (hurwitz_direct, hurwitz_em, hurwitz_via_u):
        plain = fn(s, z, P).value
        conj = fn(s.conjugate(), z, P).value
        assert abs(conj - plain.conjugate()) <= 1e-11 * max(1.0, abs(plain))


def test_params_validation():
    with pytest.raises(DomainError):
        EvalParams(em_order=3)
    with pytest.raises(DomainError):
        EvalParams(em_order=66)
    with pytest.raises(DomainError):
        EvalParams(l_cap=0)
    with pytest.raises(DomainError):
        EvalParams(tol_abs=0.0)


# --- u-sum route ------------------------------------------------------------

def test_via_u_agrees_with_direct():
    got = hurwitz_via_u(2.0, 0.5, P)
    ref = hurwitz_direct(2.0, 0.5, P)
    assert abs(got.value - ref.value) <= 1e-7
    assert abs(got.value - ref.value) <= got.error + ref.error


def test_via_u_agrees_with_em_critical_strip():
    got = hurwitz_via_u(0.5, 0.25, P)
    ref = hurwitz_em(0.5, 0.25, P)
    assert abs(got.value - ref.value) <= 1e-6


def test_via_u_real_s_gives_real_value():
    got = hurwitz_via_u(2.0, 0.25, P)
    assert abs(got.value.imag) <= 1e-10


def test_via_u_s_zero_shortcut():
    got = hurwitz_via_u(0.0, 0.75, P)
    assert abs(got.value - (0.5 - 0.75)) <= 1e-10


def test_via_u_tail_bound_monotone_improvement():
    # doubling l_cap must not move the value by more than the reported
    # tail bound of the coarser run
    s, z = 0.5, 0.25
    coarse = hurwitz_via_u(s, z, replace(P, l_cap=500))
    fine = hurwitz_via_u(s, z, replace(P, l_cap=1000))
    assert abs(fine.value - coarse.value) <= coarse.error + fine.error


def test_via_u_domain():
    with pytest.raises(DomainError):
        hurwitz_via_u(0.5, 1.0, P)
    with pytest.raises(DomainError):
        hurwitz_via_u(-1.5, 0.5, P)
    with pytest.raises(PoleError):
        hurwitz_via_u(1.0, 0.5, P)


# --- polylogarithm ----------------------------------------------------------

def test_polylog_at_one_is_zeta():
    got = polylog_l(2.0, 1.0, P)
    assert abs(got.value - PI2_6) <= 1e-12


def test_polylog_at_half_alternating():
    # sum (-1)^n / n^2 = -eta(2) = -pi^2/12; alternating-series oracle
    n = np.arange(1, 200001, dtype=float)
    partial = np.cumsum(((-1.0) ** n) / n**2)
    oracle = 0.5 * (partial[-1] + partial[-2])
    assert abs(oracle - (-(math.pi**2) / 12.0)) < 1e-10
    got = polylog_l(2.0, 0.5, P)
    assert abs(got.value - oracle) <= 1e-10


def test_polylog_against_brute_force():
    s, z = 3.0, 0.25
    n = np.arange(1, 1_000_001, dtype=float)
    oracle = complex(np.sum(np.exp(2j * np.pi * n * z) / n**s))
    got = polylog_l(s, z, P)
    assert abs(got.value - oracle) <= 1e-10


def test_polylog_generic_points_self_consistent():
    # Hurwitz decomposition: L(s, z) = sum over residues of z restricted
    # to a lattice; here just check the reported bound is honest against
    # a 10x longer head.
    s, z = complex(1.5, 2.0), 0.9
    got = polylog_l(s, z, P)
    n = np.arange(1, 2_000_001, dtype=float)
    heavy = complex(np.sum(np.exp(2j * np.pi * n * z) * np.exp(-s * np.log(n))))
    # heavy truncation itself is only ~1e-6 accurate; bound accordingly
    assert abs(got.value - heavy) <= 5e-6


def test_polylog_domain():
    with pytest.raises(DomainError):
        polylog_l(1.0, 0.5, P)
    with pytest.raises(DomainError):
        polylog_l(0.5, 0.5, P)
    with pytest.raises(DomainError):
        polylog_l(2.0, 0.0, P)


# --- Riemann specialisation -------------------------------------------------

def test_riemann_values():
    assert abs(riemann_zeta(2.0, P).value - PI2_6) <= 1e-10
    assert abs(riemann_zeta(0.0, P).value - (-0.5)) <= 1e-12
    assert abs(riemann_zeta(-1.0, P).value - (-1.0 / 12.0)) <= 1e-12
    with pytest.raises(PoleError):
        riemann_zeta(1.0, P)


# --- functional-relation right side -----------------------------------------

def test_rhs_reduces_to_riemann_at_z_one():
    got = hurwitz_rhs(-1.0, 1.0, P)
    ref = riemann_zeta(-1.0, P)
    assert abs(got.value - ref.value) <= 1e-10


def test_rhs_trivial_zero():
    # at s = -2 the assembled combination vanishes with zeta(-2)
    got = hurwitz_rhs(-2.0, 1.0, P)
    assert abs(got.value) <= 1e-12


def test_rhs_matches_em_inside_strip():
    got = hurwitz_rhs(-0.5, 0.3, P)
    ref = hurwitz_em(-0.5, 0.3, P)
    assert abs(got.value - ref.value) <= 1e-9


def test_rhs_domain():
    with pytest.raises(DomainError):
        hurwitz_rhs(0.5, 0.3, P)
    with pytest.raises(DomainError):
        hurwitz_rhs(0.0, 0.3, P)


# --- three-route agreement --------------------------------------------------

def test_three_route_agreement_grid():
    params = replace(P, tol_abs=1e-9, l_cap=2000)
    s_points = (complex(2.0), complex(3.0), complex(2.0, 3.0), complex(1.5, -2.0))
    z_points = (0.1, 0.25, 0.5, 0.75, 1.0)
    worst = 0.0
    for s in s_points:
        for z in z_points:
            values = []
            if s.real > 1.0:
                values.append(hurwitz_direct(s, z, params).value)
            values.append(hurwitz_em(s, z, params).value)
            if z < 1.0:
                values.append(hurwitz_via_u(s, z, params).value)
            for i in range(len(values)):
                for j in range(i + 1, len(values)):
                    worst = max(worst, abs(values[i] - values[j]))
    assert worst <= 1e-7
