"""Report assembly, gating, determinism, and serialization round-trips."""

import json
from dataclasses import replace

import pytest

from hurwitz_lab.errors import DomainError, UnknownCheckId
from hurwitz_lab.reporting import (
    render_human,
    report_from_dict,
    report_to_dict,
    reports_from_json,
    reports_to_csv,
    reports_to_json,
)
from hurwitz_lab.verify import (
    DEFAULT_RELATION_S,
    DEFAULT_RELATION_Z,
    GridSpec,
    check_asymptotics,
    check_connection,
    check_fourier,
    check_hurwitz_relation,
    check_riemann_fe,
    check_vanishing_identity,
    check_via_u_agreement,
    connection_special_triples,
    run_suite,
)
from hurwitz_lab.zeta import DEFAULT_PARAMS

P = DEFAULT_PARAMS


def small_grid(s_points, z_points):
    return GridSpec(tuple(s_points), tuple(z_points), P)


def test_hurwitz_relation_default_grid_passes():
    grid = small_grid(DEFAULT_RELATION_S, DEFAULT_RELATION_Z)
    report = check_hurwitz_relation(grid, 1e-8)
    assert report.passed
    assert report.max_rel <= 1e-8
    assert len(report.points) == 50


def test_hurwitz_relation_single_point():
    grid = small_grid([complex(-1.0)], [1.0])
    report = check_hurwitz_relation(grid, 1e-8)
    assert report.passed
    assert report.points[0].abs_residual <= 1e-10


def test_hurwitz_relation_domain_gate():
    grid = small_grid([complex(2.0)], [0.5])
    with pytest.raises(DomainError):
        check_hurwitz_relation(grid, 1e-8)


def test_riemann_fe_points():
    report = check_riemann_fe([complex(-1.0)], 1e-9, P)
    assert report.passed
    assert report.points[0].abs_residual <= 1e-10
    report = check_riemann_fe([complex(-2.0)], 1e-9, P)
    assert report.points[0].abs_residual <= 1e-12
    report = check_riemann_fe([complex(-0.5)], 1e-9, P)
    assert report.points[0].abs_residual <= 1e-9


def test_via_u_agreement_examples():
    grid = small_grid([complex(0.5, 1.0)], [0.25])
    report = check_via_u_agreement(grid, 1e-6)
    assert report.passed
    assert report.points[0].abs_residual <= 1e-6
    # s = 0: the frequency sum carries a factor s and drops out
    grid = small_grid([complex(0.0)], [0.75])
    report = check_via_u_agreement(grid, 1e-6)
    assert report.points[0].abs_residual <= 1e-8


def test_via_u_agreement_z_one_fails_gracefully():
    grid = small_grid([complex(2.0)], [1.0])
    report = check_via_u_agreement(grid, 1e-6)
    assert not report.passed
    assert report.points[0].error is not None


def test_connection_check_deterministic_and_passing():
    rep1 = check_connection(40, 42, 1e-8, P, triples=connection_special_triples())
    rep2 = check_connection(40, 42, 1e-8, P, triples=connection_special_triples())
    assert rep1.passed
    assert len(rep1.points) == 45
    assert [p.abs_residual for p in rep1.points] == [p.abs_residual for p in rep2.points]


def test_connection_check_forced_pole_degrades():
    report = check_connection(0, 1, 1e-8, P, triples=[(1.0, 2.0, 1.0)])
    assert not report.passed
    assert report.points[0].error is not None
    assert "PoleError" in report.points[0].error


def test_vanishing_identity_gated_and_diagnostic():
    grid = small_grid([complex(-2.0), complex(-1.5)], [0.5, 0.25])
    report = check_vanishing_identity(grid, 1e-8)
    assert report.passed
    for p in report.points:
        assert p.abs_residual <= 1e-8
        diag = complex(*p.extra["diagnostic_value"])
        # ungated, but in practice the sawtooth route vanishes too
        assert abs(diag) <= 1e-7
        assert p.extra["diagnostic_quad_bound"] >= 0.0


def test_asymptotics_check():
    report = check_asymptotics(
        [(1.0, 0.5), (1.0, 2.0)], [10.0, 100.0, 1000.0], P
    )
    assert report.passed
    exact = [p for p in report.points if p.extra.get("exact_law")]
    assert len(exact) == 1
    with pytest.raises(DomainError):
        check_asymptotics([(1.0, 0.5)], [], P)


def test_fourier_check():
    report = check_fourier((0.05, 0.3, 0.5), (16, 64, 256, 1024, 4096), 1e-6, P)
    assert report.passed
    assert report.details["monotone"]
    assert report.max_rel <= 1e-6


def test_run_suite_unknown_id():
    with pytest.raises(UnknownCheckId):
        run_suite(["bogus"], P)


def test_run_suite_empty():
    assert run_suite([], P) == []


def test_run_suite_selection_and_gates():
    reports = run_suite(["riemann-fe", "fourier"], P)
    assert [r.check_id for r in reports] == ["riemann-fe", "fourier"]
    assert all(r.passed for r in reports)
    # gate soundness: pass implies clean points and max_rel <= tol
    for r in reports:
        assert all(p.error is None for p in r.points)
        assert r.max_rel <= r.tolerance


def test_report_round_trip():
    reports = run_suite(["riemann-fe", "asymptotics"], P)
    text = reports_to_json(reports)
    back = reports_from_json(text)
    assert back == reports
    one = report_from_dict(report_to_dict(reports[0]))
    assert one == reports[0]


def test_reports_deterministic_modulo_timestamp():
    reports1 = run_suite(["riemann-fe", "connection", "fourier"], P, seed=42)
    reports2 = run_suite(["riemann-fe", "connection", "fourier"], P, seed=42)
    d1 = [report_to_dict(r) for r in reports1]
    d2 = [report_to_dict(r) for r in reports2]
    for d in d1 + d2:
        d.pop("timestamp")
    assert json.dumps(d1) == json.dumps(d2)


def test_csv_and_human_rendering():
    reports = run_suite(["riemann-fe"], P)
    csv_text = reports_to_csv(reports)
    lines = csv_text.strip().splitlines()
    assert lines[0].startswith("check_id,pass,tolerance")
    assert len(lines) == 1 + len(reports[0].points)
    human = render_human(reports)
    assert "[PASS] riemann-fe" in human


def test_grid_validation():
    with pytest.raises(DomainError):
        GridSpec((), (0.5,), P)
    with pytest.raises(DomainError):
        GridSpec((complex(-1.0),), (0.0,), P)
    with pytest.raises(DomainError):
        GridSpec((complex(-1.0),), (1.5,), P)
    with pytest.raises(DomainError):
        GridSpec((complex(1.0),), (0.5,), P)


def test_via_u_monotone_improvement_in_report():
    grid_small = GridSpec((complex(0.5),), (0.25,), replace(P, l_cap=500))
    grid_big = GridSpec((complex(0.5),), (0.25,), replace(P, l_cap=1000))
    rep_small = check_via_u_agreement(grid_small, 1e-6)
    rep_big = check_via_u_agreement(grid_big, 1e-6)
    allowance = rep_small.points[0].error_bound
    assert rep_big.max_abs <= rep_small.max_abs + allowance
