"""Acceptance gate: every headline property at its stated tolerance.

One test per criterion; each prints a PASS/FAIL line (visible under
pytest -s, and one line per criterion appears in pytest -v regardless).
Run:  pytest tests/test_acceptance.py -v
"""

import json
import math
from dataclasses import replace

from hurwitz_lab.cli import main
from hurwitz_lab.confluent import ode_residual
from hurwitz_lab.verify import (
    DEFAULT_ASYMPTOTIC_PAIRS,
    DEFAULT_FOURIER_LADDER,
    DEFAULT_FOURIER_T,
    DEFAULT_MAGNITUDE_LADDER,
    DEFAULT_RELATION_S,
    DEFAULT_RELATION_Z,
    DEFAULT_VIA_U_S,
    DEFAULT_VIA_U_Z,
    GridSpec,
    check_asymptotics,
    check_connection,
    check_fourier,
    check_hurwitz_relation,
    check_riemann_fe,
    check_via_u_agreement,
    connection_special_triples,
)
from hurwitz_lab.zeta import (
    DEFAULT_PARAMS,
    hurwitz_direct,
    hurwitz_em,
    hurwitz_via_u,
    polylog_l,
    riemann_zeta,
)

P = DEFAULT_PARAMS
import random


def _verdict(number, name, ok, metric):
    line = f"ACCEPTANCE {number:2d} {name}: {'PASS' if ok else 'FAIL'} ({metric})"
    print(line)
    assert ok, line


def test_acceptance_01_hurwitz_relation():
    grid = GridSpec(DEFAULT_RELATION_S, DEFAULT_RELATION_Z, P)
    report = check_hurwitz_relation(grid, 1e-8)
    assert len(report.points) == 50
    _verdict(1, "hurwitz relation residual <= 1e-8 on 10x5 grid",
             report.passed and report.max_rel <= 1e-8,
             f"max_rel={report.max_rel:.3e}")


def test_acceptance_02_riemann_functional_equation():
    report = check_riemann_fe(
        [complex(-0.5), complex(-1.0), complex(-1.5), complex(-2.5)], 1e-9, P
    )
    trivial = check_riemann_fe([complex(-2.0)], 1e-12, P)
    ok = (report.passed and report.max_rel <= 1e-9
          and trivial.passed and trivial.max_abs <= 1e-12)
    _verdict(2, "functional equation <= 1e-9, trivial zero <= 1e-12",
             ok, f"max_rel={report.max_rel:.3e} zero={trivial.max_abs:.3e}")


def test_acceptance_03_u_sum_representation():
    params = replace(P, l_cap=10_000)
    grid = GridSpec(DEFAULT_VIA_U_S, DEFAULT_VIA_U_Z, params)
    report = check_via_u_agreement(grid, 1e-6)
    assert len(report.points) == 12
    _verdict(3, "u-sum route vs continuation <= 1e-6 at l_cap 1e4",
             report.passed and report.max_rel <= 1e-6,
             f"max_rel={report.max_rel:.3e}")


def test_acceptance_04_connection_formula():
    report = check_connection(100, 42, 1e-8, P,
                              triples=connection_special_triples())
    assert len(report.points) == 105
    _verdict(4, "connection formula residual <= 1e-8 (100 random + 5 special)",
             report.passed and report.max_rel <= 1e-8,
             f"max_rel={report.max_rel:.3e}")


def test_acceptance_05_asymptotic_decay():
    report = check_asymptotics(DEFAULT_ASYMPTOTIC_PAIRS,
                               DEFAULT_MAGNITUDE_LADDER, P)
    exact_pair = [p for p in report.points
                  if complex(*p.extra["gamma"]) == 2.0 and p.s == 1.0]
    exact_ok = bool(exact_pair) and all(
        r <= 1e-12 for r in exact_pair[0].extra["ratios"]
    )
    _verdict(5, "x^a U - 1 strictly decreasing on 10..1e4; exact law <= 1e-12",
             report.passed and exact_ok,
             f"violation={report.max_rel:.3e}")


def test_acceptance_06_ode_residual():
    rng = random.Random(606)
    worst = 0.0
    count = 0
    while count < 20:
        alpha = complex(rng.uniform(0.5, 2.5), rng.uniform(-0.5, 0.5))
        gamma_p = complex(rng.uniform(-1.5, 1.5), rng.uniform(-0.5, 0.5))
        if abs(gamma_p - round(gamma_p.real)) < 0.1:
            continue
        x = complex(rng.uniform(0.8, 4.0), 0.0)
        for kind in ("kummer", "tricomi"):
            worst = max(worst, ode_residual(kind, alpha, gamma_p, x, None, P.confluent))
        count += 1
    _verdict(6, "ODE residual <= 1e-6 for both solutions on 20 points",
             worst <= 1e-6, f"worst={worst:.3e}")


def test_acceptance_07_fourier_expansion():
    report = check_fourier(DEFAULT_FOURIER_T, DEFAULT_FOURIER_LADDER, 1e-6, P)
    assert len(DEFAULT_FOURIER_T) == 10
    _verdict(7, "cosine-series ladder decreasing, final <= 1e-6 at 10 t",
             report.passed and report.details["monotone"]
             and report.max_rel <= 1e-6,
             f"final={report.max_rel:.3e}")


def test_acceptance_08_euler_maclaurin_consistency():
    params = replace(P, tol_abs=1e-9, l_cap=2000)
    s_points = (complex(2.0), complex(3.0), complex(2.0, 3.0), complex(1.5, -2.0))
    z_points = (0.1, 0.25, 0.5, 0.75, 1.0)
    worst_pair = 0.0
    for s in s_points:
        for z in z_points:
            values = [hurwitz_em(s, z, params).value]
            if s.real > 1.0:
                values.append(hurwitz_direct(s, z, params).value)
            if z < 1.0:
                values.append(hurwitz_via_u(s, z, params).value)
            for i in range(len(values)):
                for j in range(i + 1, len(values)):
                    worst_pair = max(worst_pair, abs(values[i] - values[j]))
    ladder_ok = True
    for s in (complex(-0.5), complex(-2.5, 1.0)):
        vals = [hurwitz_em(s, 0.3, replace(P, em_order=m)).value for m in (4, 6, 8)]
        ladder_ok &= abs(vals[0] - vals[1]) <= 1e-9 and abs(vals[1] - vals[2]) <= 1e-9
    eps = 1e-4
    residue = abs(eps * hurwitz_em(1.0 + eps, 0.4, P).value - 1.0)
    ok = worst_pair <= 1e-7 and ladder_ok and residue <= 1e-3
    _verdict(8, "three-route <= 1e-7, order ladder <= 1e-9, residue -> 1",
             ok, f"routes={worst_pair:.3e} residue={residue:.3e}")


def test_acceptance_09_known_values():
    checks = [
        ("zeta(2,1)", hurwitz_direct(2.0, 1.0, replace(P, tol_abs=1e-11)).value,
         math.pi**2 / 6.0),
        ("zeta(2,1/2)", hurwitz_direct(2.0, 0.5, replace(P, tol_abs=1e-11)).value,
         math.pi**2 / 2.0),
        ("zeta(0,0.25)", hurwitz_em(0.0, 0.25, P).value, 0.25),
        ("zeta(0,0.75)", hurwitz_em(0.0, 0.75, P).value, -0.25),
        ("zeta(-1,1)", riemann_zeta(-1.0, P).value, -1.0 / 12.0),
        ("L(2,1/2)", polylog_l(2.0, 0.5, P).value, -math.pi**2 / 12.0),
    ]
    worst = max(abs(got - complex(want)) for _, got, want in checks)
    _verdict(9, "classical values reproduced to 1e-9",
             worst <= 1e-9, f"worst={worst:.3e}")


def test_acceptance_10_determinism(tmp_path):
    out1 = tmp_path / "run1.json"
    out2 = tmp_path / "run2.json"
    for out in (out1, out2):
        code = main(["verify", "all", "--format", "json",
                     "--seed", "42", "--out", str(out)])
        assert code == 0
    doc1 = json.loads(out1.read_text())
    doc2 = json.loads(out2.read_text())
    for doc in (doc1, doc2):
        for rep in doc:
            rep.pop("timestamp")
    identical = json.dumps(doc1, sort_keys=False) == json.dumps(doc2, sort_keys=False)
    _verdict(10, "verify all twice is byte-identical modulo timestamp",
             identical, f"checks={len(doc1)}")
