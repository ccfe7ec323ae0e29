"""Serialization of residual reports: JSON, CSV, and human-readable text.

The JSON schema is stable:

    {check_id, pass, tolerance, max_abs_residual, max_rel_residual,
     params, points: [{s: [re,im] | null, z, lhs: [re,im], rhs: [re,im],
     abs_residual, rel_residual, error_bound, ...}], timestamp, details}

Points that failed carry an "error" string; check-specific payload rides
in "extra".  CSV flattens the same fields, one row per point.  Reports
round-trip: report_from_dict(report_to_dict(r)) == r up to the list/tuple
distinction handled here.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict

from .confluent import ConfluentParams
from .numerics import QuadratureSpec
from .verify import PointResult, ResidualReport
from .zeta import EvalParams

__all__ = [
    "params_to_dict",
    "params_from_dict",
    "report_to_dict",
    "report_from_dict",
    "reports_to_json",
    "reports_from_json",
    "reports_to_csv",
    "render_human",
]

_CSV_FIELDS = (
    "check_id",
    "pass",
    "tolerance",
    "max_abs_residual",
    "max_rel_residual",
    "timestamp",
    "point_index",
    "s_re",
    "s_im",
    "z",
    "lhs_re",
    "lhs_im",
    "rhs_re",
    "rhs_im",
    "abs_residual",
    "rel_residual",
    "error_bound",
    "point_error",
    "extra",
)


def _c2l(value: complex | None):
    if value is None:
        return None
    return [value.real, value.imag]


def _l2c(value):
    if value is None:
        return None
    return complex(value[0], value[1])


def _num_out(x: float):
    """Keep emitted JSON RFC-valid: inf/nan ride as strings."""
    if x == x and abs(x) != float("inf"):
        return x
    return repr(x)


def _num_in(x) -> float:
    return float(x)


def params_to_dict(params: EvalParams) -> dict:
    return asdict(params)


def params_from_dict(data: dict) -> EvalParams:
    quad = QuadratureSpec(**data["quad"])
    conf = dict(data["confluent"])
    conf["quad"] = QuadratureSpec(**conf["quad"])
    return EvalParams(
        em_order=data["em_order"],
        em_shift=data["em_shift"],
        series_cap=data["series_cap"],
        l_cap=data["l_cap"],
        tol_abs=data["tol_abs"],
        quad=quad,
        confluent=ConfluentParams(**conf),
    )


def _point_to_dict(point: PointResult) -> dict:
    out = {
        "s": _c2l(point.s),
        "z": point.z,
        "lhs": _c2l(point.lhs),
        "rhs": _c2l(point.rhs),
        "abs_residual": _num_out(point.abs_residual),
        "rel_residual": _num_out(point.rel_residual),
        "error_bound": _num_out(point.error_bound),
    }
    if point.error is not None:
        out["error"] = point.error
    if point.extra:
        out["extra"] = point.extra
    return out


def _point_from_dict(data: dict) -> PointResult:
    return PointResult(
        s=_l2c(data["s"]),
        z=data["z"],
        lhs=_l2c(data["lhs"]),
        rhs=_l2c(data["rhs"]),
        abs_residual=_num_in(data["abs_residual"]),
        rel_residual=_num_in(data["rel_residual"]),
        error_bound=_num_in(data["error_bound"]),
        extra=data.get("extra", {}),
        error=data.get("error"),
    )


def report_to_dict(report: ResidualReport) -> dict:
    return {
        "check_id": report.check_id,
        "pass": report.passed,
        "tolerance": report.tolerance,
        "max_abs_residual": report.max_abs,
        "max_rel_residual": report.max_rel,
        "params": params_to_dict(report.params_echo),
        "points": [_point_to_dict(p) for p in report.points],
        "timestamp": report.timestamp,
        "details": report.details,
    }


def report_from_dict(data: dict) -> ResidualReport:
    return ResidualReport(
        check_id=data["check_id"],
        tolerance=data["tolerance"],
        points=[_point_from_dict(p) for p in data["points"]],
        max_abs=data["max_abs_residual"],
        max_rel=data["max_rel_residual"],
        passed=data["pass"],
        params_echo=params_from_dict(data["params"]),
        timestamp=data["timestamp"],
        details=data.get("details", {}),
    )


def reports_to_json(reports) -> str:
    return json.dumps([report_to_dict(r) for r in reports], indent=2) + "\n"


def reports_from_json(text: str):
    return [report_from_dict(d) for d in json.loads(text)]


def _fmt(value) -> str:
    if value is None:
        return ""
    return repr(value)


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_FIELDS)
    for report in reports:
        for idx, p in enumerate(report.points):
            writer.writerow(
                [
                    report.check_id,
                    report.passed,
                    _fmt(report.tolerance),
                    _fmt(report.max_abs),
                    _fmt(report.max_rel),
                    report.timestamp,
                    idx,
                    _fmt(p.s.real if p.s is not None else None),
                    _fmt(p.s.imag if p.s is not None else None),
                    _fmt(p.z),
                    _fmt(p.lhs.real),
                    _fmt(p.lhs.imag),
                    _fmt(p.rhs.real),
                    _fmt(p.rhs.imag),
                    _fmt(p.abs_residual),
                    _fmt(p.rel_residual),
                    _fmt(p.error_bound),
                    p.error or "",
                    json.dumps(p.extra, sort_keys=True) if p.extra else "",
                ]
            )
    return buf.getvalue()


def render_human(reports) -> str:
    lines = []
    for report in reports:
        verdict = "PASS" if report.passed else "FAIL"
        lines.append(
            f"[{verdict}] {report.check_id}: max_rel={report.max_rel:.3e} "
            f"max_abs={report.max_abs:.3e} tol={report.tolerance:.1e} "
            f"points={len(report.points)}"
        )
        failures = [p for p in report.points if p.error is not None]
        for p in failures:
            lines.append(f"    point s={p.s} z={p.z}: {p.error}")
        if report.check_id == "fourier" and report.details:
            pairs = zip(report.details["ladder"], report.details["ladder_max_errors"])
            ladder = ", ".join(f"{n}:{e:.2e}" for n, e in pairs)
            lines.append(f"    ladder {ladder}")
        if report.check_id == "vanishing":
            worst = max(
                (abs(complex(*p.extra["diagnostic_value"]))
                 for p in report.points if "diagnostic_value" in p.extra),
                default=0.0,
            )
            lines.append(f"    diagnostic (ungated) worst |value| = {worst:.3e}")
    return "\n".join(lines) + "\n"
