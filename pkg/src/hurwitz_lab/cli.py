"""Command-line interface: point evaluation, verification suites, and
grid sweeps with machine-readable output.

Exit codes: 0 success, 1 numerical or gated failure, 2 usage error.
Complex literals follow the grammar  [+-]a[+-]b i  (decimal only), e.g.
2, -0.5, 1+2i, -1.5-0.25i, i, -i, 2i.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from pathlib import Path

from . import plots, reporting, verify
from .confluent import kummer_m, tricomi_u
from .errors import HurwitzLabError
from .numerics import gamma
from .zeta import (
    DEFAULT_PARAMS,
    EvalParams,
    hurwitz_direct,
    hurwitz_em,
    hurwitz_via_u,
    polylog_l,
    riemann_zeta,
)

_DECIMAL = r"(?:\d+\.?\d*|\.\d+)"
_PART_RE = re.compile(rf"^[+-]?{_DECIMAL}$")

_EVAL_ARITY = {
    "zeta": 2,
    "zeta-direct": 2,
    "zeta-via-u": 2,
    "polylog": 2,
    "riemann": 1,
    "gamma": 1,
    "kummer": 3,
    "tricomi": 3,
}

_SWEEP_FUNCTIONS = ("zeta", "zeta-direct", "zeta-via-u", "polylog")


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse the shell-safe complex grammar [+-]a[+-]b i, decimal only."""
    t = text.strip().replace(" ", "")
    if not t:
        raise UsageError("empty complex literal")
    if not t.endswith("i"):
        if not _PART_RE.match(t):
            raise UsageError(f"malformed complex literal {text!r}")
        return complex(float(t), 0.0)
    body = t[:-1]
    re_part, im_part = "", body
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-" and body[k - 1] not in "+-":
            re_part, im_part = body[:k], body[k:]
            break
    if re_part and not _PART_RE.match(re_part):
        raise UsageError(f"malformed complex literal {text!r}")
    if im_part in ("", "+"):
        im_val = 1.0
    elif im_part == "-":
        im_val = -1.0
    elif _PART_RE.match(im_part):
        im_val = float(im_part)
    else:
        raise UsageError(f"malformed complex literal {text!r}")
    return complex(float(re_part) if re_part else 0.0, im_val)


def parse_range(text: str):
    """start:stop:count with count >= 1, evenly spaced inclusive."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"range must be start:stop:count, got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError as exc:
        raise UsageError(f"malformed range {text!r}") from exc
    if count < 1:
        raise UsageError("range count must be >= 1")
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + k * step for k in range(count)]


def format_complex(value: complex) -> str:
    if value.imag == 0.0:
        return repr(value.real)
    sign = "+" if value.imag >= 0 else "-"
    return f"{value.real!r}{sign}{abs(value.imag)!r}i"


def _build_params(args) -> EvalParams:
    params = DEFAULT_PARAMS
    if getattr(args, "l_cap", None):
        params = replace(params, l_cap=args.l_cap)
    if getattr(args, "em_order", None):
        params = replace(params, em_order=args.em_order)
    return params


def _eval_dispatch(function: str, values, params: EvalParams):
    """Returns (value, error_bound, route)."""
    if function == "zeta":
        res = hurwitz_em(values[0], values[1].real, params)
        return res.value, res.error, "euler-maclaurin"
    if function == "zeta-direct":
        res = hurwitz_direct(values[0], values[1].real, params)
        return res.value, res.error, "direct-series"
    if function == "zeta-via-u":
        res = hurwitz_via_u(values[0], values[1].real, params)
        return res.value, res.error, "u-sum"
    if function == "polylog":
        res = polylog_l(values[0], values[1].real, params)
        return res.value, res.error, "series+abel-tail"
    if function == "riemann":
        res = riemann_zeta(values[0], params)
        return res.value, res.error, "euler-maclaurin"
    if function == "gamma":
        value = gamma(values[0])
        return value, 1e-13 * abs(value), "lanczos-reflection"
    if function == "kummer":
        value = kummer_m(values[0], values[1], values[2], params.confluent)
        return value, 1e-13 * max(1.0, abs(value)), "kummer-series"
    if function == "tricomi":
        value = tricomi_u(values[0], values[1], values[2], params.confluent)
        route = "incomplete-gamma" if values[0] == 1 else "laplace-integral"
        bound = max(params.quad.target_abs_tol,
                    params.quad.target_rel_tol * abs(value))
        return value, bound, route
    raise UsageError(f"unknown function {function!r}")


def cmd_eval(args) -> int:
    function = args.function
    if function not in _EVAL_ARITY:
        print(f"error: unknown function {function!r}", file=sys.stderr)
        return 2
    if len(args.args) != _EVAL_ARITY[function]:
        print(
            f"error: {function} takes {_EVAL_ARITY[function]} argument(s), "
            f"got {len(args.args)}",
            file=sys.stderr,
        )
        return 2
    try:
        values = [parse_complex(a) for a in args.args]
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if function in ("zeta", "zeta-direct", "zeta-via-u", "polylog") and values[1].imag != 0.0:
        print("error: z must be a real literal in (0, 1]", file=sys.stderr)
        return 2
    params = _build_params(args)
    try:
        value, bound, route = _eval_dispatch(function, values, params)
    except HurwitzLabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OverflowError as exc:
        print(f"error: OverflowError: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps({
            "function": function,
            "value": [value.real, value.imag],
            "error_bound": bound,
            "route": route,
        }))
    else:
        print(f"value = {format_complex(value)}")
        print(f"error_bound = {bound:.3e}")
        print(f"route = {route}")
    return 0


def _load_grid_file(path: str):
    try:
        data = json.loads(Path(path).read_text())
        s_points = [
            complex(p[0], p[1]) if isinstance(p, (list, tuple)) else complex(p)
            for p in data["s_points"]
        ]
        z_points = [float(z) for z in data["z_points"]]
    except (OSError, ValueError, KeyError, TypeError, IndexError) as exc:
        raise UsageError(f"bad grid file {path!r}: {exc}") from exc
    return s_points, z_points


def cmd_verify(args) -> int:
    which = list(args.checks)
    if "all" in which:
        if len(which) != 1:
            print("error: 'all' cannot be combined with other check ids",
                  file=sys.stderr)
            return 2
        which = list(verify.CHECK_IDS)
    unknown = [c for c in which if c not in verify.CHECK_IDS]
    if unknown:
        print(f"error: unknown check id(s): {', '.join(unknown)}", file=sys.stderr)
        return 2
    s_points = z_points = None
    if args.grid_file:
        try:
            s_points, z_points = _load_grid_file(args.grid_file)
        except UsageError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    params = _build_params(args)
    tol_overrides = {c: args.tol for c in which} if args.tol else None
    try:
        reports = verify.run_suite(
            which, params, seed=args.seed, tol_overrides=tol_overrides,
            s_points=s_points, z_points=z_points,
        )
    except HurwitzLabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        payload = reporting.reports_to_json(reports)
    elif args.format == "csv":
        payload = reporting.reports_to_csv(reports)
    else:
        payload = reporting.render_human(reports)
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)
    if args.plot_dir:
        plot_dir = Path(args.plot_dir)
        plot_dir.mkdir(parents=True, exist_ok=True)
        for report in reports:
            plots.save_report_figure(report, plot_dir / f"{report.check_id}.png")
    return 0 if all(r.passed for r in reports) else 1


def _sweep_eval(function, s, z, params):
    try:
        if function == "zeta":
            res = hurwitz_em(s, z, params)
        elif function == "zeta-direct":
            res = hurwitz_direct(s, z, params)
        elif function == "zeta-via-u":
            res = hurwitz_via_u(s, z, params)
        else:
            res = polylog_l(s, z, params)
        return (s.real, s.imag, z, res.value.real, res.value.imag, res.error, None)
    except (HurwitzLabError, OverflowError) as exc:
        return (s.real, s.imag, z, math.nan, math.nan, math.inf,
                f"{type(exc).__name__}: {exc}")


def cmd_sweep(args) -> int:
    if args.function not in _SWEEP_FUNCTIONS:
        print(
            f"error: sweep supports {', '.join(_SWEEP_FUNCTIONS)} "
            f"(riemann is zeta with --z 1:1:1)",
            file=sys.stderr,
        )
        return 2
    try:
        s_re = parse_range(args.s_re)
        s_im = parse_range(args.s_im)
        z_vals = parse_range(args.z)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for z in z_vals:
        if not (0.0 < z <= 1.0):
            print(f"error: z = {z:g} outside (0, 1]", file=sys.stderr)
            return 2
    params = _build_params(args)
    grid = [
        (complex(re_, im_), z)
        for re_ in s_re
        for im_ in s_im
        for z in z_vals
    ]
    workers = int(os.environ.get("HURWITZ_LAB_THREADS", "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(
                lambda sz: _sweep_eval(args.function, sz[0], sz[1], params), grid
            ))
    else:
        rows = [_sweep_eval(args.function, s, z, params) for s, z in grid]

    failures = [r for r in rows if r[6] is not None]
    if args.format == "json":
        payload = json.dumps([
            {
                "s": [r[0], r[1]],
                "z": r[2],
                "value": [r[3], r[4]],
                "error_bound": r[5],
                "error": r[6],
            }
            for r in rows
        ], indent=2) + "\n"
    elif args.format == "human":
        lines = [f"sweep {args.function}: {len(rows)} points"]
        for r in rows:
            tag = f"  ERROR {r[6]}" if r[6] else ""
            lines.append(
                f"s=({r[0]:g},{r[1]:g}) z={r[2]:g} -> "
                f"({r[3]:.12g}, {r[4]:.12g}) +- {r[5]:.2e}{tag}"
            )
        payload = "\n".join(lines) + "\n"
    else:
        out = ["s_re,s_im,z,value_re,value_im,error_bound"]
        for r in rows:
            out.append(f"{r[0]!r},{r[1]!r},{r[2]!r},{r[3]!r},{r[4]!r},{r[5]!r}")
        payload = "\n".join(out) + "\n"
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)
    if args.plot_dir:
        plot_dir = Path(args.plot_dir)
        plot_dir.mkdir(parents=True, exist_ok=True)
        plots.save_sweep_figure(rows, args.function,
                                plot_dir / f"sweep_{args.function}.png")
    if failures:
        for r in failures[:10]:
            print(f"sweep point s=({r[0]:g},{r[1]:g}) z={r[2]:g} failed: {r[6]}",
                  file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz-lab",
        description=(
            "Hurwitz zeta / polylogarithm / confluent hypergeometric "
            "evaluation and identity verification"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at one point")
    p_eval.add_argument("function", help=f"one of {', '.join(_EVAL_ARITY)}")
    p_eval.add_argument("args", nargs="*", help="complex literals, e.g. 1.5-2i")
    p_eval.add_argument("--format", choices=("human", "json"), default="human")
    p_eval.add_argument("--l-cap", type=int, default=None)
    p_eval.add_argument("--em-order", type=int, default=None)

    p_verify = sub.add_parser("verify", help="run verification checks")
    p_verify.add_argument(
        "checks", nargs="+",
        help=f"check ids among: {', '.join(verify.CHECK_IDS)}, all",
    )
    p_verify.add_argument("--tol", type=float, default=None,
                          help="override the gate tolerance of the selected checks")
    p_verify.add_argument("--grid-file", default=None,
                          help="JSON {s_points: [[re,im]...], z_points: [...]}")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--format", choices=("human", "json", "csv"),
                          default="human")
    p_verify.add_argument("--out", default=None, help="write the report here")
    p_verify.add_argument("--plot-dir", default=None,
                          help="also render one residual figure per check")
    p_verify.add_argument("--l-cap", type=int, default=None)
    p_verify.add_argument("--em-order", type=int, default=None)

    p_sweep = sub.add_parser("sweep", help="evaluate a function over a grid")
    p_sweep.add_argument("--function", default="zeta")
    p_sweep.add_argument("--s-re", required=True, metavar="a:b:n")
    p_sweep.add_argument("--s-im", required=True, metavar="a:b:n")
    p_sweep.add_argument("--z", required=True, metavar="a:b:n")
    p_sweep.add_argument("--format", choices=("csv", "json", "human"),
                         default="csv")
    p_sweep.add_argument("--out", default=None)
    p_sweep.add_argument("--plot-dir", default=None,
                         help="also render the sweep traces")
    p_sweep.add_argument("--l-cap", type=int, default=None)
    p_sweep.add_argument("--em-order", type=int, default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            return cmd_eval(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_sweep(args)
    except HurwitzLabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
