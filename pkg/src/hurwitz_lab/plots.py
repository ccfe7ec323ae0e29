"""Figure rendering for reports and sweeps.

Figures are written straight to files (Agg backend), one per report:
per-point relative residuals on a log scale against the gate line, and
for sweeps the real/imaginary traces over the s grid.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

__all__ = ["save_report_figure", "save_sweep_figure"]

_FLOOR = 1e-18


def save_report_figure(report, path) -> Path:
    """Residual scatter for one report; returns the written path."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    xs, ys, bad_xs = [], [], []
    for i, p in enumerate(report.points):
        if p.error is None:
            xs.append(i)
            ys.append(max(p.rel_residual, _FLOOR))
        else:
            bad_xs.append(i)
    if xs:
        ax.semilogy(xs, ys, "o", ms=4, color="#1f6fb4", label="rel residual")
    for x in bad_xs:
        ax.axvline(x, color="#c23b22", lw=0.8, alpha=0.6)
    ax.axhline(report.tolerance, color="#444444", ls="--", lw=1.0,
               label=f"tolerance {report.tolerance:.0e}")
    ax.set_xlabel("point index")
    ax.set_ylabel("relative residual")
    verdict = "PASS" if report.passed else "FAIL"
    ax.set_title(f"{report.check_id} [{verdict}]  max_rel={report.max_rel:.2e}")
    ax.legend(loc="best", fontsize=9)
    ax.grid(True, which="both", alpha=0.25)
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)
    return path


def save_sweep_figure(rows, function: str, path) -> Path:
    """Value traces for sweep rows (s_re, s_im, z, re, im, bound)."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    z_values = sorted({row[2] for row in rows})
    for z in z_values:
        sel = [row for row in rows if row[2] == z]
        xs = [row[0] for row in sel]
        re_vals = [row[3] for row in sel]
        im_vals = [row[4] for row in sel]
        finite = [
            (x, r, i) for x, r, i in zip(xs, re_vals, im_vals)
            if not (math.isnan(r) or math.isnan(i))
        ]
        if not finite:
            continue
        xs, re_vals, im_vals = zip(*finite)
        ax.plot(xs, re_vals, "-o", ms=3, label=f"Re, z={z:g}")
        if any(abs(v) > 1e-14 for v in im_vals):
            ax.plot(xs, im_vals, "--s", ms=3, label=f"Im, z={z:g}")
    ax.set_xlabel("Re s")
    ax.set_ylabel("value")
    ax.set_title(f"sweep: {function}")
    ax.legend(loc="best", fontsize=8)
    ax.grid(True, alpha=0.25)
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)
    return path
