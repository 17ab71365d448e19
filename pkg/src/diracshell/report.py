"""Rendered summary of the sphere computations: figures plus data files.

Produces the eigenvalue curves over the coupling window with their
admissible bands, the refinement decay of the operator-identity
residuals, and the massless-limit sharpness witness spectrum. Every
figure is paired with the CSV it was drawn from and a JSON summary, so
downstream checks never have to scrape pixels.
"""
import os
import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .kernels import SpectralParams
from . import eigen, modes, operators, surfaces
from .serialize import dump_csv, dump_json, round15, write_text


def _eigencurve_figure(outdir: str, m: float, grid_points: int):
    a = np.linspace(-m, m, grid_points + 2)[1:-1]
    rows = []
    fig, ax = plt.subplots(figsize=(6.4, 4.6))
    colors = {1: "tab:blue", -1: "tab:orange"}
    intervals = {}
    for sign, label in ((1, "s = +1"), (-1, "s = -1")):
        curve = eigen.trace_curve(m, 1, sign, a)
        lo, hi = eigen.admissible_interval(m, 1, sign)
        intervals[sign] = (lo, hi)
        ax.plot(curve.a, curve.lam, color=colors[sign], label=label)
        ax.axhline(lo, color=colors[sign], ls="--", lw=0.8, alpha=0.6)
        ax.axhline(hi, color=colors[sign], ls="--", lw=0.8, alpha=0.6)
        for ai, li, ri in zip(curve.a, curve.lam, curve.residual):
            rows.append((sign, ai, li, ri))
    ax.set_xlabel("coupling strength a")
    ax.set_ylabel("eigenvalue lambda")
    ax.set_title(f"j = 1/2 eigenvalue curves, m = {m:g}")
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    png = os.path.join(outdir, "eigencurves.png")
    fig.savefig(png, dpi=150)
    plt.close(fig)
    csv = os.path.join(outdir, "eigencurves.csv")
    write_text(csv, dump_csv(("sign", "a", "lambda", "residual"), rows))
    return png, csv, intervals


def _refinement_figure(outdir: str, m: float, resolutions, jmax2: int):
    par = SpectralParams(m, 0.0)
    lam = eigen.solve_lambda(m, 0.0, 1, 1)[0]
    rows = []
    for n in resolutions:
        surf = surfaces.make_sphere(n)
        basis = operators.resolved_basis(surf, jmax2)
        opC = operators.assemble_C(par, surf).to_weighted(inplace=True)
        jump = operators.jump_residual(opC, basis)
        smin = operators.smallest_singular(opC, lam, basis)
        del opC
        opK = operators.assemble_K(par, surf).to_weighted(inplace=True)
        opW = operators.assemble_W(par, surf).to_weighted(inplace=True)
        anti = operators.anticommutator_residual(opK, opW, basis)
        rows.append((n, jump, anti, smin))
    arr = np.array(rows, dtype=float)
    fig, ax = plt.subplots(figsize=(6.4, 4.6))
    ax.loglog(arr[:, 0], arr[:, 1], "o-", label="jump identity")
    ax.loglog(arr[:, 0], arr[:, 2], "s-", label="anticommutator")
    ax.loglog(arr[:, 0], arr[:, 3], "^-", label="sigma_min on curve")
    ref = arr[0, 1] * (arr[:, 0] / arr[0, 0]) ** (-2.0)
    ax.loglog(arr[:, 0], ref, "k:", lw=0.8, label="order 2 guide")
    ax.set_xlabel("n_theta")
    ax.set_ylabel("residual")
    ax.set_title("identity residuals under refinement")
    ax.legend()
    ax.grid(alpha=0.3, which="both")
    fig.tight_layout()
    png = os.path.join(outdir, "refinement.png")
    fig.savefig(png, dpi=150)
    plt.close(fig)
    csv = os.path.join(outdir, "refinement.csv")
    write_text(csv, dump_csv(("n_theta", "jump_residual", "anticommutator",
                              "sigma_min_on_curve"), rows))
    return png, csv, rows


def _witness_figure(outdir: str, n_theta: int, jmax2: int):
    surf = surfaces.make_sphere(n_theta)
    s = operators.riesz_singular_values(surf, jmax2)
    fig, ax = plt.subplots(figsize=(6.4, 4.6))
    ax.plot(np.arange(1, s.size + 1), np.sort(s), ".")
    ax.axhline(0.5, color="k", ls="--", lw=0.8, label="sharp constant 1/2")
    ax.set_xlabel("mode index")
    ax.set_ylabel("singular value")
    ax.set_title(f"massless-limit witness spectrum, n_theta = {n_theta}")
    ax.set_ylim(0.4, 0.6)
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    png = os.path.join(outdir, "witness.png")
    fig.savefig(png, dpi=150)
    plt.close(fig)
    csv = os.path.join(outdir, "witness.csv")
    write_text(csv, dump_csv(("index", "sigma"),
                             [(k + 1, v) for k, v in enumerate(np.sort(s))]))
    return png, csv, (float(s.min()), float(s.max()))


def render_report(outdir: str, m: float = 1.0, resolutions=(12, 16, 24),
                  grid_points: int = 201, jmax2: int = 7) -> dict:
    """Render all figures and data files into outdir; returns a summary."""
    os.makedirs(outdir, exist_ok=True)
    curves_png, curves_csv, intervals = _eigencurve_figure(outdir, m, grid_points)
    ref_png, ref_csv, ref_rows = _refinement_figure(outdir, m, resolutions, jmax2)
    wit_png, wit_csv, wit_range = _witness_figure(outdir, max(resolutions), jmax2)
    summary = {
        "files": {
            "eigencurves": [os.path.basename(curves_png), os.path.basename(curves_csv)],
            "refinement": [os.path.basename(ref_png), os.path.basename(ref_csv)],
            "witness": [os.path.basename(wit_png), os.path.basename(wit_csv)],
        },
        "intervals": {
            "upper_sign": [round15(intervals[1][0]), round15(intervals[1][1])],
            "lower_sign": [round15(intervals[-1][0]), round15(intervals[-1][1])],
        },
        "refinement": [
            {"n_theta": int(n), "jump_residual": round15(j),
             "anticommutator": round15(an), "sigma_min_on_curve": round15(sm)}
            for n, j, an, sm in ref_rows
        ],
        "witness_range": [round15(wit_range[0]), round15(wit_range[1])],
    }
    write_text(os.path.join(outdir, "summary.json"), dump_json(summary))
    return summary
