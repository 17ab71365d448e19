"""Command-line front end.

Every subcommand emits one machine-readable document, JSON (a single
top-level object with "params", "results", "diagnostics") or CSV, with
floats capped at 15 significant digits so identical inputs produce
byte-identical output. Exit status encodes the failing check:

    0  all requested checks passed
    2  invalid parameters or usage
    3  eigenvalue-condition residual out of tolerance
    4  operator-identity residual out of tolerance
    5  sharpness witness outside 2 percent of 1/2
    6  coefficient-product scan found violations

The --threads flag must take effect before the numerics libraries are
first imported, so all compute imports happen inside the dispatcher.
"""
import argparse
import os
import sys

_THREAD_VARS = ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS",
                "NUMEXPR_NUM_THREADS", "VECLIB_MAXIMUM_THREADS")


def _set_threads(argv):
    # runs before any numpy import; BLAS pools are sized at first import
    if "--threads" in argv:
        k = argv.index("--threads")
        if k + 1 < len(argv) and argv[k + 1].isdigit():
            for var in _THREAD_VARS:
                os.environ[var] = argv[k + 1]


def _parse_grid(text: str):
    try:
        lo, hi, step = (float(p) for p in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError("grid must be lo:hi:step")
    if step <= 0 or hi < lo:
        raise argparse.ArgumentTypeError("grid must have step > 0 and hi >= lo")
    count = int((hi - lo) / step + 1e-9) + 1
    vals = [lo + k * step for k in range(count)]
    return [0.0 if abs(v) < 1e-9 * step else v for v in vals]


def _parse_axes(text: str):
    parts = [float(p) for p in text.split(",")]
    if len(parts) != 3 or any(p <= 0 for p in parts):
        raise argparse.ArgumentTypeError("axes must be a1,a2,a3 > 0")
    return tuple(parts)


def _parse_sign(s: str) -> int:
    return {"plus": 1, "minus": -1}[s]


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="diracshell",
        description="Shell-coupled Dirac operator: sphere modes, eigenvalue "
                    "curves, surface discretizations, confinement criterion.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p, fmt_default="json"):
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=("json", "csv"), default=fmt_default)
        p.add_argument("--threads", type=int, help="BLAS/OpenMP thread count")

    p = sub.add_parser("modes", help="d and |p| coefficient table")
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--jmax", type=int, default=7, help="largest twice-j")
    common(p)

    p = sub.add_parser("curve", help="eigenvalue curve over a coupling grid")
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--j", type=int, default=1, help="twice-j")
    p.add_argument("--sign", choices=("plus", "minus"), default="plus")
    p.add_argument("--a-grid", type=_parse_grid, required=True, metavar="LO:HI:STEP")
    common(p, fmt_default="csv")

    p = sub.add_parser("intervals", help="admissible lambda intervals")
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--j", type=int, default=1, help="twice-j")
    p.add_argument("--sign", choices=("plus", "minus", "both"), default="both")
    common(p)

    p = sub.add_parser("eigen", help="eigendensity for a condition root")
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--j", type=int, default=1, help="twice-j")
    p.add_argument("--mj", type=int, default=1, help="twice-m_j")
    p.add_argument("--sign", choices=("plus", "minus"), default="plus")
    p.add_argument("--lambda", dest="lam", type=float,
                   help="coupling (default: the positive condition root)")
    common(p)

    p = sub.add_parser("surface", help="discretize on a surface and report residuals")
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--lambda", dest="lam", type=float, default=2.0)
    p.add_argument("--n-theta", type=int, default=24)
    p.add_argument("--axes", type=_parse_axes, default=(1.0, 1.0, 1.0),
                   metavar="A1,A2,A3")
    common(p)

    p = sub.add_parser("confine", help="confinement test for shell couplings")
    p.add_argument("--lambda-e", type=float, required=True)
    p.add_argument("--lambda-s", type=float, required=True)
    p.add_argument("--check-surface", action="store_true",
                   help="also compute the discrete criterion residual")
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--n-theta", type=int, default=24)
    common(p)

    p = sub.add_parser("riesz", help="massless-limit sharpness witness")
    p.add_argument("--n-theta", type=int, default=24)
    common(p)

    p = sub.add_parser("scan-ques", help="coefficient-product monotonicity scan")
    p.add_argument("--kappa-grid", type=_parse_grid, default=None, metavar="LO:HI:STEP")
    p.add_argument("--jmax", type=int, default=399, help="largest twice-j")
    common(p)

    p = sub.add_parser("report", help="render figures and data files")
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--threads", type=int)
    return ap


def _flatten(d, prefix=""):
    out = []
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.extend(_flatten(v, key + "."))
        else:
            out.append((key, v))
    return out


def _emit(args, payload, table=None) -> None:
    from .serialize import dump_csv, dump_json
    if args.format == "csv":
        if table is None:
            flat = _flatten(payload["results"])
            text = dump_csv([k for k, _ in flat], [[v for _, v in flat]])
        else:
            text = dump_csv(table[0], table[1])
    else:
        text = dump_json(payload)
    if args.out:
        from .serialize import write_text
        write_text(args.out, text)
    else:
        sys.stdout.write(text)


def _cmd_modes(args):
    from . import modes
    from .kernels import SpectralParams
    if abs(args.a) >= args.m:
        print("error: require |a| < m", file=sys.stderr)
        return 2
    par = SpectralParams(args.m, args.a)
    rows = []
    for j2 in range(1, args.jmax + 1, 2):
        mc = modes.mode_coefficients(j2, par.kappa)
        rows.append((j2, mc.d_minus, mc.d_plus, mc.p_abs))
    payload = {
        "params": {"m": args.m, "a": args.a, "jmax2": args.jmax},
        "results": {"rows": [
            {"j2": r[0], "d_minus": r[1], "d_plus": r[2], "p_abs": r[3]}
            for r in rows]},
        "diagnostics": {"kappa": par.kappa,
                        "min_p_listed": min(r[3] for r in rows)},
    }
    _emit(args, payload, (("j2", "d_minus", "d_plus", "p_abs"), rows))
    return 0


def _cmd_curve(args):
    from . import eigen
    sign = _parse_sign(args.sign)
    try:
        curve = eigen.trace_curve(args.m, args.j, sign, args.a_grid)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rows = list(zip(curve.a, curve.lam, curve.residual))
    max_res = float(max(abs(r) for _, _, r in rows))
    payload = {
        "params": {"m": args.m, "j2": args.j, "sign": sign,
                   "a_grid": list(args.a_grid)},
        "results": {"samples": [
            {"a": a, "lambda": l, "residual": r} for a, l, r in rows]},
        "diagnostics": {"max_residual": max_res,
                        "lambda_range": [float(curve.lam.min()),
                                         float(curve.lam.max())]},
    }
    _emit(args, payload, (("a", "lambda", "residual"), rows))
    return 0 if max_res < 1e-10 else 3


def _cmd_intervals(args):
    from . import eigen
    signs = (1, -1) if args.sign == "both" else (_parse_sign(args.sign),)
    rows = []
    for s in signs:
        lo, hi = eigen.admissible_interval(args.m, args.j, s)
        rows.append((args.j, s, lo, hi))
    payload = {
        "params": {"m": args.m, "j2": args.j},
        "results": {"intervals": [
            {"j2": j2, "sign": s, "lo": lo, "hi": hi} for j2, s, lo, hi in rows]},
        "diagnostics": {"union_lo": min(r[2] for r in rows),
                        "union_hi": max(r[3] for r in rows)},
    }
    _emit(args, payload, (("j2", "sign", "lo", "hi"), rows))
    return 0


def _cmd_eigen(args):
    from . import eigen
    from .kernels import SpectralParams
    if abs(args.a) >= args.m:
        print("error: require |a| < m", file=sys.stderr)
        return 2
    par = SpectralParams(args.m, args.a)
    sign = _parse_sign(args.sign)
    lam = args.lam
    if lam is None:
        lam = eigen.solve_lambda(args.m, args.a, args.j, sign)[0]
    try:
        dens = eigen.construct_eigendensity(args.j, args.mj, sign, par, lam)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    q = eigen.EigenQuery(args.m, args.a, args.j, sign, lam)
    res = eigen.condition_residual(q)
    v = dens.coefficient_vector()
    import numpy as np
    act = eigen.mode_block(args.j, sign, par) @ v + v / lam
    payload = {
        "params": {"m": args.m, "a": args.a, "j2": args.j, "mj2": args.mj,
                   "sign": sign, "lambda": lam},
        "results": {"lambda": lam,
                    "f_coeff": complex(dens.f_coeff),
                    "condition_residual": res,
                    "isospectral_partner": eigen.isospectral_partner(lam)},
        "diagnostics": {"block_action_residual":
                        float(np.linalg.norm(act) / np.linalg.norm(v))},
    }
    _emit(args, payload)
    return 0


def _cmd_surface(args):
    from . import operators, surfaces
    from .kernels import SpectralParams
    if abs(args.a) > args.m or args.lam == 0:
        print("error: require |a| <= m and lambda != 0", file=sys.stderr)
        return 2
    par = SpectralParams(args.m, args.a)
    surf = surfaces.make_ellipsoid(args.axes, args.n_theta)
    op = operators.assemble_C(par, surf).to_weighted(inplace=True)
    basis = operators.resolved_basis(surf)
    jump = operators.jump_residual(op, basis)
    smin = operators.smallest_singular(op, args.lam, basis)
    norm = operators.operator_norm(op)
    candidate = smin < 10.0 * jump
    message = ("eigenvalue candidate at this lambda"
               if candidate else "no eigenvalue indicated")
    payload = {
        "params": {"m": args.m, "a": args.a, "lambda": args.lam,
                   "n_theta": args.n_theta, "axes": list(args.axes)},
        "results": {"sigma_min": smin, "jump_residual": jump, "norm": norm},
        "diagnostics": {"kernel_candidate": candidate, "message": message,
                        "n_nodes": surf.n_nodes,
                        "detection_threshold": 10.0 * jump},
    }
    _emit(args, payload)
    return 0 if jump < 0.5 else 4


def _cmd_confine(args):
    from . import confinement
    try:
        cpl = confinement.CouplingSpec(args.lambda_e, args.lambda_s)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    results = {
        "scalar": confinement.confinement_scalar(cpl),
        "confining": confinement.is_confining(cpl),
        "selfadjoint": confinement.is_selfadjoint_regime(cpl),
    }
    diagnostics = {"denominator": cpl.denominator}
    if args.check_surface:
        from . import operators, surfaces
        from .kernels import SpectralParams
        surf = surfaces.make_sphere(args.n_theta)
        op = operators.assemble_C(SpectralParams(args.m, args.a),
                                  surf).to_weighted(inplace=True)
        basis = operators.resolved_basis(surf)
        results["residual"] = confinement.criterion_residual(
            op, coupling=cpl, basis=basis)
        diagnostics["jump_residual"] = operators.jump_residual(op, basis)
    payload = {
        "params": {"lambda_e": args.lambda_e, "lambda_s": args.lambda_s,
                   "m": args.m, "a": args.a},
        "results": results,
        "diagnostics": diagnostics,
    }
    _emit(args, payload)
    return 0


def _cmd_riesz(args):
    from . import modes, operators, surfaces
    surf = surfaces.make_sphere(args.n_theta)
    smin, smax = operators.riesz_spectrum(surf)
    c_spinor, c_field = modes.riesz_constants()
    ok = abs(smin - 0.5) <= 0.01
    payload = {
        "params": {"n_theta": args.n_theta},
        "results": {"witness": smin, "sigma_max": smax},
        "diagnostics": {"constants": {"spinor_bound": c_spinor,
                                      "field_bound": c_field},
                        "within_2pct": ok},
    }
    _emit(args, payload)
    return 0 if ok else 5


def _cmd_scan_ques(args):
    from . import modes
    grid = args.kappa_grid
    if grid is None:
        grid = [round(0.1 * k, 10) for k in range(1, 51)]
    try:
        viol = modes.scan_question(grid, args.jmax)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rows = []
    diag = []
    for kap in grid:
        mp = modes.min_p(float(kap), args.jmax)
        mf = modes.m_formula(float(kap))
        rows.append((kap, len(viol[float(kap)]), mp.M, mp.j2_argmin, mf))
        diag.append({"kappa": kap, "M": mp.M, "j2_argmin": mp.j2_argmin,
                     "m_formula": mf,
                     "formula_agreement": abs(mp.M - mf) if mp.j2_argmin == 1 else None,
                     "certified_tail": mp.certified_tail})
    total = sum(len(v) for v in viol.values())
    payload = {
        "params": {"kappa_grid": list(grid), "jmax2": args.jmax},
        "results": {"violations": {format(k, ".15g"): v for k, v in viol.items()},
                    "total_violations": total},
        "diagnostics": {"per_kappa": diag},
    }
    _emit(args, payload,
          (("kappa", "n_violations", "M", "j2_argmin", "m_formula"), rows))
    return 0 if total == 0 else 6


def _cmd_report(args):
    from .report import render_report
    from .serialize import dump_json
    summary = render_report(args.out, m=args.m)
    sys.stdout.write(dump_json({"params": {"m": args.m, "out": args.out},
                                "results": summary,
                                "diagnostics": {}}))
    return 0


_DISPATCH = {
    "modes": _cmd_modes,
    "curve": _cmd_curve,
    "intervals": _cmd_intervals,
    "eigen": _cmd_eigen,
    "surface": _cmd_surface,
    "confine": _cmd_confine,
    "riesz": _cmd_riesz,
    "scan-ques": _cmd_scan_ques,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    _set_threads(argv)
    args = _build_parser().parse_args(argv)
    return _DISPATCH[args.cmd](args)


if __name__ == "__main__":
    sys.exit(main())
