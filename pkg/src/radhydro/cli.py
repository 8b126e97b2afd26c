"""Command-line front end.

Subcommands:
  run         run a registered case, write snapshot CSVs and figures
  riemann     solve a single Riemann problem, write the sampled fan
  grp-probe   resolve one interface with slopes; print the derivatives
  converge    grid-refinement study on a smooth case
  sweep-f     scan gamma - 1 for the largest root of the convexity test
  list-cases  print the registered case names

Exit codes: 0 success, 2 bad usage or configuration, 3 solver failure,
4 unexpected internal error.  Failures print one line to stderr of the
form ``error: code=<n> kind=<ExceptionName> msg=<text>``.
"""

import argparse
import os
import sys

import numba
import numpy as np

from . import (cases, config, diagnostics, grp, output, plots, riemann,
               runners, thermo)
from .errors import ConfigError, RadHydroError
from .model import GasModel, PrimState

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_INTERNAL = 4


def _set_threads(n):
    numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))


def _triple(text, what):
    parts = [float(s) for s in text.split(",")]
    if len(parts) != 3:
        raise ValueError("%s needs exactly three comma-separated values"
                         % what)
    return parts


def _load_config(args):
    """Build a validated RunConfig from --config plus CLI overrides."""
    if getattr(args, "config", None):
        with open(args.config) as fh:
            text = fh.read()
    else:
        text = ""
    if getattr(args, "case", None):
        text += "\ncase = %s" % args.case
    cfg = config.parse_config(text)
    return config.with_overrides(
        cfg,
        scheme=getattr(args, "scheme", None),
        cells=getattr(args, "cells", None),
        nx=getattr(args, "nx", None),
        ny=getattr(args, "ny", None),
        theta=getattr(args, "theta", None),
        t_end=getattr(args, "t_end", None),
        directory=getattr(args, "out", None),
        threads=getattr(args, "threads", None))


def _cmd_list_cases(args):
    for name in cases.case_names():
        print(name)
    return EXIT_OK


def _cmd_run(args):
    cfg = _load_config(args)
    _set_threads(cfg.threads)
    case, sol = runners.run_case(cfg.case, scheme=cfg.scheme,
                                 cells=cfg.cells, nx=cfg.nx, ny=cfg.ny,
                                 theta=cfg.theta, cfl=cfg.cfl,
                                 t_end=cfg.t_end)
    outdir = cfg.directory
    os.makedirs(outdir, exist_ok=True)
    tag = "%s_%s" % (cfg.case, cfg.scheme)
    if isinstance(case, cases.Case1D):
        x = sol.grid.centers()
        output.write_profile_1d(os.path.join(outdir, tag + ".csv"),
                                x, sol.rho, sol.u, sol.ptot, sol.e)
        exact = None
        if case.exact is not None:
            exact = case.exact(x, sol.t)
            g, a = case.model.gamma, case.model.a_rad
            ee = thermo.e_from_rho_ptot(g, a, exact[0], exact[2])
            output.write_profile_1d(
                os.path.join(outdir, tag + "_exact.csv"),
                x, exact[0], exact[1], exact[2], ee)
        plots.profile_1d(os.path.join(outdir, tag + ".png"), x, sol,
                         exact=exact, title="%s (%s)" % (cfg.case,
                                                         cfg.scheme))
    else:
        x = sol.grid.xcenters()
        y = sol.grid.ycenters()
        output.write_fields_2d(
            os.path.join(outdir, tag + ".csv"), x, y,
            {"rho": sol.rho, "u": sol.u, "v": sol.v,
             "ptot": sol.ptot, "T": sol.T})
        nlev = 60 if cfg.case == "shock-cloud" else 30
        plots.contours_2d(os.path.join(outdir, tag + "_density.png"),
                          x, y, sol.rho, nlev, label="density",
                          title="%s density" % cfg.case)
        plots.contours_2d(os.path.join(outdir, tag + "_temperature.png"),
                          x, y, sol.T, nlev // 2, label="temperature",
                          title="%s temperature" % cfg.case)
        lx, lrho = runners.lineout_y(sol, sol.grid)
        output.write_csv(os.path.join(outdir, tag + "_lineout.csv"),
                         ("x", "rho"), zip(map(float, lx),
                                           map(float, lrho)))
    rel = _conservation_drift(sol)
    print("case=%s scheme=%s steps=%d t=%.17g conservation_drift=%.3e"
          % (cfg.case, cfg.scheme, sol.nsteps, sol.t, rel))
    return EXIT_OK


def _conservation_drift(sol):
    c0 = np.asarray(sol.conserved_initial, dtype=float)
    c1 = np.asarray(sol.conserved_final, dtype=float)
    scale = np.maximum(np.abs(c0), 1.0e-300)
    return float(np.max(np.abs(c1 - c0) / scale))


def _cmd_riemann(args):
    model = GasModel(gamma=args.gamma, a_rad=args.a_rad)
    left = PrimState(*_triple(args.left, "--left"))
    right = PrimState(*_triple(args.right, "--right"))
    fan = riemann.solve(model, left, right)
    print("left_wave=%s right_wave=%s p_star=%.17g u_star=%.17g "
          "rho_star_left=%.17g rho_star_right=%.17g iterations=%d"
          % (fan.left_wave, fan.right_wave, fan.p_star, fan.u_star,
             fan.rho_star_left, fan.rho_star_right, fan.iterations))
    if args.out:
        xi = np.linspace(args.xi_min, args.xi_max, args.samples)
        rho, u, p = fan.sample(xi)
        output.write_csv(args.out, ("xi", "rho", "u", "ptot"),
                         zip(map(float, xi), map(float, rho),
                             map(float, u), map(float, p)))
    return EXIT_OK


def _cmd_grp_probe(args):
    model = GasModel(gamma=args.gamma, a_rad=args.a_rad)
    left = PrimState(*_triple(args.left, "--left"))
    right = PrimState(*_triple(args.right, "--right"))
    dleft = tuple(_triple(args.dleft, "--dleft"))
    dright = tuple(_triple(args.dright, "--dright"))
    res = grp.solve_interface(model, left, dleft, right, dright)
    print("case_tag=%s left_wave=%s right_wave=%s" %
          (res.case, res.left_wave, res.right_wave))
    print("state rho=%.17g u=%.17g ptot=%.17g" % res.state)
    print("ddt drho_dt=%.17g du_dt=%.17g dptot_dt=%.17g" % res.ddt)
    rows = grp.interface_rows(model, left, dleft, right, dright)
    if rows is None:
        print("rows none")
    else:
        (aL, bL, dL), (aR, bR, dR) = rows
        print("row_left a=%.17g b=%.17g d=%.17g" % (aL, bL, dL))
        print("row_right a=%.17g b=%.17g d=%.17g" % (aR, bR, dR))
    return EXIT_OK


def _cmd_converge(args):
    cfg = _load_config(args)
    _set_threads(cfg.threads)
    levels = tuple(int(s) for s in args.levels.split(","))
    report = runners.convergence_for_case(cfg.case, scheme=cfg.scheme,
                                          levels=levels, theta=cfg.theta,
                                          cfl=cfg.cfl)
    os.makedirs(cfg.directory, exist_ok=True)
    tag = "%s_%s_convergence" % (cfg.case, cfg.scheme)
    path = output.write_convergence(
        os.path.join(cfg.directory, tag + ".csv"), report)
    plots.convergence(os.path.join(cfg.directory, tag + ".png"), report,
                      title="%s (%s)" % (cfg.case, cfg.scheme))
    for row in report.rows():
        print(",".join("" if v is None else "%.17g" % v if
                       isinstance(v, float) else str(v) for v in row))
    print("wrote %s" % path)
    return EXIT_OK


def _cmd_sweep_f(args):
    grid = np.arange(args.lo, args.hi + 0.5 * args.step, args.step)
    roots = diagnostics.max_zero_sweep(grid)
    if args.out:
        output.write_sweep(args.out, grid, roots)
        base, _ = os.path.splitext(args.out)
        plots.sweep_plot(base + ".png", grid, roots)
    first = diagnostics.first_gamma1_with_root(args.lo, args.hi)
    print("first_gamma1_with_root=%.12g" % first)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="radhydro",
        description="Radiation hydrodynamics solvers "
                    "(zero-diffusion limit).")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, with_case=True):
        sp.add_argument("--config", help="configuration file path")
        if with_case:
            sp.add_argument("--case", help="registered case name")
        sp.add_argument("--scheme", choices=config.SCHEMES)
        sp.add_argument("--theta", type=float)
        sp.add_argument("--threads", type=int)
        sp.add_argument("--out", help="output directory")

    sp = sub.add_parser("run", help="run a registered case")
    add_common(sp)
    sp.add_argument("--cells", type=int)
    sp.add_argument("--nx", type=int)
    sp.add_argument("--ny", type=int)
    sp.add_argument("--t-end", dest="t_end", type=float)
    sp.set_defaults(func=_cmd_run)

    sp = sub.add_parser("riemann", help="solve one Riemann problem")
    sp.add_argument("--config", help="unused; accepted for uniformity")
    sp.add_argument("--left", required=True, metavar="RHO,U,PTOT")
    sp.add_argument("--right", required=True, metavar="RHO,U,PTOT")
    sp.add_argument("--gamma", type=float, default=5.0 / 3.0)
    sp.add_argument("--a-rad", dest="a_rad", type=float, default=1.0)
    sp.add_argument("--out", help="CSV path for the sampled fan")
    sp.add_argument("--samples", type=int, default=501)
    sp.add_argument("--xi-min", dest="xi_min", type=float, default=-5.0)
    sp.add_argument("--xi-max", dest="xi_max", type=float, default=5.0)
    sp.set_defaults(func=_cmd_riemann)

    sp = sub.add_parser("grp-probe",
                        help="resolve one sloped interface")
    sp.add_argument("--config", help="unused; accepted for uniformity")
    sp.add_argument("--left", required=True, metavar="RHO,U,PTOT")
    sp.add_argument("--right", required=True, metavar="RHO,U,PTOT")
    sp.add_argument("--dleft", default="0,0,0", metavar="DRHO,DU,DPTOT")
    sp.add_argument("--dright", default="0,0,0", metavar="DRHO,DU,DPTOT")
    sp.add_argument("--gamma", type=float, default=5.0 / 3.0)
    sp.add_argument("--a-rad", dest="a_rad", type=float, default=1.0)
    sp.set_defaults(func=_cmd_grp_probe)

    sp = sub.add_parser("converge", help="grid-refinement study")
    add_common(sp)
    sp.add_argument("--levels", default="10,20,40,80,160,320")
    sp.set_defaults(func=_cmd_converge)

    sp = sub.add_parser("sweep-f",
                        help="scan for the convexity-test threshold")
    sp.add_argument("--config", help="unused; accepted for uniformity")
    sp.add_argument("--lo", type=float, default=14.0)
    sp.add_argument("--hi", type=float, default=20.0)
    sp.add_argument("--step", type=float, default=0.01)
    sp.add_argument("--out", help="CSV path for the sweep table")
    sp.set_defaults(func=_cmd_sweep_f)

    sp = sub.add_parser("list-cases", help="print registered case names")
    sp.add_argument("--config", help="unused; accepted for uniformity")
    sp.set_defaults(func=_cmd_list_cases)

    return p


def _fail(code, exc):
    msg = str(exc).replace("\n", " ")
    sys.stderr.write("error: code=%d kind=%s msg=%s\n"
                     % (code, type(exc).__name__, msg))
    return code


def cli(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ConfigError, ValueError, OSError) as exc:
        return _fail(EXIT_CONFIG, exc)
    except RadHydroError as exc:
        return _fail(EXIT_SOLVER, exc)
    except Exception as exc:
        return _fail(EXIT_INTERNAL, exc)


def main():
    sys.exit(cli())


if __name__ == "__main__":
    main()
