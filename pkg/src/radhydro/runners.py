"""Pipelines that connect the case registry to the solvers.

These are the functions the command-line front end calls; they are also
convenient for scripted use.
"""

import numpy as np

from . import cases, diagnostics, mesh1d, mesh2d


def resolve_theta(case, theta=None):
    return case.theta if theta is None else theta


def run_case(name, scheme="grp", cells=None, nx=None, ny=None,
             theta=None, cfl=0.45, t_end=None, on_step=None):
    """Run one registered case to its end time; returns (case, solution)."""
    case = cases.get_case(name)
    th = resolve_theta(case, theta)
    tend = case.t_end if t_end is None else t_end
    if isinstance(case, cases.Case1D):
        grid = mesh1d.Grid1D(case.x0, case.x1,
                             case.cells if cells is None else cells)
        rho, u, p = case.init(grid.centers())
        sol = mesh1d.run(case.model, grid, rho, u, p, tend, bc=case.bc,
                         scheme=scheme, cfl=cfl, theta=th, on_step=on_step)
    else:
        grid = mesh2d.Grid2D(case.x0, case.x1, case.y0, case.y1,
                             case.nx if nx is None else nx,
                             case.ny if ny is None else ny)
        X, Y = grid.meshgrid()
        rho, u, v, p = case.init(X, Y)
        sol = mesh2d.run(case.model, grid, rho, u, v, p, tend, bc=case.bc,
                         scheme=scheme, cfl=cfl, theta=th, on_step=on_step)
    return case, sol


def _exact_avgs_1d(case, grid, t):
    def rho_of_x(x):
        return case.exact(x, t)[0]
    return diagnostics.cell_average_1d(rho_of_x, grid.x0, grid.dx, grid.n)


def convergence_for_case(name, scheme="grp", levels=(10, 20, 40, 80, 160,
                                                     320),
                         theta=None, cfl=0.45):
    """Density-error convergence study on a smooth registered case."""
    case = cases.get_case(name)
    if case.exact is None:
        raise ValueError("case %r has no exact solution" % name)
    th = resolve_theta(case, theta)

    if isinstance(case, cases.Case1D):
        def run_level(n):
            grid = mesh1d.Grid1D(case.x0, case.x1, n)
            rho0 = diagnostics.cell_average_1d(
                lambda x: case.init(x)[0], grid.x0, grid.dx, n)
            _, u0, p0 = case.init(grid.centers())
            sol = mesh1d.run(case.model, grid, rho0, u0, p0, case.t_end,
                             bc=case.bc, scheme=scheme, cfl=cfl, theta=th)
            return sol.rho, _exact_avgs_1d(case, grid, sol.t)
    else:
        def run_level(n):
            grid = mesh2d.Grid2D(case.x0, case.x1, case.y0, case.y1, n, n)
            rho0 = diagnostics.cell_average_2d(
                lambda X, Y: case.init(X, Y)[0],
                grid.x0, grid.dx, n, grid.y0, grid.dy, n)
            X, Y = grid.meshgrid()
            _, u0, v0, p0 = case.init(X, Y)
            sol = mesh2d.run(case.model, grid, rho0, u0, v0, p0,
                             case.t_end, bc=case.bc, scheme=scheme,
                             cfl=cfl, theta=th)
            exact = diagnostics.cell_average_2d(
                lambda X, Y: case.exact(X, Y, sol.t),
                grid.x0, grid.dx, n, grid.y0, grid.dy, n)
            return sol.rho, exact

    return diagnostics.convergence_study(run_level, levels)


def lineout_y(sol, grid, y_value=0.5):
    """Extract the row of cells whose centers straddle y = y_value."""
    j = int(np.argmin(np.abs(grid.ycenters() - y_value)))
    return grid.xcenters(), sol.rho[:, j]
