"""One-dimensional finite-volume driver.

Schemes:
  grp     : second order; interface states and exact time derivatives from
            the piecewise-linear interface solver, slopes evolved with the
            solution and limited characteristically.
  muscl   : predictor-corrector baseline with exact Riemann fluxes.
  godunov : first order (zero slopes, exact Riemann interface states).
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as _k
from . import thermo
from .errors import InvalidStateError, raise_for_status
from .model import GasModel

NG = 2  # ghost cells on each side

_BC_CODES = {"outflow": 0, "periodic": 1}
SCHEMES = ("grp", "muscl", "godunov")


@dataclass(frozen=True)
class Grid1D:
    x0: float
    x1: float
    n: int

    @property
    def dx(self):
        return (self.x1 - self.x0) / self.n

    def centers(self):
        return self.x0 + (np.arange(self.n) + 0.5) * self.dx


@dataclass
class StepInfo:
    t: float
    dt: float
    nstep: int


@dataclass
class Solution1D:
    grid: Grid1D
    model: GasModel
    t: float
    rho: np.ndarray
    u: np.ndarray
    ptot: np.ndarray
    e: np.ndarray
    nsteps: int
    conserved_initial: np.ndarray
    conserved_final: np.ndarray

    @property
    def T(self):
        return self.e

    @property
    def sound(self):
        return thermo.sound(self.model.gamma, self.model.a_rad,
                            self.rho, self.e)

    @property
    def p_rad(self):
        return thermo.p_rad(self.model.a_rad, self.e)


class Solver1D:
    """Owns the state arrays and advances them in time."""

    def __init__(self, model: GasModel, grid: Grid1D, rho, u, ptot,
                 bc="outflow", scheme="grp", cfl=0.45, theta=1.5):
        if scheme not in SCHEMES:
            raise ValueError("unknown scheme %r" % scheme)
        if bc not in _BC_CODES:
            raise ValueError("unknown boundary condition %r" % bc)
        if not 0.0 < cfl <= 1.0:
            raise ValueError("cfl must lie in (0, 1]")
        if not 1.0 <= theta <= 2.0:
            raise ValueError("theta must lie in [1, 2]")
        self.model = model
        self.grid = grid
        self.bc = bc
        self.bc_code = _BC_CODES[bc]
        self.scheme = scheme
        self.cfl = cfl
        self.theta = theta
        n = grid.n
        ntot = n + 2 * NG
        g, a = model.gamma, model.a_rad

        rho = np.asarray(rho, dtype=float)
        u = np.asarray(u, dtype=float)
        ptot = np.asarray(ptot, dtype=float)
        if rho.shape != (n,) or u.shape != (n,) or ptot.shape != (n,):
            raise ValueError("initial fields must have shape (n,)")
        if np.any(rho <= 0.0) or np.any(ptot <= 0.0):
            raise InvalidStateError("initial data not physical")

        self.U = np.zeros((3, ntot))
        self.W = np.zeros((3, ntot))
        self.dW = np.zeros((3, ntot))
        r_, m_, E_ = thermo.cons_from_prim(g, a, rho, u, ptot)
        self.U[0, NG:NG + n] = r_
        self.U[1, NG:NG + n] = m_
        self.U[2, NG:NG + n] = E_
        self.t = 0.0
        self.nstep = 0
        self._F = np.zeros((3, ntot))
        self._Wrp = np.zeros((3, ntot))
        self._Wmid = np.zeros((3, ntot))
        self._stat = np.zeros(ntot, dtype=np.int64)
        self._sync_prim()
        self._init_slopes()
        self.conserved_initial = self.conserved_totals()

    def _sync_prim(self):
        _k.apply_bc_1d(self.U, self.grid.n, self.bc_code)
        st = _k.cons_to_prim_grid(self.model.gamma, self.model.a_rad,
                                  self.U, self.W, self.grid.n)
        if st != _k.STATUS_OK:
            raise InvalidStateError(
                "state became unphysical at t=%g, step %d"
                % (self.t, self.nstep))

    def _init_slopes(self):
        if self.scheme == "godunov":
            self.dW[:] = 0.0
            return
        _k.apply_bc_1d(self.U, self.grid.n, self.bc_code)
        _k.apply_bc_1d(self.W, self.grid.n, self.bc_code)
        _k.limited_slopes_from_averages(
            self.model.gamma, self.model.a_rad, self.grid.dx,
            self.U, self.W, self.dW, self.theta, self.grid.n)

    def conserved_totals(self):
        n = self.grid.n
        return self.U[:, NG:NG + n].sum(axis=1) * self.grid.dx

    def max_signal(self):
        return _k.max_signal_1d(self.model.gamma, self.model.a_rad,
                                self.W, self.grid.n)

    def compute_dt(self):
        smax = self.max_signal()
        if smax <= 0.0:
            raise InvalidStateError("vanishing signal speed")
        return self.cfl * self.grid.dx / smax

    def step(self, dt):
        g, a = self.model.gamma, self.model.a_rad
        n = self.grid.n
        dx = self.grid.dx
        _k.apply_bc_1d(self.U, n, self.bc_code)
        _k.apply_bc_1d(self.W, n, self.bc_code)
        _k.apply_bc_1d(self.dW, n, self.bc_code)
        if self.scheme == "muscl":
            _k.limited_slopes_from_averages(g, a, dx, self.U, self.W,
                                            self.dW, self.theta, n)
            _k.apply_bc_1d(self.dW, n, self.bc_code)
            _k.muscl_interfaces_1d(g, a, dx, dt, self.W, self.dW, n,
                                   self._F, self._stat)
            self._check_stat()
            _k.update_cons_1d(dx, dt, self.U, self._F, n)
            self._sync_prim()
        else:
            _k.interfaces_1d(g, a, dx, dt, self.W, self.dW, n,
                             self._F, self._Wrp, self._Wmid, self._stat,
                             self.model.k_table())
            self._check_stat()
            _k.update_cons_1d(dx, dt, self.U, self._F, n)
            self._sync_prim()
            if self.scheme == "grp":
                _k.apply_bc_1d(self.U, n, self.bc_code)
                _k.apply_bc_1d(self.W, n, self.bc_code)
                _k.slopes_update_grp(g, a, dx, dt, self.U, self.W, self.dW,
                                     self._Wrp, self._Wmid, self.theta, n)
        self.t += dt
        self.nstep += 1

    def _check_stat(self):
        n = self.grid.n
        bad = self._stat[NG:NG + n + 1]
        nz = np.nonzero(bad)[0]
        if nz.size:
            j = int(nz[0])
            raise_for_status(int(bad[j]),
                             "interface %d failed at t=%g (step %d)"
                             % (j, self.t, self.nstep))

    def run(self, t_end, max_steps=10_000_000, on_step=None):
        while self.t < t_end * (1.0 - 1.0e-14):
            dt = self.compute_dt()
            if self.t + dt > t_end:
                dt = t_end - self.t
            self.step(dt)
            if on_step is not None:
                on_step(StepInfo(self.t, dt, self.nstep))
            if self.nstep >= max_steps:
                raise RuntimeError("step budget exhausted")
        return self.solution()

    def solution(self):
        n = self.grid.n
        g, a = self.model.gamma, self.model.a_rad
        rho = self.W[0, NG:NG + n].copy()
        u = self.W[1, NG:NG + n].copy()
        p = self.W[2, NG:NG + n].copy()
        e = thermo.e_from_rho_ptot(g, a, rho, p)
        return Solution1D(grid=self.grid, model=self.model, t=self.t,
                          rho=rho, u=u, ptot=p, e=e, nsteps=self.nstep,
                          conserved_initial=self.conserved_initial,
                          conserved_final=self.conserved_totals())


def run(model, grid, rho, u, ptot, t_end, bc="outflow", scheme="grp",
        cfl=0.45, theta=1.5, on_step=None):
    """Convenience wrapper: build a solver, run to t_end, return fields."""
    solver = Solver1D(model, grid, rho, u, ptot, bc=bc, scheme=scheme,
                      cfl=cfl, theta=theta)
    return solver.run(t_end, on_step=on_step)
