"""Two-dimensional finite-volume driver with Strang splitting.

A full step is Lx(dt/2) Ly(dt) Lx(dt/2), where each L is the
one-dimensional operator applied row by row (see _kernels2d).  Each
direction keeps its own slope field so the interface reconstruction in a
sweep reuses the slopes evolved by the previous sweep in that direction.

Boundary conditions are set per edge: outflow, periodic, or inflow with
a fixed or time-dependent primitive state (rho, u, v, ptot).
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels as _k
from . import _kernels2d as _k2
from . import thermo
from .errors import InvalidStateError, raise_for_status
from .model import GasModel

NG = 2

_BC_CODES = {"outflow": _k2.BC_OUTFLOW, "periodic": _k2.BC_PERIODIC,
             "inflow": _k2.BC_INFLOW}
SCHEMES = ("grp", "muscl")
_EDGES = ("left", "right", "bottom", "top")
_ZERO4 = np.zeros(4)


@dataclass(frozen=True)
class Grid2D:
    x0: float
    x1: float
    y0: float
    y1: float
    nx: int
    ny: int

    @property
    def dx(self):
        return (self.x1 - self.x0) / self.nx

    @property
    def dy(self):
        return (self.y1 - self.y0) / self.ny

    def xcenters(self):
        return self.x0 + (np.arange(self.nx) + 0.5) * self.dx

    def ycenters(self):
        return self.y0 + (np.arange(self.ny) + 0.5) * self.dy

    def meshgrid(self):
        return np.meshgrid(self.xcenters(), self.ycenters(), indexing="ij")


@dataclass
class Solution2D:
    grid: Grid2D
    model: GasModel
    t: float
    rho: np.ndarray
    u: np.ndarray
    v: np.ndarray
    ptot: np.ndarray
    e: np.ndarray
    nsteps: int
    conserved_initial: np.ndarray
    conserved_final: np.ndarray

    @property
    def T(self):
        return self.e


def _edge_spec(bc, edge):
    """Normalize one edge spec to (code, state-or-callable-or-None)."""
    spec = bc.get(edge, "outflow") if isinstance(bc, dict) else bc
    if isinstance(spec, str):
        if spec not in ("outflow", "periodic"):
            raise ValueError("edge %r: unknown condition %r" % (edge, spec))
        return _BC_CODES[spec], None
    if callable(spec):
        return _k2.BC_INFLOW, spec
    state = np.asarray(spec, dtype=float)
    if state.shape != (4,):
        raise ValueError("edge %r: inflow state must be (rho, u, v, ptot)"
                         % edge)
    return _k2.BC_INFLOW, state


class Solver2D:
    """Owns the (rho, u, v, ptot) fields and advances them in time.

    bc is either a single spec applied to all edges or a dict with keys
    left/right/bottom/top.  A spec is "outflow", "periodic", a length-4
    primitive state for inflow, or a callable t -> state.
    """

    def __init__(self, model: GasModel, grid: Grid2D, rho, u, v, ptot,
                 bc="outflow", scheme="grp", cfl=0.45, theta=1.5):
        if scheme not in SCHEMES:
            raise ValueError("unknown scheme %r" % scheme)
        if not 0.0 < cfl <= 1.0:
            raise ValueError("cfl must lie in (0, 1]")
        if not 1.0 <= theta <= 2.0:
            raise ValueError("theta must lie in [1, 2]")
        self.model = model
        self.grid = grid
        self.scheme = scheme
        self.cfl = cfl
        self.theta = theta
        nx, ny = grid.nx, grid.ny

        fields = []
        for name, f in (("rho", rho), ("u", u), ("v", v), ("ptot", ptot)):
            f = np.asarray(f, dtype=float)
            if f.shape == ():
                f = np.full((nx, ny), float(f))
            if f.shape != (nx, ny):
                raise ValueError("field %r must have shape (nx, ny)" % name)
            fields.append(f)
        if np.any(fields[0] <= 0.0) or np.any(fields[3] <= 0.0):
            raise InvalidStateError("initial data not physical")

        self.W = np.zeros((4, nx + 2 * NG, ny + 2 * NG))
        for k in range(4):
            self.W[k, NG:NG + nx, NG:NG + ny] = fields[k]

        self._bc = {}
        if isinstance(bc, dict):
            extra = set(bc) - set(_EDGES)
            if extra:
                raise ValueError("unknown edges %r" % sorted(extra))
        for edge in _EDGES:
            self._bc[edge] = _edge_spec(bc, edge)
        for lo, hi in (("left", "right"), ("bottom", "top")):
            per = (self._bc[lo][0] == _k2.BC_PERIODIC,
                   self._bc[hi][0] == _k2.BC_PERIODIC)
            if per[0] != per[1]:
                raise ValueError("periodic edges must come in pairs")

        # Per-direction slope fields for the second-order scheme.
        self.dWx = np.zeros_like(self.W)
        self.dWy = np.zeros_like(self.W)
        if scheme == "grp":
            self._init_slopes()
        self._stat_x = np.zeros(ny + 2 * NG, dtype=np.int64)
        self._stat_y = np.zeros(nx + 2 * NG, dtype=np.int64)
        self.t = 0.0
        self.nstep = 0
        self.conserved_initial = self.conserved_totals()

    def _edge_state(self, edge):
        code, st = self._bc[edge]
        if st is None:
            return code, _ZERO4
        if callable(st):
            out = np.asarray(st(self.t), dtype=float)
            if out.shape != (4,):
                raise ValueError("inflow callable must return (4,) state")
            return code, out
        return code, st

    def _init_slopes(self):
        """Initial limited slopes in each direction, row by row."""
        g, a = self.model.gamma, self.model.a_rad
        th = self.theta
        for W4, dW4, dx, axis in ((self.W, self.dWx, self.grid.dx, 0),
                                  (self.W, self.dWy, self.grid.dy, 1)):
            if axis == 0:
                n, m = self.grid.nx, self.grid.ny
                blo = self._edge_state("left")
                bhi = self._edge_state("right")
                Ws, dWs = W4, dW4
            else:
                n, m = self.grid.ny, self.grid.nx
                blo = self._edge_state("bottom")
                bhi = self._edge_state("top")
                Ws = self._swapped(W4)
                dWs = self._swapped(dW4)
            for jy in range(NG, m + NG):
                W3 = np.ascontiguousarray(Ws[(0, 1, 3), :, jy])
                vv = Ws[2, :, jy].copy()
                dW3 = np.zeros((3, n + 4))
                dvv = np.zeros(n + 4)
                _k2._row_bc_all(W3, vv, dW3, dvv, n,
                                blo[0], bhi[0], blo[1], bhi[1])
                U3 = np.zeros((3, n + 4))
                c0, c1, c2 = thermo.cons_from_prim(g, a, W3[0], W3[1], W3[2])
                U3[0], U3[1], U3[2] = c0, c1, c2
                _k.limited_slopes_from_averages(g, a, dx, U3, W3, dW3,
                                                th, n)
                for i in range(NG, n + NG):
                    dm = th * (vv[i] - vv[i - 1]) / dx
                    dc = 0.5 * (vv[i + 1] - vv[i - 1]) / dx
                    dp = th * (vv[i + 1] - vv[i]) / dx
                    dvv[i] = _k.minmod3(dm, dc, dp)
                dWs[0, :, jy] = dW3[0]
                dWs[1, :, jy] = dW3[1]
                dWs[3, :, jy] = dW3[2]
                dWs[2, :, jy] = dvv
            if axis == 1:
                self._unswap(dWs, dW4)

    @staticmethod
    def _swapped(W4):
        """Transposed copy with u and v exchanged (x <-> y roles)."""
        out = np.empty((4, W4.shape[2], W4.shape[1]))
        out[0] = W4[0].T
        out[1] = W4[2].T
        out[2] = W4[1].T
        out[3] = W4[3].T
        return out

    @staticmethod
    def _unswap(Ws, W4):
        W4[0] = Ws[0].T
        W4[2] = Ws[1].T
        W4[1] = Ws[2].T
        W4[3] = Ws[3].T

    def _sweep_x(self, dt):
        g, a = self.model.gamma, self.model.a_rad
        nx, ny = self.grid.nx, self.grid.ny
        blo = self._edge_state("left")
        bhi = self._edge_state("right")
        self._stat_x[:] = 0
        if self.scheme == "grp":
            _k2.sweep_grp(g, a, self.grid.dx, dt, self.W, self.dWx,
                          nx, ny, self.theta, self.model.k_table(),
                          blo[0], bhi[0], blo[1], bhi[1], self._stat_x)
        else:
            _k2.sweep_muscl(g, a, self.grid.dx, dt, self.W, nx, ny,
                            self.theta, blo[0], bhi[0], blo[1], bhi[1],
                            self._stat_x)
        self._check_stat(self._stat_x, ny, "x")

    def _sweep_y(self, dt):
        g, a = self.model.gamma, self.model.a_rad
        nx, ny = self.grid.nx, self.grid.ny
        blo = self._edge_state("bottom")
        bhi = self._edge_state("top")
        Ws = self._swapped(self.W)
        self._stat_y[:] = 0
        if self.scheme == "grp":
            dWs = self._swapped(self.dWy)
            _k2.sweep_grp(g, a, self.grid.dy, dt, Ws, dWs,
                          ny, nx, self.theta, self.model.k_table(),
                          blo[0], bhi[0], blo[1], bhi[1], self._stat_y)
            self._unswap(dWs, self.dWy)
        else:
            _k2.sweep_muscl(g, a, self.grid.dy, dt, Ws, ny, nx,
                            self.theta, blo[0], bhi[0], blo[1], bhi[1],
                            self._stat_y)
        self._check_stat(self._stat_y, nx, "y")
        self._unswap(Ws, self.W)

    def _check_stat(self, stat, m, label):
        bad = stat[NG:NG + m]
        nz = np.nonzero(bad)[0]
        if nz.size:
            j = int(nz[0])
            raise_for_status(int(bad[j]),
                             "%s-sweep row %d failed at t=%g (step %d)"
                             % (label, j, self.t, self.nstep))

    def max_signal(self):
        return _k2.max_signal_2d(self.model.gamma, self.model.a_rad,
                                 self.W, self.grid.nx, self.grid.ny)

    def compute_dt(self):
        sx, sy = self.max_signal()
        if sx <= 0.0 and sy <= 0.0:
            raise InvalidStateError("vanishing signal speed")
        lim = np.inf
        if sx > 0.0:
            lim = min(lim, self.grid.dx / sx)
        if sy > 0.0:
            lim = min(lim, self.grid.dy / sy)
        return self.cfl * lim

    def step(self, dt):
        self._sweep_x(0.5 * dt)
        self._sweep_y(dt)
        self._sweep_x(0.5 * dt)
        self.t += dt
        self.nstep += 1

    def conserved_totals(self):
        g, a = self.model.gamma, self.model.a_rad
        nx, ny = self.grid.nx, self.grid.ny
        r = self.W[0, NG:NG + nx, NG:NG + ny]
        u = self.W[1, NG:NG + nx, NG:NG + ny]
        v = self.W[2, NG:NG + nx, NG:NG + ny]
        p = self.W[3, NG:NG + nx, NG:NG + ny]
        e = thermo.e_from_rho_ptot(g, a, r, p)
        E = 0.5 * r * (u * u + v * v) + r * e + a * e ** 4
        vol = self.grid.dx * self.grid.dy
        return np.array([r.sum(), (r * u).sum(), (r * v).sum(),
                         E.sum()]) * vol

    def run(self, t_end, max_steps=10_000_000, on_step=None):
        while self.t < t_end * (1.0 - 1.0e-14):
            dt = self.compute_dt()
            if self.t + dt > t_end:
                dt = t_end - self.t
            self.step(dt)
            if on_step is not None:
                on_step(self)
            if self.nstep >= max_steps:
                raise RuntimeError("step budget exhausted")
        return self.solution()

    def solution(self):
        g, a = self.model.gamma, self.model.a_rad
        nx, ny = self.grid.nx, self.grid.ny
        rho = self.W[0, NG:NG + nx, NG:NG + ny].copy()
        u = self.W[1, NG:NG + nx, NG:NG + ny].copy()
        v = self.W[2, NG:NG + nx, NG:NG + ny].copy()
        p = self.W[3, NG:NG + nx, NG:NG + ny].copy()
        e = thermo.e_from_rho_ptot(g, a, rho, p)
        return Solution2D(grid=self.grid, model=self.model, t=self.t,
                          rho=rho, u=u, v=v, ptot=p, e=e,
                          nsteps=self.nstep,
                          conserved_initial=self.conserved_initial,
                          conserved_final=self.conserved_totals())


def run(model, grid, rho, u, v, ptot, t_end, bc="outflow", scheme="grp",
        cfl=0.45, theta=1.5, on_step=None):
    """Convenience wrapper: build a solver, run to t_end, return fields."""
    solver = Solver2D(model, grid, rho, u, v, ptot, bc=bc, scheme=scheme,
                      cfl=cfl, theta=theta)
    return solver.run(t_end, on_step=on_step)
