"""Exact Riemann solver: star state, wave fan, and self-similar sampling."""

from dataclasses import dataclass

import numpy as np

from . import _kernels as _k
from .errors import raise_for_status
from .model import GasModel, PrimState

_WAVE_NAMES = {_k.WAVE_RARE: "rarefaction",
               _k.WAVE_SHOCK: "shock",
               _k.WAVE_NONE: "none"}


@dataclass(frozen=True)
class WaveFan:
    """Resolved wave structure of a Riemann problem.

    Speeds are similarity coordinates x/t: for a shock the head and tail
    coincide with the shock speed; for a rarefaction they bound the fan.
    """
    model: GasModel
    left: PrimState
    right: PrimState
    p_star: float
    u_star: float
    rho_star_left: float
    c_star_left: float
    rho_star_right: float
    c_star_right: float
    left_wave: str
    right_wave: str
    speeds: tuple  # (left head, left tail, right tail, right head)
    iterations: int

    def sample(self, xi):
        """Primitive state at similarity coordinate(s) xi = x/t.

        Accepts a scalar or an array; returns (rho, u, p_tot) arrays of
        the same shape.
        """
        g = self.model.gamma
        a = self.model.a_rad
        lt = _wave_code(self.left_wave)
        rt = _wave_code(self.right_wave)
        xi_arr = np.atleast_1d(np.asarray(xi, dtype=float))
        rho = np.empty_like(xi_arr)
        u = np.empty_like(xi_arr)
        p = np.empty_like(xi_arr)
        for i, x in enumerate(xi_arr.ravel()):
            r_, u_, p_, st = _k.sample_fan(
                g, a, self.left.rho, self.left.u, self.left.ptot,
                self.right.rho, self.right.u, self.right.ptot,
                self.p_star, self.u_star,
                self.rho_star_left, self.c_star_left,
                self.rho_star_right, self.c_star_right, lt, rt, x)
            raise_for_status(st, "fan sampling failed at xi=%g" % x)
            rho.ravel()[i] = r_
            u.ravel()[i] = u_
            p.ravel()[i] = p_
        if np.isscalar(xi):
            return float(rho[0]), float(u[0]), float(p[0])
        return rho.reshape(np.shape(xi)), u.reshape(np.shape(xi)), \
            p.reshape(np.shape(xi))


def _wave_code(name):
    for code, nm in _WAVE_NAMES.items():
        if nm == name:
            return code
    raise ValueError(name)


def solve(model: GasModel, left: PrimState, right: PrimState) -> WaveFan:
    """Solve the Riemann problem exactly for the given states."""
    g = model.gamma
    a = model.a_rad
    st, ps, us, r1, c1, r2, c2, lt, rt, niter = _k.solve_star(
        g, a, left.rho, left.u, left.ptot,
        right.rho, right.u, right.ptot)
    raise_for_status(st, "Riemann star iteration failed")
    speeds = _k.wave_speeds(g, a, left.rho, left.u, left.ptot,
                            right.rho, right.u, right.ptot,
                            ps, us, r1, c1, r2, c2, lt, rt)
    return WaveFan(model=model, left=left, right=right,
                   p_star=ps, u_star=us,
                   rho_star_left=r1, c_star_left=c1,
                   rho_star_right=r2, c_star_right=c2,
                   left_wave=_WAVE_NAMES[lt], right_wave=_WAVE_NAMES[rt],
                   speeds=tuple(speeds), iterations=niter)
