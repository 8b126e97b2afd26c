"""Material model and small state containers.

The medium is an ideal gas with adiabatic exponent gamma coupled to an
equilibrium radiation field: with unit heat capacity the temperature
equals the specific internal energy e, and

    p_gas = (gamma - 1) rho e,   p_rad = a_rad e^4 / 3,
    p_tot = p_gas + p_rad,       e_tot = e + a_rad e^4 / rho.

For gamma above roughly 14.4 the characteristic fields lose genuine
nonlinearity somewhere in state space (see diagnostics), so the model
refuses larger exponents unless explicitly overridden.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _kernels as _k
from .errors import InvalidStateError

# Largest gamma for which both acoustic fields stay genuinely nonlinear
# over the entire admissible state space.
GAMMA_CAP = 14.39


class PrimState(NamedTuple):
    """Pointwise primitive state (density, velocity, total pressure)."""
    rho: float
    u: float
    ptot: float


class PrimState2D(NamedTuple):
    rho: float
    u: float
    v: float
    ptot: float


@dataclass(frozen=True)
class GasModel:
    """Gas and radiation parameters. Immutable."""
    gamma: float = 5.0 / 3.0
    a_rad: float = 1.0
    allow_large_gamma: bool = False

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise ValueError("gamma must exceed 1")
        if self.a_rad < 0.0:
            raise ValueError("a_rad must be nonnegative")
        if self.gamma > GAMMA_CAP and not self.allow_large_gamma:
            raise ValueError(
                "gamma = %g exceeds %g, above which an acoustic field can "
                "lose genuine nonlinearity; pass allow_large_gamma=True to "
                "proceed anyway" % (self.gamma, GAMMA_CAP))

    # -- scalar helpers (thin wrappers over the compiled kernels) --

    def e_from_rho_ptot(self, rho, ptot):
        e = _k.e_from_rho_ptot(self.gamma, self.a_rad, rho, ptot)
        if e <= 0.0:
            raise InvalidStateError(
                "no positive energy for rho=%g, p_tot=%g" % (rho, ptot))
        return e

    def e_from_rho_T(self, rho, T):
        # T = e with unit heat capacity
        if T <= 0.0:
            raise InvalidStateError("temperature must be positive")
        return T

    def ptot(self, rho, e):
        return _k.ptot_re(self.gamma, self.a_rad, rho, e)

    def p_rad(self, e):
        return self.a_rad * e ** 4 / 3.0

    def etot(self, rho, e):
        return _k.etot_re(self.gamma, self.a_rad, rho, e)

    def sound(self, rho, e):
        return _k.sound_re(self.gamma, self.a_rad, rho, e)

    def entropy(self, rho, e):
        return _k.entropy_re(self.gamma, self.a_rad, rho, e)

    def e_on_isentrope(self, rho, S):
        return _k.e_of_rho_S(self.gamma, self.a_rad, rho, S)

    def K_coefficient(self, rho, S):
        from .errors import raise_for_status
        val, st = _k.K_fast(self.gamma, self.a_rad, rho, S, self.k_table())
        raise_for_status(st, "K coefficient evaluation failed")
        return val

    def k_table(self):
        """Cached acoustic-coupling table for this (gamma, a_rad) pair."""
        tab = getattr(self, "_ktab", None)
        if tab is None:
            tab = _k.build_k_table(self.gamma, self.a_rad)
            object.__setattr__(self, "_ktab", tab)
        return tab

    def cons_from_prim(self, state: PrimState):
        return np.array(_k.cons_from_prim(
            self.gamma, self.a_rad, state.rho, state.u, state.ptot))

    def prim_from_cons(self, r, m, E):
        rho, u, p, e = _k.prim_from_cons(self.gamma, self.a_rad, r, m, E)
        if p <= 0.0:
            raise InvalidStateError(
                "conservative state (%g, %g, %g) is not physical" % (r, m, E))
        return PrimState(rho, u, p)
