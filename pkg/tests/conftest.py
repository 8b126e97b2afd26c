"""Shared fixtures and independent oracles for the test suite.

The oracles here are deliberately written from scratch against textbook
formulas (ideal-gas exact Riemann solver, closed-form fan coefficients,
small-time finite differences) so they share no code with the package.
"""

import numpy as np
import pytest
from scipy.optimize import brentq

from radhydro import mesh1d, thermo
from radhydro.model import GasModel, PrimState


# ----------------------------------------------------------------------
# Ideal-gas (gamma-law) exact Riemann solver, Toro-style.

def ideal_star(g, rl, ul, pl, rr, ur, pr):
    """Exact (p*, u*) for a gamma-law gas with no radiation term."""
    cl = np.sqrt(g * pl / rl)
    cr = np.sqrt(g * pr / rr)

    def f_side(p, rk, pk, ck):
        if p > pk:  # shock
            ak = 2.0 / ((g + 1.0) * rk)
            bk = (g - 1.0) / (g + 1.0) * pk
            return (p - pk) * np.sqrt(ak / (p + bk))
        # rarefaction
        return (2.0 * ck / (g - 1.0)) * ((p / pk) ** ((g - 1.0) /
                                                      (2.0 * g)) - 1.0)

    def f(p):
        return f_side(p, rl, pl, cl) + f_side(p, rr, pr, cr) + (ur - ul)

    lo, hi = 1.0e-14 * min(pl, pr), max(pl, pr)
    while f(hi) < 0.0:
        hi *= 4.0
    ps = brentq(f, lo, hi, xtol=1.0e-15, rtol=1.0e-15)
    us = 0.5 * (ul + ur) + 0.5 * (f_side(ps, rr, pr, cr)
                                  - f_side(ps, rl, pl, cl))
    return ps, us


def ideal_star_density(g, ps, rk, pk):
    """Post-wave density on one side: Hugoniot if ps>pk else isentrope."""
    if ps > pk:
        mu2 = (g - 1.0) / (g + 1.0)
        return rk * (ps / pk + mu2) / (mu2 * ps / pk + 1.0)
    return rk * (ps / pk) ** (1.0 / g)


# ----------------------------------------------------------------------
# Closed-form rarefaction-side interface-derivative row for a gamma-law
# gas (no radiation).  Independent of the package's quadrature/table
# path; every integral below is evaluated analytically.

def ideal_rare_row_left(g, rl, ul, pl, drl, dul, dpl, ps, us):
    """(a, b, d) for a left rarefaction, gamma-law gas."""
    cl = np.sqrt(g * pl / rl)
    r1 = ideal_star_density(g, ps, rl, pl)
    c1 = np.sqrt(g * ps / r1)
    # entropy and invariant slopes; S = ln(p) - g*ln(rho) up to a shift
    dS = dpl / pl - g * drl / rl
    K = cl / (g * (g - 1.0))           # K(rho,S) for the gamma-law gas
    dpsi = -dpl / (rl * cl) + dul + K * dS
    beta_l = ul - cl
    beta_s = us - c1
    # through the fan: u + 2c/(g-1) is constant, so beta = psi - (g+1)/(g-1) c
    w = lambda c: (rl * (c / cl) ** (2.0 / (g - 1.0)) * c) / (rl * cl)

    def A(c):
        return (c / (g * (g - 1.0))) * cl * dS * w(c)

    def dtda(c):
        return (1.0 / beta_l) * w(c) ** -0.5

    # B integral: the integrand reduces to a constant times (c/cl)^m
    m = (g + 1.0) / (2.0 * (g - 1.0))
    coef = (cl * dS * (g + 1.0)
            / (2.0 * beta_l * g * (g - 1.0) ** 2))
    integral = coef * cl * ((c1 / cl) ** (m + 1.0) - 1.0) / (m + 1.0)
    B = (1.0 / beta_l) * (A(cl) - 2.0 * cl * dpsi) - integral
    d = 0.5 * A(c1) + 0.5 * B / dtda(c1)
    return 1.0, 1.0 / (r1 * c1), d


def ideal_rare_row_right(g, rr, ur, pr, drr, dur, dpr, ps, us):
    """Mirror image of ideal_rare_row_left (right fan)."""
    # mirror x -> -x, u -> -u: slopes of rho and p flip sign, u's stays
    a, b, d = ideal_rare_row_left(g, rr, -ur, pr, -drr, dur, -dpr,
                                  ps, -us)
    return a, -b, -d


def ideal_two_rare_ddt(g, rl, ul, pl, dl, rr, ur, pr, dr):
    """Time derivatives (drho, du, dp)_* for a two-rarefaction GRP.

    Solves the 2x2 row system, then converts material to partial
    derivatives; the density derivative uses the left-entropy form.
    """
    ps, us = ideal_star(g, rl, ul, pl, rr, ur, pr)
    aL, bL, dL = ideal_rare_row_left(g, rl, ul, pl, *dl, ps, us)
    aR, bR, dR = ideal_rare_row_right(g, rr, ur, pr, *dr, ps, us)
    det = aL * bR - aR * bL
    Du = (dL * bR - dR * bL) / det
    Dp = (aL * dR - aR * dL) / det
    if us > 0.0:
        rs = ideal_star_density(g, ps, rl, pl)
    else:
        rs = ideal_star_density(g, ps, rr, pr)
    cs = np.sqrt(g * ps / rs)
    dudt = Du + us / (rs * cs * cs) * Dp
    dpdt = Dp + rs * us * Du
    # drho/dt from dp/dt plus entropy advected from the upwind side
    if us > 0.0:
        side_r, side_p, side_dr, side_dp = rl, pl, dl[0], dl[2]
        cl = np.sqrt(g * pl / rl)
        w_ratio = (rs * cs) / (rl * cl)
    else:
        side_r, side_p, side_dr, side_dp = rr, pr, dr[0], dr[2]
        cr = np.sqrt(g * pr / rr)
        w_ratio = (rs * cs) / (rr * cr)
    dS = side_dp / side_p - g * side_dr / side_r
    # A(0,beta*) with the upwind side's entropy slope and fan scaling
    c_side = np.sqrt(g * side_p / side_r)
    K_star = cs / (g * (g - 1.0))
    A_star = K_star * c_side * dS * w_ratio
    dp_dS = ps  # d p(rho,S) / dS at fixed rho for p = exp(S) rho^g
    drdt = (dpdt + dp_dS * us / (cs * K_star) * A_star) / (cs * cs)
    return drdt, dudt, dpdt, ps, us


# ----------------------------------------------------------------------
# Small-time finite-difference oracle: evolve piecewise-linear data with
# the first-order scheme on a fine grid and difference at x = 0.

def godunov_ddt(model, left, dleft, right, dright, tau=2.0e-3,
                points_per_tau=30.0):
    """Richardson-extrapolated (drho, du, dp)/dt at the interface."""
    g, a = model.gamma, model.a_rad
    cl = float(thermo.sound(g, a, left[0],
                            thermo.e_from_rho_ptot(g, a, left[0],
                                                   left[2])))
    cr = float(thermo.sound(g, a, right[0],
                            thermo.e_from_rho_ptot(g, a, right[0],
                                                   right[2])))
    smax = max(abs(left[1]) + cl, abs(right[1]) + cr)
    half = 8.0 * smax * tau

    def probe(t):
        dx = t * smax / points_per_tau
        n = 2 * int(np.ceil(half / dx))
        grid = mesh1d.Grid1D(-half, half, n)
        x = grid.centers()
        rho = np.where(x < 0.0, left[0] + dleft[0] * x,
                       right[0] + dright[0] * x)
        u = np.where(x < 0.0, left[1] + dleft[1] * x,
                     right[1] + dright[1] * x)
        p = np.where(x < 0.0, left[2] + dleft[2] * x,
                     right[2] + dright[2] * x)
        sol = mesh1d.run(model, grid, rho, u, p, t, bc="outflow",
                         scheme="godunov", cfl=0.45)
        j = n // 2
        w = np.array([sol.rho[j - 1] + sol.rho[j],
                      sol.u[j - 1] + sol.u[j],
                      sol.ptot[j - 1] + sol.ptot[j]]) * 0.5
        return w

    from radhydro import riemann
    fan = riemann.solve(model, PrimState(*left), PrimState(*right))
    r0, u0, p0 = (float(v) for v in fan.sample(0.0))
    w0 = np.array([r0, u0, p0])
    d1 = (probe(tau) - w0) / tau
    d2 = (probe(0.5 * tau) - w0) / (0.5 * tau)
    return 2.0 * d2 - d1


# ----------------------------------------------------------------------
# Randomized admissible Riemann data.

def random_states(rng, gamma_max=14.39, a_choices=(0.0, 0.01, 1.0)):
    """One random admissible problem: (gamma, a_rad, WL, WR)."""
    g = 1.0 + rng.uniform(0.05, gamma_max - 1.0)
    a = a_choices[rng.integers(len(a_choices))]
    rl = 10.0 ** rng.uniform(-1.0, 1.0)
    rr = 10.0 ** rng.uniform(-1.0, 1.0)
    pl = 10.0 ** rng.uniform(-1.0, 1.0)
    pr = 10.0 ** rng.uniform(-1.0, 1.0)
    cl = float(thermo.sound(g, a, rl,
                            thermo.e_from_rho_ptot(g, a, rl, pl)))
    cr = float(thermo.sound(g, a, rr,
                            thermo.e_from_rho_ptot(g, a, rr, pr)))
    du_max = 0.8 * (cl + cr)
    ul = rng.uniform(-0.5, 0.5) * cl
    ur = ul + rng.uniform(-du_max, du_max)
    return g, a, (rl, ul, pl), (rr, ur, pr)


@pytest.fixture
def rng():
    return np.random.default_rng(20260826)


@pytest.fixture
def sod_ideal():
    model = GasModel(gamma=1.4, a_rad=0.0)
    return model, PrimState(1.0, 0.0, 1.0), PrimState(0.125, 0.0, 0.1)
