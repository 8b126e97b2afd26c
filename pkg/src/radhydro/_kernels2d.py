"""Directional sweep kernels for the two-dimensional solver.

The 2D system splits into x- and y-subsystems; in each, the transverse
velocity rides passively on the flow (a shear wave at the contact speed)
while the remaining three equations coincide with the 1D system.  Each
sweep therefore reuses the 1D interface machinery on every row and adds
the shear component: upwinded by the sign of the interface velocity,
with its time derivative scaled by the density compression between the
upwind cell and the contact,

    (dv/dt)* = -u* (rho* / rho_side) v'_side.

Rows are independent, so sweeps parallelize over the transverse index.
Arrays are laid out as (4, n+4, m+4) with the sweep direction on axis 1;
the driver transposes (and swaps u and v) for y-sweeps.
"""

import numpy as np
from numba import njit, prange

from ._kernels import (
    STATUS_OK, STATUS_EOS,
    grp_solve, solve_star, sample_fan, flux_prim,
    cons_from_prim, prim_from_cons, e_from_rho_ptot, sound_re,
    slopes_update_grp, limited_slopes_from_averages, minmod3,
)

BC_OUTFLOW = 0
BC_PERIODIC = 1
BC_INFLOW = 2


@njit(cache=True)
def _fill_row_ghosts(arr, n, bclo, bchi, vlo, vhi):
    """Ghost values for one row variable. vlo/vhi used for inflow."""
    if bclo == BC_PERIODIC:
        arr[0] = arr[n]
        arr[1] = arr[n + 1]
    elif bclo == BC_INFLOW:
        arr[0] = vlo
        arr[1] = vlo
    else:
        arr[0] = arr[2]
        arr[1] = arr[2]
    if bchi == BC_PERIODIC:
        arr[n + 2] = arr[2]
        arr[n + 3] = arr[3]
    elif bchi == BC_INFLOW:
        arr[n + 2] = vhi
        arr[n + 3] = vhi
    else:
        arr[n + 2] = arr[n + 1]
        arr[n + 3] = arr[n + 1]


@njit(cache=True)
def _row_bc_all(W3, v, dW3, dv, n, bclo, bchi, blo, bhi):
    """Ghosts for primitive row data and slopes. blo/bhi: (rho,u,v,p)."""
    _fill_row_ghosts(W3[0], n, bclo, bchi, blo[0], bhi[0])
    _fill_row_ghosts(W3[1], n, bclo, bchi, blo[1], bhi[1])
    _fill_row_ghosts(W3[2], n, bclo, bchi, blo[3], bhi[3])
    _fill_row_ghosts(v, n, bclo, bchi, blo[2], bhi[2])
    # Slopes: periodic copies, zero otherwise.
    zlo = 0.0
    zhi = 0.0
    blon = bclo if bclo == BC_PERIODIC else BC_INFLOW
    bhin = bchi if bchi == BC_PERIODIC else BC_INFLOW
    for k in range(3):
        _fill_row_ghosts(dW3[k], n, blon, bhin, zlo, zhi)
    _fill_row_ghosts(dv, n, blon, bhin, zlo, zhi)


@njit(cache=True)
def _grp_row(g, a, dx, dt, W3, v, dW3, dv, n, theta, ktab,
             bclo, bchi, blo, bhi):
    """Advance one row by dt with the second-order interface scheme.

    W3: (3, n+4) primitives (rho, u_normal, ptot); v: transverse
    velocity; dW3/dv: sweep-direction slopes.  All updated in place.
    Returns the first nonzero interface status (0 on success).
    """
    _row_bc_all(W3, v, dW3, dv, n, bclo, bchi, blo, bhi)

    F = np.zeros((4, n + 4))
    Wrp = np.zeros((3, n + 4))
    Wmid = np.zeros((3, n + 4))
    vstar = np.zeros(n + 4)
    vmid = np.zeros(n + 4)
    bad = 0

    for j in range(2, n + 3):
        drl = dW3[0, j - 1]
        dul = dW3[1, j - 1]
        dpl = dW3[2, j - 1]
        drr = dW3[0, j]
        dur = dW3[1, j]
        dpr = dW3[2, j]
        rl = W3[0, j - 1] + 0.5 * dx * drl
        ul = W3[1, j - 1] + 0.5 * dx * dul
        pl = W3[2, j - 1] + 0.5 * dx * dpl
        rr = W3[0, j] - 0.5 * dx * drr
        ur = W3[1, j] - 0.5 * dx * dur
        pr = W3[2, j] - 0.5 * dx * dpr
        dvl = dv[j - 1]
        dvr = dv[j]
        vl = v[j - 1] + 0.5 * dx * dvl
        vr = v[j] - 0.5 * dx * dvr
        if rl <= 0.0 or pl <= 0.0 or rr <= 0.0 or pr <= 0.0:
            # Local first-order fallback keeps strong gradients running.
            rl = W3[0, j - 1]
            ul = W3[1, j - 1]
            pl = W3[2, j - 1]
            rr = W3[0, j]
            ur = W3[1, j]
            pr = W3[2, j]
            vl = v[j - 1]
            vr = v[j]
            drl = dul = dpl = drr = dur = dpr = 0.0
            dvl = dvr = 0.0
        out = grp_solve(g, a, rl, ul, pl, drl, dul, dpl,
                        rr, ur, pr, drr, dur, dpr, ktab)
        if out[0] != STATUS_OK:
            out = grp_solve(g, a,
                            W3[0, j - 1], W3[1, j - 1], W3[2, j - 1],
                            0.0, 0.0, 0.0,
                            W3[0, j], W3[1, j], W3[2, j],
                            0.0, 0.0, 0.0, ktab)
            vl = v[j - 1]
            vr = v[j]
            dvl = dvr = 0.0
            if out[0] != STATUS_OK:
                if bad == 0:
                    bad = out[0]
                continue
        r0 = out[12]
        u0 = out[13]
        p0 = out[14]
        rm = r0 + 0.5 * dt * out[15]
        um = u0 + 0.5 * dt * out[16]
        pm = p0 + 0.5 * dt * out[17]
        if rm <= 0.0 or pm <= 0.0:
            rm = r0
            um = u0
            pm = p0
        if u0 > 0.0:
            vs = vl
            dvdt = -u0 * (r0 / rl) * dvl
        elif u0 < 0.0:
            vs = vr
            dvdt = -u0 * (r0 / rr) * dvr
        else:
            vs = 0.5 * (vl + vr)
            dvdt = 0.0
        vm = vs + 0.5 * dt * dvdt
        Wrp[0, j] = r0
        Wrp[1, j] = u0
        Wrp[2, j] = p0
        Wmid[0, j] = rm
        Wmid[1, j] = um
        Wmid[2, j] = pm
        vstar[j] = vs
        vmid[j] = vm
        f0, f1, f2 = flux_prim(g, a, rm, um, pm)
        F[0, j] = f0
        F[1, j] = f1
        F[2, j] = f0 * vm
        F[3, j] = f2 + 0.5 * f0 * vm * vm
    if bad != 0:
        return bad

    # Conservative update of (rho, rho*u, rho*v, E).
    U4 = np.zeros((4, n + 4))
    for i in range(2, n + 2):
        c0, c1, c2 = cons_from_prim(g, a, W3[0, i], W3[1, i], W3[2, i])
        U4[0, i] = c0
        U4[1, i] = c1
        U4[2, i] = c0 * v[i]
        U4[3, i] = c2 + 0.5 * c0 * v[i] * v[i]
    lam = dt / dx
    for i in range(2, n + 2):
        U4[0, i] -= lam * (F[0, i + 1] - F[0, i])
        U4[1, i] -= lam * (F[1, i + 1] - F[1, i])
        U4[2, i] -= lam * (F[2, i + 1] - F[2, i])
        U4[3, i] -= lam * (F[3, i + 1] - F[3, i])

    # New primitives and the 3-component conservative row (transverse
    # kinetic energy removed) for the slope update.
    U3n = np.zeros((3, n + 4))
    for i in range(2, n + 2):
        r = U4[0, i]
        if r <= 0.0:
            return STATUS_EOS
        un = U4[1, i] / r
        vn = U4[2, i] / r
        E1 = U4[3, i] - 0.5 * r * vn * vn
        rr_, uu_, pp_, ee_ = prim_from_cons(g, a, r, U4[1, i], E1)
        if pp_ <= 0.0:
            return STATUS_EOS
        W3[0, i] = rr_
        W3[1, i] = uu_
        W3[2, i] = pp_
        v[i] = vn
        U3n[0, i] = r
        U3n[1, i] = U4[1, i]
        U3n[2, i] = E1
    _row_bc_all(W3, v, dW3, dv, n, bclo, bchi, blo, bhi)
    for i in (0, 1, n + 2, n + 3):
        c0, c1, c2 = cons_from_prim(g, a, W3[0, i], W3[1, i], W3[2, i])
        U3n[0, i] = c0
        U3n[1, i] = c1
        U3n[2, i] = c2

    slopes_update_grp(g, a, dx, dt, U3n, W3, dW3, Wrp, Wmid, theta, n)
    dvn = np.zeros(n + 4)
    for i in range(2, n + 2):
        raw = ((2.0 * vmid[i + 1] - vstar[i + 1])
               - (2.0 * vmid[i] - vstar[i])) / dx
        dm = theta * (v[i] - v[i - 1]) / dx
        dp = theta * (v[i + 1] - v[i]) / dx
        dvn[i] = minmod3(dm, raw, dp)
    for i in range(2, n + 2):
        dv[i] = dvn[i]
    return 0


@njit(cache=True)
def _muscl_row(g, a, dx, dt, W3, v, n, theta, bclo, bchi, blo, bhi):
    """Advance one row by dt with the predictor-corrector baseline."""
    dW3 = np.zeros((3, n + 4))
    dv = np.zeros(n + 4)
    _row_bc_all(W3, v, dW3, dv, n, bclo, bchi, blo, bhi)
    U3 = np.zeros((3, n + 4))
    for i in range(n + 4):
        c0, c1, c2 = cons_from_prim(g, a, W3[0, i], W3[1, i], W3[2, i])
        U3[0, i] = c0
        U3[1, i] = c1
        U3[2, i] = c2
    limited_slopes_from_averages(g, a, dx, U3, W3, dW3, theta, n)
    for i in range(2, n + 2):
        dm = theta * (v[i] - v[i - 1]) / dx
        dc = 0.5 * (v[i + 1] - v[i - 1]) / dx
        dp = theta * (v[i + 1] - v[i]) / dx
        dv[i] = minmod3(dm, dc, dp)
        rl = W3[0, i] + 0.5 * dx * dW3[0, i]
        pl = W3[2, i] + 0.5 * dx * dW3[2, i]
        rr = W3[0, i] - 0.5 * dx * dW3[0, i]
        pr = W3[2, i] - 0.5 * dx * dW3[2, i]
        if rl <= 0.0 or pl <= 0.0 or rr <= 0.0 or pr <= 0.0:
            dW3[0, i] = 0.0
            dW3[1, i] = 0.0
            dW3[2, i] = 0.0
            dv[i] = 0.0
    _row_bc_all(W3, v, dW3, dv, n, bclo, bchi, blo, bhi)

    F = np.zeros((4, n + 4))
    lam2 = 0.5 * dt / dx
    bad = 0
    for j in range(2, n + 3):
        # Left side: plus-side value of cell j-1 after the half step.
        i = j - 1
        rl = W3[0, i] + 0.5 * dx * dW3[0, i]
        ul = W3[1, i] + 0.5 * dx * dW3[1, i]
        pl = W3[2, i] + 0.5 * dx * dW3[2, i]
        vlp = v[i] + 0.5 * dx * dv[i]
        rm_ = W3[0, i] - 0.5 * dx * dW3[0, i]
        um_ = W3[1, i] - 0.5 * dx * dW3[1, i]
        pm_ = W3[2, i] - 0.5 * dx * dW3[2, i]
        vlm = v[i] - 0.5 * dx * dv[i]
        up0, up1, up2 = cons_from_prim(g, a, rl, ul, pl)
        fp0, fp1, fp2 = flux_prim(g, a, rl, ul, pl)
        fm0, fm1, fm2 = flux_prim(g, a, rm_, um_, pm_)
        h0 = up0 - lam2 * (fp0 - fm0)
        h1 = up1 - lam2 * (fp1 - fm1)
        h2 = up2 - lam2 * (fp2 - fm2)
        hm = up0 * vlp - lam2 * (fp0 * vlp - fm0 * vlm)
        rl, ul, pl, el = prim_from_cons(g, a, h0, h1, h2)
        vl = hm / h0
        if pl <= 0.0 or rl <= 0.0:
            rl = W3[0, i]
            ul = W3[1, i]
            pl = W3[2, i]
            vl = v[i]
        # Right side: minus-side value of cell j after the half step.
        i = j
        rr = W3[0, i] - 0.5 * dx * dW3[0, i]
        ur = W3[1, i] - 0.5 * dx * dW3[1, i]
        pr = W3[2, i] - 0.5 * dx * dW3[2, i]
        vrm = v[i] - 0.5 * dx * dv[i]
        rq = W3[0, i] + 0.5 * dx * dW3[0, i]
        uq = W3[1, i] + 0.5 * dx * dW3[1, i]
        pq = W3[2, i] + 0.5 * dx * dW3[2, i]
        vrp = v[i] + 0.5 * dx * dv[i]
        um0, um1, um2 = cons_from_prim(g, a, rr, ur, pr)
        fm0, fm1, fm2 = flux_prim(g, a, rr, ur, pr)
        fq0, fq1, fq2 = flux_prim(g, a, rq, uq, pq)
        h0 = um0 - lam2 * (fq0 - fm0)
        h1 = um1 - lam2 * (fq1 - fm1)
        h2 = um2 - lam2 * (fq2 - fm2)
        hm = um0 * vrm - lam2 * (fq0 * vrp - fm0 * vrm)
        rr, ur, pr, er = prim_from_cons(g, a, h0, h1, h2)
        vr = hm / h0
        if pr <= 0.0 or rr <= 0.0:
            rr = W3[0, i]
            ur = W3[1, i]
            pr = W3[2, i]
            vr = v[i]
        st, ps, us, r1, c1, r2, c2, lt, rt, _ = \
            solve_star(g, a, rl, ul, pl, rr, ur, pr)
        if st != STATUS_OK:
            if bad == 0:
                bad = st
            continue
        r0, u0v, p0v, st = sample_fan(g, a, rl, ul, pl, rr, ur, pr,
                                      ps, us, r1, c1, r2, c2, lt, rt, 0.0)
        if st != STATUS_OK:
            if bad == 0:
                bad = st
            continue
        if u0v > 0.0:
            vint = vl
        elif u0v < 0.0:
            vint = vr
        else:
            vint = 0.5 * (vl + vr)
        f0, f1, f2 = flux_prim(g, a, r0, u0v, p0v)
        F[0, j] = f0
        F[1, j] = f1
        F[2, j] = f0 * vint
        F[3, j] = f2 + 0.5 * f0 * vint * vint
    if bad != 0:
        return bad

    U4 = np.zeros((4, n + 4))
    for i in range(2, n + 2):
        c0, c1, c2 = cons_from_prim(g, a, W3[0, i], W3[1, i], W3[2, i])
        U4[0, i] = c0
        U4[1, i] = c1
        U4[2, i] = c0 * v[i]
        U4[3, i] = c2 + 0.5 * c0 * v[i] * v[i]
    lam = dt / dx
    for i in range(2, n + 2):
        U4[0, i] -= lam * (F[0, i + 1] - F[0, i])
        U4[1, i] -= lam * (F[1, i + 1] - F[1, i])
        U4[2, i] -= lam * (F[2, i + 1] - F[2, i])
        U4[3, i] -= lam * (F[3, i + 1] - F[3, i])
    for i in range(2, n + 2):
        r = U4[0, i]
        if r <= 0.0:
            return STATUS_EOS
        vn = U4[2, i] / r
        E1 = U4[3, i] - 0.5 * r * vn * vn
        rr_, uu_, pp_, ee_ = prim_from_cons(g, a, r, U4[1, i], E1)
        if pp_ <= 0.0:
            return STATUS_EOS
        W3[0, i] = rr_
        W3[1, i] = uu_
        W3[2, i] = pp_
        v[i] = vn
    return 0


@njit(cache=True, parallel=True)
def sweep_grp(g, a, dx, dt, W4, dW4, n, m, theta, ktab,
              bclo, bchi, blo, bhi, stat):
    """One directional second-order step on all m rows.

    W4/dW4: (4, n+4, m+4) with components (rho, u_normal, v_transverse,
    ptot); axis 1 is the sweep direction.  stat: (m+4,) per-row status.
    """
    for jy in prange(2, m + 2):
        W3 = np.empty((3, n + 4))
        vv = np.empty(n + 4)
        dW3 = np.empty((3, n + 4))
        dvv = np.empty(n + 4)
        for i in range(n + 4):
            W3[0, i] = W4[0, i, jy]
            W3[1, i] = W4[1, i, jy]
            W3[2, i] = W4[3, i, jy]
            vv[i] = W4[2, i, jy]
            dW3[0, i] = dW4[0, i, jy]
            dW3[1, i] = dW4[1, i, jy]
            dW3[2, i] = dW4[3, i, jy]
            dvv[i] = dW4[2, i, jy]
        stat[jy] = _grp_row(g, a, dx, dt, W3, vv, dW3, dvv, n, theta,
                            ktab, bclo, bchi, blo, bhi)
        for i in range(2, n + 2):
            W4[0, i, jy] = W3[0, i]
            W4[1, i, jy] = W3[1, i]
            W4[3, i, jy] = W3[2, i]
            W4[2, i, jy] = vv[i]
            dW4[0, i, jy] = dW3[0, i]
            dW4[1, i, jy] = dW3[1, i]
            dW4[3, i, jy] = dW3[2, i]
            dW4[2, i, jy] = dvv[i]


@njit(cache=True, parallel=True)
def sweep_muscl(g, a, dx, dt, W4, n, m, theta, bclo, bchi, blo, bhi, stat):
    """One directional predictor-corrector step on all m rows."""
    for jy in prange(2, m + 2):
        W3 = np.empty((3, n + 4))
        vv = np.empty(n + 4)
        for i in range(n + 4):
            W3[0, i] = W4[0, i, jy]
            W3[1, i] = W4[1, i, jy]
            W3[2, i] = W4[3, i, jy]
            vv[i] = W4[2, i, jy]
        stat[jy] = _muscl_row(g, a, dx, dt, W3, vv, n, theta,
                              bclo, bchi, blo, bhi)
        for i in range(2, n + 2):
            W4[0, i, jy] = W3[0, i]
            W4[1, i, jy] = W3[1, i]
            W4[3, i, jy] = W3[2, i]
            W4[2, i, jy] = vv[i]


@njit(cache=True, parallel=True)
def max_signal_2d(g, a, W4, nx, ny):
    """(max |u|+c, max |v|+c) over physical cells."""
    sx = 0.0
    sy = 0.0
    for i in prange(2, nx + 2):
        lsx = 0.0
        lsy = 0.0
        for j in range(2, ny + 2):
            e = e_from_rho_ptot(g, a, W4[0, i, j], W4[3, i, j])
            if e <= 0.0:
                continue
            c = sound_re(g, a, W4[0, i, j], e)
            lsx = max(lsx, abs(W4[1, i, j]) + c)
            lsy = max(lsy, abs(W4[2, i, j]) + c)
        sx = max(sx, lsx)
        sy = max(sy, lsy)
    return sx, sy
