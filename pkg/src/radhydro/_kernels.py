"""Compiled numerical core.

Everything in this module is numba nopython code operating on scalars and
flat numpy arrays. The Python-facing API lives in the sibling modules; this
file holds the hot paths: the equation-of-state closures, the adaptive
quadratures along isentropes, the exact Riemann solver for the gas plus
radiation pressure system, the resolved time-derivative (generalized
Riemann) solver, and the per-step mesh kernels.

Conventions used throughout:
  g   : adiabatic exponent gamma of the gas part
  g1  : gamma - 1
  a   : radiation constant (p_rad = a*e^4/3, T = e with unit heat capacity)
  rho, u, p : density, velocity, TOTAL pressure p_gas + p_rad
  e   : specific internal energy of the gas part (equals temperature)
  S   : entropy function ln(p_gas/rho^gamma) + 4*a*e^3/(3*rho)

Status codes returned by fallible kernels (mirrored in errors.py):
  0 ok, 1 vacuum, 2 root iteration failed, 3 bracketing failed,
  4 eos inversion failed, 5 singular linear solve, 6 quadrature failed
"""

import numpy as np
from numba import njit, prange

STATUS_OK = 0
STATUS_VACUUM = 1
STATUS_ROOT = 2
STATUS_BRACKET = 3
STATUS_EOS = 4
STATUS_SINGULAR = 5
STATUS_QUAD = 6

WAVE_RARE = 0
WAVE_SHOCK = 1
WAVE_NONE = 2

CASE_STAR = 0       # t-axis in the star region between the waves
CASE_SONIC_L = 1    # t-axis inside the left rarefaction fan
CASE_SONIC_R = 2    # t-axis inside the right rarefaction fan
CASE_SIDE_L = 3     # t-axis left of all waves
CASE_SIDE_R = 4     # t-axis right of all waves
CASE_ACOUSTIC = 5   # left and right inputs coincide to rounding

# Relative wave-strength threshold below which a side is treated as waveless
EPS_WAVE = 1.0e-12
# Relative wave strength below which the linearized (weak-wave) interface
# resolution is used; it is exact to second order in the jump, so this
# threshold keeps the induced error far below the scheme truncation error.
EPS_ACOUSTIC = 5.0e-3
# Convergence tolerance for the star-velocity matching
TOL_STAR = 1.0e-10
# Relative residual tolerance for quartic energy inversions
TOL_EOS = 1.0e-12
# Relative tolerance for adaptive quadratures
TOL_QUAD = 1.0e-12
# Full-range integrals down to the vacuum endpoint are much more costly
# per call; they only feed coefficients that tolerate a looser target.
TOL_QUAD_SING = 1.0e-10

# 15-point Kronrod nodes (positive half) and weights, 7-point Gauss weights.
_XGK = np.array([
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0])
_WGK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728])
_WG = np.array([
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469])


# ----------------------------------------------------------------------
# Lambert W (principal branch) for nonnegative arguments, log form.
# ----------------------------------------------------------------------

@njit(cache=True)
def lambert_w0_ln(lx):
    """Solve w*exp(w) = exp(lx) for w >= 0, given lx = ln(x)."""
    if lx < -40.0:
        x = np.exp(lx)
        return x * (1.0 - x)
    if lx <= 1.0:
        w = np.log1p(np.exp(lx))
    else:
        w = lx - np.log(lx)
        if w < 1.0e-2:
            w = 1.0e-2
    # Halley iteration on f(w) = w + ln(w) - lx.
    for _ in range(60):
        f = w + np.log(w) - lx
        fp = 1.0 + 1.0 / w
        fpp = -1.0 / (w * w)
        dw = 2.0 * f * fp / (2.0 * fp * fp - f * fpp)
        wn = w - dw
        if wn <= 0.0:
            wn = 0.5 * w
        if abs(wn - w) <= 1.0e-15 * (1.0 + abs(wn)):
            return wn
        w = wn
    return w


@njit(cache=True)
def lambert_w0(x):
    if x <= 0.0:
        return 0.0
    return lambert_w0_ln(np.log(x))


# ----------------------------------------------------------------------
# Equation of state: p_gas = g1*rho*e, p_rad = a*e^4/3, T = e.
# ----------------------------------------------------------------------

@njit(cache=True)
def e_from_rho_etot(g, a, rho, q):
    """Invert rho*e + a*e^4 = q (q = rho * e_tot). Newton, convex residual."""
    if q <= 0.0 or rho <= 0.0:
        return -1.0
    # The smaller of the two single-term roots bounds the true root from
    # above, so the convex Newton iteration converges monotonically.
    e = q / rho
    if a > 0.0:
        er = (q / a) ** 0.25
        if er < e:
            e = er
    for _ in range(100):
        f = rho * e + a * e * e * e * e - q
        if abs(f) <= TOL_EOS * q:
            return e
        fp = rho + 4.0 * a * e * e * e
        e -= f / fp
        if e <= 0.0:
            e = TOL_EOS * q / rho
    return -1.0


@njit(cache=True)
def e_from_rho_ptot(g, a, rho, p):
    """Invert g1*rho*e + a*e^4/3 = p."""
    if p <= 0.0 or rho <= 0.0:
        return -1.0
    g1 = g - 1.0
    # Same upper-bound seed as in e_from_rho_etot.
    e = p / (g1 * rho)
    if a > 0.0:
        er = (3.0 * p / a) ** 0.25
        if er < e:
            e = er
    for _ in range(100):
        f = g1 * rho * e + a * e * e * e * e / 3.0 - p
        if abs(f) <= TOL_EOS * p:
            return e
        fp = g1 * rho + 4.0 * a * e * e * e / 3.0
        e -= f / fp
        if e <= 0.0:
            e = TOL_EOS * p / (g1 * rho)
    return -1.0


@njit(cache=True)
def ptot_re(g, a, rho, e):
    z = a * e * e * e / rho
    return rho * e * (g - 1.0 + z / 3.0)


@njit(cache=True)
def etot_re(g, a, rho, e):
    z = a * e * e * e / rho
    return e * (1.0 + z)


# Most thermodynamic derivatives below are written in terms of the
# radiation-to-gas ratio z = a*e^3/rho and the combinations
#   A = g1 + 4z/3 = khat/(rho e),  B = 1 + 4z = ktil/rho,
# which stay order-one where the raw khat/ktil products would underflow
# (deep rarefaction tails) or overflow.

@njit(cache=True)
def csq_re(g, a, rho, e):
    """Squared sound speed at (rho, e)."""
    g1 = g - 1.0
    z = a * e * e * e / rho
    A = g1 + 4.0 * z / 3.0
    B = 1.0 + 4.0 * z
    return e * (g1 + A * A / B)


@njit(cache=True)
def sound_re(g, a, rho, e):
    return np.sqrt(csq_re(g, a, rho, e))


@njit(cache=True)
def entropy_re(g, a, rho, e):
    z = a * e * e * e / rho
    return np.log(g - 1.0) + np.log(e) + (1.0 - g) * np.log(rho) \
        + 4.0 * z / 3.0


@njit(cache=True)
def e_of_rho_S(g, a, rho, S):
    """Internal energy on the isentrope S at density rho (Lambert W closure)."""
    g1 = g - 1.0
    if a == 0.0:
        return np.exp(S + g1 * np.log(rho)) / g1
    lx = np.log(4.0 * a) - 3.0 * np.log(g1) + (3.0 * g - 4.0) * np.log(rho) \
        + 3.0 * S
    w = lambert_w0_ln(lx)
    return np.exp(g1 * np.log(rho) + S - w / 3.0) / g1


@njit(cache=True)
def dcsq_de(g, a, rho, e):
    """d c^2 / d e at constant density."""
    g1 = g - 1.0
    z = a * e * e * e / rho
    A = g1 + 4.0 * z / 3.0
    B = 1.0 + 4.0 * z
    return g1 + A * A / B + 4.0 * z * A * (2.0 * B - 3.0 * A) / (B * B)


@njit(cache=True)
def dcsq_drho(g, a, rho, e):
    """d c^2 / d rho at constant internal energy."""
    g1 = g - 1.0
    z = a * e * e * e / rho
    A = g1 + 4.0 * z / 3.0
    B = 1.0 + 4.0 * z
    return -(4.0 * z * e * A / rho) * (2.0 * B / 3.0 - A) / (B * B)


@njit(cache=True)
def de_drho_S(g, a, rho, e):
    """d e / d rho along an isentrope."""
    g1 = g - 1.0
    z = a * e * e * e / rho
    return e * (g1 + 4.0 * z / 3.0) / (rho * (1.0 + 4.0 * z))


@njit(cache=True)
def dc_drho_S(g, a, rho, e):
    """d c / d rho along an isentrope."""
    c = sound_re(g, a, rho, e)
    return (dcsq_drho(g, a, rho, e)
            + dcsq_de(g, a, rho, e) * de_drho_S(g, a, rho, e)) / (2.0 * c)


@njit(cache=True)
def dc_dS_rho(g, a, rho, e):
    """d c / d S at constant density."""
    z = a * e * e * e / rho
    B = 1.0 + 4.0 * z
    c = sound_re(g, a, rho, e)
    # de/dS at constant rho is the reciprocal of dS/de = B/e
    return dcsq_de(g, a, rho, e) * e / (2.0 * c * B)


@njit(cache=True)
def dptot_dS_rho(g, a, rho, e):
    """d p_tot / d S at constant density."""
    g1 = g - 1.0
    z = a * e * e * e / rho
    return rho * e * (g1 + 4.0 * z / 3.0) / (1.0 + 4.0 * z)


@njit(cache=True)
def dS_slope(g, a, rho, e, drho, dptot):
    """Entropy gradient from density and total-pressure gradients."""
    g1 = g - 1.0
    z = a * e * e * e / rho
    A = g1 + 4.0 * z / 3.0
    B = 1.0 + 4.0 * z
    # dp_tot = g1*e*drho + (rho*A)*de at constant S decomposition
    de = (dptot - g1 * e * drho) / (rho * A)
    return -(A / rho) * drho + (B / e) * de


@njit(cache=True)
def detot_dptot_rho(g, a, rho, e):
    """d e_tot / d p_tot at constant density."""
    g1 = g - 1.0
    z = a * e * e * e / rho
    return (1.0 + 4.0 * z) / (rho * (g1 + 4.0 * z / 3.0))


@njit(cache=True)
def detot_drho_ptot(g, a, rho, e):
    """d e_tot / d rho at constant total pressure."""
    g1 = g - 1.0
    z = a * e * e * e / rho
    A = g1 + 4.0 * z / 3.0
    B = 1.0 + 4.0 * z
    return -(e / rho) * (g1 * B / A + z)


# ----------------------------------------------------------------------
# Adaptive Gauss-Kronrod quadrature along isentropes.
#
# kind 0: integrand (1/w) * dc/dS(w, S)          in the density variable w
# kind 1: integrand c(w, S) / w                  in the density variable w
# kind 2: kind-0 integrand from w = 0 to w = p1, transformed by
#         w = p1 * t^m with m = p2; the t-integrand is smooth at t = 0.
# kind 3: kind-1 integrand from w = 0 to w = p1, same transform.
# ----------------------------------------------------------------------

@njit(cache=True)
def _quad_f(kind, g, a, S, p1, p2, x):
    if kind >= 2:
        t = x
        if t <= 0.0:
            return 0.0
        m = p2
        lw = np.log(p1) + m * np.log(t)
        if lw < -650.0:
            return 0.0
        w = np.exp(lw)
        e = e_of_rho_S(g, a, w, S)
        # Near total vacuum intermediate quantities underflow; the
        # integrand itself vanishes there by construction of the transform.
        if e <= 0.0 or w * e < 1.0e-280:
            return 0.0
        jac = p1 * m * np.exp((m - 1.0) * np.log(t))
        if kind == 2:
            return dc_dS_rho(g, a, w, e) / w * jac
        return sound_re(g, a, w, e) / w * jac
    w = x
    e = e_of_rho_S(g, a, w, S)
    if e <= 0.0 or w * e < 1.0e-280:
        return 0.0
    if kind == 0:
        return dc_dS_rho(g, a, w, e) / w
    return sound_re(g, a, w, e) / w


@njit(cache=True)
def _gk15(kind, g, a, S, p1, p2, lo, hi):
    """One Gauss-Kronrod panel. Returns (integral, error estimate)."""
    c0 = 0.5 * (lo + hi)
    h = 0.5 * (hi - lo)
    fk = 0.0
    fg = 0.0
    for i in range(7):
        x = h * _XGK[i]
        f1 = _quad_f(kind, g, a, S, p1, p2, c0 - x)
        f2 = _quad_f(kind, g, a, S, p1, p2, c0 + x)
        fk += _WGK[i] * (f1 + f2)
        if i % 2 == 1:
            fg += _WG[(i - 1) // 2] * (f1 + f2)
    fc = _quad_f(kind, g, a, S, p1, p2, c0)
    fk += _WGK[7] * fc
    fg += _WG[3] * fc
    return h * fk, abs(h * (fk - fg))


@njit(cache=True)
def quad_adaptive(kind, g, a, S, p1, p2, lo, hi, rtol):
    """Adaptive quadrature. Returns (value, status)."""
    if lo == hi:
        return 0.0, STATUS_OK
    span = abs(hi - lo)
    i0, e0 = _gk15(kind, g, a, S, p1, p2, lo, hi)
    scale = abs(i0) + 1.0e-300
    if e0 <= rtol * scale:
        return i0, STATUS_OK
    stack_lo = np.empty(256)
    stack_hi = np.empty(256)
    stack_lo[0] = lo
    stack_hi[0] = hi
    nst = 1
    total = 0.0
    npanels = 0
    while nst > 0:
        nst -= 1
        x0 = stack_lo[nst]
        x1 = stack_hi[nst]
        val, err = _gk15(kind, g, a, S, p1, p2, x0, x1)
        tol_here = rtol * scale * (abs(x1 - x0) / span) + 1.0e-300
        if err <= tol_here or abs(x1 - x0) <= 1.0e-14 * span:
            total += val
            npanels += 1
            if npanels > 4000:
                return total, STATUS_QUAD
        else:
            if nst + 2 > 256:
                return total, STATUS_QUAD
            xm = 0.5 * (x0 + x1)
            stack_lo[nst] = x0
            stack_hi[nst] = xm
            stack_lo[nst + 1] = xm
            stack_hi[nst + 1] = x1
            nst += 2
    return total, STATUS_OK


@njit(cache=True)
def riemann_integral_c(g, a, S, rho_lo, rho_hi):
    """Integral of c/w dw between two densities on isentrope S.

    A zero lower bound (complete fan down to vacuum) is handled with the
    same endpoint transform used for the K integral.
    """
    if rho_lo > 0.0:
        if abs(rho_hi - rho_lo) <= 0.1 * max(rho_lo, rho_hi):
            # Narrow interval: the integrand is analytic and the 7-point
            # Gauss error bound is far below roundoff here.
            c0 = 0.5 * (rho_lo + rho_hi)
            h = 0.5 * (rho_hi - rho_lo)
            acc = 0.0
            for q in range(7):
                w = c0 + h * _XGL7[q]
                e = e_of_rho_S(g, a, w, S)
                if e <= 0.0:
                    return 0.0, STATUS_EOS
                acc += _WGL7[q] * sound_re(g, a, w, e) / w
            return h * acc, STATUS_OK
        return quad_adaptive(1, g, a, S, 0.0, 0.0, rho_lo, rho_hi, TOL_QUAD)
    g1 = g - 1.0
    m = 2.0 / g1
    if m < 6.0:
        m = 6.0
    return quad_adaptive(3, g, a, S, rho_hi, m, 0.0, 1.0, TOL_QUAD_SING)


@njit(cache=True)
def K_coefficient(g, a, rho, S):
    """Entropy-coupling coefficient K(rho, S).

    K = -(1/(rho c)) dp_tot/dS + integral_0^rho (1/w) dc/dS dw.
    The integral endpoint at w = 0 is regularized by w = rho * t^m.
    """
    g1 = g - 1.0
    e = e_of_rho_S(g, a, rho, S)
    c = sound_re(g, a, rho, e)
    m = 2.0 / g1
    if m < 6.0:
        m = 6.0
    intval, st = quad_adaptive(2, g, a, S, rho, m, 0.0, 1.0, TOL_QUAD_SING)
    return -dptot_dS_rho(g, a, rho, e) / (rho * c) + intval, st


@njit(cache=True)
def _k_integrand_z(g, z):
    """(dc/dS)/sqrt(e) as a function of the radiation ratio z alone."""
    g1 = g - 1.0
    A = g1 + 4.0 * z / 3.0
    B = 1.0 + 4.0 * z
    h = g1 + A * A / B
    q = h + 4.0 * z * A * (2.0 * B - 3.0 * A) / (B * B)
    return q / (2.0 * np.sqrt(h) * B)


# 7-point Gauss-Legendre nodes/weights on [-1, 1] for the table builder.
_XGL7 = np.array([-0.9491079123427585, -0.7415311855993945,
                  -0.4058451513773972, 0.0,
                  0.4058451513773972, 0.7415311855993945,
                  0.9491079123427585])
_WGL7 = np.array([0.1294849661688697, 0.2797053914892766,
                  0.3818300505051189, 0.4179591836734694,
                  0.3818300505051189, 0.2797053914892766,
                  0.1294849661688697])

# 40-point Gauss-Legendre rule for the boundary-layer quadrature.
_XGL40, _WGL40 = np.polynomial.legendre.leggauss(40)


@njit(cache=True)
def _k_adiabatic(g, z):
    """Limit of I/sqrt(e) for a thin integration layer, q/(sqrt(h) A)."""
    g1 = g - 1.0
    A = g1 + 4.0 * z / 3.0
    B = 1.0 + 4.0 * z
    h = g1 + A * A / B
    q = h + 4.0 * z * A * (2.0 * B - 3.0 * A) / (B * B)
    return q / (np.sqrt(h) * A)


@njit(cache=True)
def _k_boundary_layer(g, z):
    """T(ln z) by exact substitution v = z|1 - e^{-+u}| along the isentrope.

    Valid when the kernel weight decays within a thin layer below the
    target density, which is exactly the regime where node-to-node
    marching is stiff.  The weight in v is exp(2v/(3(3g-4)) * sgn) times
    a slowly varying power, so a fixed Gauss rule on [0, vmax] converges
    to machine accuracy.
    """
    g1 = g - 1.0
    s3 = 3.0 * g - 4.0
    sa = abs(s3)
    vmax = 52.5 * sa
    if s3 > 0.0:
        lim = 0.45 * z
        if vmax > lim:
            vmax = lim
    p = g1 / (2.0 * s3)
    acc = 0.0
    for q in range(40):
        v = 0.5 * vmax * (1.0 + _XGL40[q])
        if s3 > 0.0:
            zp = z - v
            wv = _k_integrand_z(g, zp) * (1.0 + 4.0 * zp) / s3
            f = wv * np.exp(-2.0 * v / (3.0 * s3)
                            + p * np.log(1.0 - v / z)) / zp
        else:
            zp = z + v
            wv = _k_integrand_z(g, zp) * (1.0 + 4.0 * zp) / s3
            f = -wv * np.exp(2.0 * v / (3.0 * s3)
                             + p * np.log(1.0 + v / z)) / zp
        acc += _WGL40[q] * f
    return 0.5 * vmax * acc

_KTAB_X0 = -45.0
_KTAB_X1 = 45.0
_KTAB_N = 4501


@njit(cache=True)
def build_k_table(g, a):
    """Tabulate T(x) = I(rho,S)/sqrt(e) against x = ln z, z = a e^3/rho.

    I is the singular part of K, int_0^rho (1/w) dc/dS dw.  Along an
    isentrope z obeys d ln z / d ln rho = (3g-4)/(1+4z) and ln e is an
    explicit function of z, so I/sqrt(e) collapses to one variable.  The
    table marches the cumulative integral node to node in the stable
    direction and stores values plus exact derivatives for Hermite
    interpolation.  Layout: [x0, dx, n, T[0..n-1], T'[0..n-1]].
    An empty (size 3) array means no table: ideal gas, or gamma so close
    to 4/3 that the change of variable degenerates.
    """
    g1 = g - 1.0
    s3 = 3.0 * g - 4.0
    if a == 0.0 or abs(s3) < 1.0e-2:
        return np.zeros(3)
    n = _KTAB_N
    dx = (_KTAB_X1 - _KTAB_X0) / (n - 1)
    tab = np.empty(3 + 2 * n)
    tab[0] = _KTAB_X0
    tab[1] = dx
    tab[2] = n
    T = np.empty(n)
    # phi(x) = (g1*x + (4/3)e^x) / (2*s3); weight w(x) = gk(z)*B/s3.
    # The node-to-node march is accurate while |phi'(z)|*dx is small;
    # above the threshold the kernel concentrates in a thin layer and
    # the boundary-layer quadrature takes over.
    i_bl = n
    for i in range(n):
        z = np.exp(_KTAB_X0 + i * dx)
        if (g1 + 4.0 * z / 3.0) / (2.0 * abs(s3)) * dx >= 2.0:
            i_bl = i
            break
    for i in range(i_bl, n):
        T[i] = _k_boundary_layer(g, np.exp(_KTAB_X0 + i * dx))
    if s3 > 0.0:
        # Vacuum end is z -> 0; seed with the pure-gas limit at x0 and
        # march upward to the boundary-layer region.
        h0 = g1 + g1 * g1
        if i_bl > 0:
            T[0] = np.sqrt(h0) / g1
        for i in range(min(i_bl, n - 1) - 1 + 1):
            if i + 1 >= i_bl:
                break
            xs = _KTAB_X0 + i * dx
            xt = xs + dx
            zs = np.exp(xs)
            zt = np.exp(xt)
            scale = np.exp((g1 * (xs - xt) + 4.0 * (zs - zt) / 3.0)
                           / (2.0 * s3))
            seg = 0.0
            for q in range(7):
                xq = 0.5 * (xs + xt) + 0.5 * dx * _XGL7[q]
                zq = np.exp(xq)
                wq = _k_integrand_z(g, zq) * (1.0 + 4.0 * zq) / s3
                fac = np.exp((g1 * (xq - xt) + 4.0 * (zq - zt) / 3.0)
                             / (2.0 * s3))
                seg += _WGL7[q] * fac * wq
            T[i + 1] = scale * T[i] + 0.5 * dx * seg
    else:
        # gamma < 4/3: vacuum end is z -> +infinity; march downward from
        # the boundary-layer region (which always covers the top node).
        for i in range(min(i_bl, n - 1) - 1, -1, -1):
            xt = _KTAB_X0 + i * dx
            xs = xt + dx
            zs = np.exp(xs)
            zt = np.exp(xt)
            scale = np.exp((g1 * (xs - xt) + 4.0 * (zs - zt) / 3.0)
                           / (2.0 * s3))
            seg = 0.0
            for q in range(7):
                xq = 0.5 * (xs + xt) + 0.5 * dx * _XGL7[q]
                zq = np.exp(xq)
                wq = _k_integrand_z(g, zq) * (1.0 + 4.0 * zq) / s3
                fac = np.exp((g1 * (xq - xt) + 4.0 * (zq - zt) / 3.0)
                             / (2.0 * s3))
                seg += _WGL7[q] * fac * wq
            # Signed integral from xs down to xt.
            T[i] = scale * T[i + 1] - 0.5 * dx * seg
    for i in range(n):
        x = _KTAB_X0 + i * dx
        z = np.exp(x)
        A = g1 + 4.0 * z / 3.0
        phip = A / (2.0 * s3)
        tab[3 + i] = T[i]
        if abs(phip) > 1.0e8:
            # w - phip*T cancels catastrophically here; the derivative is
            # the adiabatic profile's to relative O(1/phip).
            zl = z * (1.0 - 1.0e-6)
            zr = z * (1.0 + 1.0e-6)
            tab[3 + n + i] = (_k_adiabatic(g, zr) - _k_adiabatic(g, zl)) \
                / (2.0e-6)
        else:
            w = _k_integrand_z(g, z) * (1.0 + 4.0 * z) / s3
            tab[3 + n + i] = w - phip * T[i]
    return tab


@njit(cache=True)
def K_fast(g, a, rho, S, tab):
    """K(rho, S) via the per-model table; falls back to quadrature.

    Returns (value, status).
    """
    g1 = g - 1.0
    e = e_of_rho_S(g, a, rho, S)
    if e <= 0.0:
        return 0.0, STATUS_EOS
    c = sound_re(g, a, rho, e)
    base = -dptot_dS_rho(g, a, rho, e) / (rho * c)
    if a == 0.0:
        return base + c / g1, STATUS_OK
    n = int(tab[2])
    if n < 4:
        return K_coefficient(g, a, rho, S)
    z = a * e * e * e / rho
    x = np.log(z)
    x0 = tab[0]
    dx = tab[1]
    x1 = x0 + (n - 1) * dx
    if x < x0:
        # Pure-gas regime; radiation corrections are O(z) < 1e-19 here.
        return base + c / g1, STATUS_OK
    if x > x1:
        return K_coefficient(g, a, rho, S)
    idx = int((x - x0) / dx)
    if idx > n - 2:
        idx = n - 2
    xl = x0 + idx * dx
    t = (x - xl) / dx
    Tl = tab[3 + idx]
    Tr = tab[3 + idx + 1]
    Dl = tab[3 + n + idx] * dx
    Dr = tab[3 + n + idx + 1] * dx
    t2 = t * t
    t3 = t2 * t
    T = (2.0 * t3 - 3.0 * t2 + 1.0) * Tl + (t3 - 2.0 * t2 + t) * Dl \
        + (-2.0 * t3 + 3.0 * t2) * Tr + (t3 - t2) * Dr
    return base + np.sqrt(e) * T, STATUS_OK


@njit(cache=True)
def K_increment(g, a, S, K1, r1, r2):
    """K at density r2 from a known K at r1 on the same isentrope.

    Only the short segment [r1, r2] is integrated; the boundary term is
    swapped from r1 to r2.  Much cheaper than a fresh evaluation when the
    two densities are close.
    """
    e1 = e_of_rho_S(g, a, r1, S)
    e2 = e_of_rho_S(g, a, r2, S)
    if e1 <= 0.0 or e2 <= 0.0:
        return 0.0, STATUS_EOS
    c1 = sound_re(g, a, r1, e1)
    c2 = sound_re(g, a, r2, e2)
    inc, st = quad_adaptive(0, g, a, S, 0.0, 0.0, r1, r2, TOL_QUAD)
    val = K1 + dptot_dS_rho(g, a, r1, e1) / (r1 * c1) \
        - dptot_dS_rho(g, a, r2, e2) / (r2 * c2) + inc
    return val, st


# ----------------------------------------------------------------------
# Isentrope and Hugoniot inversions.
# ----------------------------------------------------------------------

@njit(cache=True)
def rho_on_isentrope_p(g, a, S, ptarget, hint):
    """Density on isentrope S where the total pressure equals ptarget.

    Safeguarded Newton; p_tot is strictly increasing in rho along an
    isentrope with slope c^2. Returns (rho, status).
    """
    # Expand a bracket around the hint.
    lo = hint
    hi = hint
    e = e_of_rho_S(g, a, hint, S)
    p0 = ptot_re(g, a, hint, e)
    if p0 < ptarget:
        for _ in range(200):
            hi *= 2.0
            e = e_of_rho_S(g, a, hi, S)
            if ptot_re(g, a, hi, e) >= ptarget:
                break
        else:
            return hint, STATUS_BRACKET
        lo = hi * 0.5
    elif p0 > ptarget:
        for _ in range(400):
            lo *= 0.5
            e = e_of_rho_S(g, a, lo, S)
            if ptot_re(g, a, lo, e) <= ptarget:
                break
        else:
            return hint, STATUS_BRACKET
        hi = lo * 2.0
    else:
        return hint, STATUS_OK
    r = 0.5 * (lo + hi)
    for _ in range(200):
        e = e_of_rho_S(g, a, r, S)
        p = ptot_re(g, a, r, e)
        f = p - ptarget
        if abs(f) <= 1.0e-13 * ptarget:
            return r, STATUS_OK
        if f > 0.0:
            hi = r
        else:
            lo = r
        rn = r - f / csq_re(g, a, r, e)
        if rn <= lo or rn >= hi:
            rn = 0.5 * (lo + hi)
        if abs(rn - r) <= 1.0e-15 * r:
            return rn, STATUS_OK
        r = rn
    return r, STATUS_ROOT


@njit(cache=True)
def rho_on_isentrope_c(g, a, S, ctarget, lo, hi):
    """Density on isentrope S where the sound speed equals ctarget.

    c is strictly increasing in rho along an isentrope; lo/hi must bracket.
    Returns (rho, status).
    """
    r = 0.5 * (lo + hi)
    for _ in range(200):
        e = e_of_rho_S(g, a, r, S)
        c = sound_re(g, a, r, e)
        f = c - ctarget
        if abs(f) <= 1.0e-13 * ctarget:
            return r, STATUS_OK
        if f > 0.0:
            hi = r
        else:
            lo = r
        rn = r - f / dc_drho_S(g, a, r, e)
        if rn <= lo or rn >= hi:
            rn = 0.5 * (lo + hi)
        if abs(rn - r) <= 1.0e-15 * r:
            return rn, STATUS_OK
        r = rn
    return r, STATUS_ROOT


@njit(cache=True)
def hugoniot_rho(g, a, ps, pbar, rbar):
    """Post-shock density from the jump condition.

    Solves e_tot(rho, ps) - e_tot(rbar, pbar)
           = 0.5 (ps + pbar) (rho - rbar) / (rho rbar)
    for rho > rbar (compressive branch, ps > pbar). Returns (rho, status).
    """
    ebar = e_from_rho_ptot(g, a, rbar, pbar)
    if ebar < 0.0:
        return rbar, STATUS_EOS
    et_bar = etot_re(g, a, rbar, ebar)
    # Bracket: G(rbar) > 0, G(inf) < 0.
    lo = rbar
    hi = rbar * 2.0
    for _ in range(200):
        e = e_from_rho_ptot(g, a, hi, ps)
        gval = etot_re(g, a, hi, e) - et_bar \
            - 0.5 * (ps + pbar) * (hi - rbar) / (hi * rbar)
        if gval < 0.0:
            break
        hi *= 2.0
    else:
        return rbar, STATUS_BRACKET
    r = 0.5 * (lo + hi)
    scale = et_bar + abs(ps + pbar) / rbar
    for _ in range(200):
        e = e_from_rho_ptot(g, a, r, ps)
        gval = etot_re(g, a, r, e) - et_bar \
            - 0.5 * (ps + pbar) * (r - rbar) / (r * rbar)
        if abs(gval) <= 1.0e-14 * scale:
            return r, STATUS_OK
        if gval > 0.0:
            lo = r
        else:
            hi = r
        gp = detot_drho_ptot(g, a, r, e) - 0.5 * (ps + pbar) / (r * r)
        rn = r - gval / gp
        if rn <= lo or rn >= hi:
            rn = 0.5 * (lo + hi)
        if abs(rn - r) <= 1.0e-15 * r:
            return rn, STATUS_OK
        r = rn
    return r, STATUS_ROOT


# ----------------------------------------------------------------------
# Wave curves and the exact Riemann solver.
# ----------------------------------------------------------------------

@njit(cache=True)
def _wave_side(g, a, side, rside, uside, pside, Sside, cside, ps):
    """Velocity behind the wave on one side for trial star pressure ps.

    side = -1 for the left (1-)wave, +1 for the right (3-)wave.
    Returns (u, du/dp, rho_star_side, c_star_side, wavetype, status).
    """
    if ps < pside * (1.0 - EPS_WAVE):
        # Rarefaction: follow the isentrope down to ps.
        r1, st = rho_on_isentrope_p(g, a, Sside, ps, rside)
        if st != STATUS_OK:
            return 0.0, 0.0, rside, cside, WAVE_RARE, st
        e1 = e_of_rho_S(g, a, r1, Sside)
        c1 = sound_re(g, a, r1, e1)
        ival, st = riemann_integral_c(g, a, Sside, r1, rside)
        if st != STATUS_OK:
            return 0.0, 0.0, r1, c1, WAVE_RARE, st
        if side < 0:
            u = uside + ival
            dudp = -1.0 / (r1 * c1)
        else:
            u = uside - ival
            dudp = 1.0 / (r1 * c1)
        return u, dudp, r1, c1, WAVE_RARE, STATUS_OK
    elif ps > pside * (1.0 + EPS_WAVE):
        # Shock.
        r1, st = hugoniot_rho(g, a, ps, pside, rside)
        if st != STATUS_OK:
            return 0.0, 0.0, rside, cside, WAVE_SHOCK, st
        dv = 1.0 / rside - 1.0 / r1
        phi = np.sqrt((ps - pside) * dv)
        e1 = e_from_rho_ptot(g, a, r1, ps)
        c1 = sound_re(g, a, r1, e1)
        # dPhi/dps along the Hugoniot (pre-state fixed):
        # H1 = d rho / d ps from the jump relation.
        denom = detot_drho_ptot(g, a, r1, e1) - (ps + pside) / (2.0 * r1 * r1)
        h1 = -(detot_dptot_rho(g, a, r1, e1)
               - (r1 - rside) / (2.0 * r1 * rside)) / denom
        phi1 = (dv + (ps - pside) * h1 / (r1 * r1)) / (2.0 * phi)
        if side < 0:
            u = uside - phi
            dudp = -phi1
        else:
            u = uside + phi
            dudp = phi1
        return u, dudp, r1, c1, WAVE_SHOCK, STATUS_OK
    else:
        if side < 0:
            return uside, -1.0 / (rside * cside), rside, cside, WAVE_NONE, STATUS_OK
        return uside, 1.0 / (rside * cside), rside, cside, WAVE_NONE, STATUS_OK


@njit(cache=True)
def solve_star(g, a, rL, uL, pL, rR, uR, pR):
    """Exact Riemann solver star state.

    Returns (status, ps, us, r1, c1, r2, c2, ltype, rtype, niter).
    """
    eL = e_from_rho_ptot(g, a, rL, pL)
    eR = e_from_rho_ptot(g, a, rR, pR)
    if eL < 0.0 or eR < 0.0:
        return STATUS_EOS, 0.0, 0.0, rL, 0.0, rR, 0.0, WAVE_NONE, WAVE_NONE, 0
    SL = entropy_re(g, a, rL, eL)
    SR = entropy_re(g, a, rR, eR)
    cL = sound_re(g, a, rL, eL)
    cR = sound_re(g, a, rR, eR)

    # Vacuum check: if the full rarefaction fan velocities do not meet.
    # The complete-fan integral int_0^rho c/w dw is bounded below by
    # c/theta with theta = max((gamma-1)/2, 1/6), since d ln c/d ln rho
    # along an isentrope never exceeds theta (gas- and radiation-dominated
    # limits attain the two branches).  The cheap bound settles almost
    # every call; the quadrature runs only when it is inconclusive.
    if uR - uL > 0.0:
        thmax = 0.5 * (g - 1.0)
        if thmax < 1.0 / 6.0:
            thmax = 1.0 / 6.0
        if uR - uL >= (cL + cR) / thmax:
            ivl, st1 = riemann_integral_c(g, a, SL, 0.0, rL)
            ivr, st2 = riemann_integral_c(g, a, SR, 0.0, rR)
            if st1 != STATUS_OK or st2 != STATUS_OK:
                return STATUS_QUAD, 0.0, 0.0, rL, cL, rR, cR, WAVE_NONE, WAVE_NONE, 0
            if uL + ivl <= uR - ivr:
                return STATUS_VACUUM, 0.0, 0.0, rL, cL, rR, cR, WAVE_NONE, WAVE_NONE, 0

    pmin = pL if pL < pR else pR
    pmax = pL if pL > pR else pR

    # Fast path: linearized guess plus pure Newton.  f(p) = uL(p) - uR(p)
    # is strictly decreasing in p, so the visited points maintain a
    # bracket; any irregularity falls through to the safeguarded loop.
    rcbar = 0.25 * (rL + rR) * (cL + cR)
    p = 0.5 * (pL + pR) - 0.5 * (uR - uL) * rcbar
    if p < 1.0e-12 * pmin:
        p = 1.0e-12 * pmin
    flo = 0.0
    fhi = np.inf
    for it in range(8):
        ul, dul, r1, c1, lt, st = _wave_side(g, a, -1, rL, uL, pL, SL, cL, p)
        ur, dur, r2, c2, rt, st2 = _wave_side(g, a, 1, rR, uR, pR, SR, cR, p)
        if st != STATUS_OK or st2 != STATUS_OK:
            break
        f = ul - ur
        us = 0.5 * (ul + ur)
        if abs(f) <= TOL_STAR * max(1.0, abs(us)):
            return STATUS_OK, p, us, r1, c1, r2, c2, lt, rt, it + 1
        if f > 0.0:
            flo = p
        else:
            fhi = p
        df = dul - dur
        if df >= 0.0:
            break
        pn = p - f / df
        if pn <= flo or pn >= fhi or pn <= 0.0:
            break
        p = pn

    plo = 1.0e-13 * pmin
    phi_hi = pmax

    ul, _, _, _, _, st = _wave_side(g, a, -1, rL, uL, pL, SL, cL, pmin)
    ur, _, _, _, _, st2 = _wave_side(g, a, 1, rR, uR, pR, SR, cR, pmin)
    if st != STATUS_OK or st2 != STATUS_OK:
        return STATUS_ROOT, 0.0, 0.0, rL, cL, rR, cR, WAVE_NONE, WAVE_NONE, 0
    fmin = ul - ur
    if fmin < 0.0:
        # Root is below pmin (two rarefactions).
        phi_hi = pmin
        plo = 1.0e-13 * pmin
    else:
        ul, _, _, _, _, st = _wave_side(g, a, -1, rL, uL, pL, SL, cL, pmax)
        ur, _, _, _, _, st2 = _wave_side(g, a, 1, rR, uR, pR, SR, cR, pmax)
        if st != STATUS_OK or st2 != STATUS_OK:
            return STATUS_ROOT, 0.0, 0.0, rL, cL, rR, cR, WAVE_NONE, WAVE_NONE, 0
        fmax = ul - ur
        if fmax > 0.0:
            # Root above pmax (two shocks): expand upward.
            plo = pmax
            phi_hi = 2.0 * pmax
            ok = False
            for _ in range(200):
                ul, _, _, _, _, st = _wave_side(g, a, -1, rL, uL, pL, SL, cL, phi_hi)
                ur, _, _, _, _, st2 = _wave_side(g, a, 1, rR, uR, pR, SR, cR, phi_hi)
                if st != STATUS_OK or st2 != STATUS_OK:
                    return STATUS_ROOT, 0.0, 0.0, rL, cL, rR, cR, WAVE_NONE, WAVE_NONE, 0
                if ul - ur < 0.0:
                    ok = True
                    break
                plo = phi_hi
                phi_hi *= 2.0
            if not ok:
                return STATUS_BRACKET, 0.0, 0.0, rL, cL, rR, cR, WAVE_NONE, WAVE_NONE, 0
        else:
            plo = pmin
            phi_hi = pmax

    p = 0.5 * (pL + pR)
    if p <= plo or p >= phi_hi:
        # Clamp just inside the bracket rather than jumping to its middle;
        # for weak waves the root hugs the clamped end.
        width = phi_hi - plo
        if p >= phi_hi:
            p = phi_hi - 1.0e-9 * width
        else:
            p = plo + 1.0e-9 * width
    niter = 0
    ul = uL
    ur = uR
    r1 = rL
    c1 = cL
    r2 = rR
    c2 = cR
    lt = WAVE_NONE
    rt = WAVE_NONE
    for it in range(200):
        niter = it + 1
        ul, dul, r1, c1, lt, st = _wave_side(g, a, -1, rL, uL, pL, SL, cL, p)
        ur, dur, r2, c2, rt, st2 = _wave_side(g, a, 1, rR, uR, pR, SR, cR, p)
        if st != STATUS_OK or st2 != STATUS_OK:
            return STATUS_ROOT, 0.0, 0.0, rL, cL, rR, cR, WAVE_NONE, WAVE_NONE, niter
        f = ul - ur
        us = 0.5 * (ul + ur)
        if abs(f) <= TOL_STAR * max(1.0, abs(us)):
            return STATUS_OK, p, us, r1, c1, r2, c2, lt, rt, niter
        if f > 0.0:
            plo = p
        else:
            phi_hi = p
        df = dul - dur
        pn = p - f / df if df != 0.0 else 0.5 * (plo + phi_hi)
        if pn <= plo or pn >= phi_hi:
            pn = 0.5 * (plo + phi_hi)
        p = pn
    return STATUS_ROOT, p, 0.5 * (ul + ur), r1, c1, r2, c2, lt, rt, niter


@njit(cache=True)
def wave_speeds(g, a, rL, uL, pL, rR, uR, pR,
                ps, us, r1, c1, r2, c2, ltype, rtype):
    """Head/tail speeds: (sL_head, sL_tail, sR_tail, sR_head)."""
    eL = e_from_rho_ptot(g, a, rL, pL)
    eR = e_from_rho_ptot(g, a, rR, pR)
    cL = sound_re(g, a, rL, eL)
    cR = sound_re(g, a, rR, eR)
    if ltype == WAVE_SHOCK:
        sig = (r1 * us - rL * uL) / (r1 - rL)
        slh = sig
        slt = sig
    else:
        slh = uL - cL
        slt = us - c1
    if rtype == WAVE_SHOCK:
        sig = (r2 * us - rR * uR) / (r2 - rR)
        srt = sig
        srh = sig
    else:
        srt = us + c2
        srh = uR + cR
    return slh, slt, srt, srh


@njit(cache=True)
def _fan_state_left(g, a, rL, uL, pL, SL, r1, xi):
    """State inside a left rarefaction fan at similarity coordinate xi.

    Solves u(rho) - c(rho) = xi for rho in [r1, rL]. Returns (rho, u, p, st).
    """
    lo = r1
    hi = rL
    r = 0.5 * (lo + hi)
    u = uL
    for _ in range(120):
        e = e_of_rho_S(g, a, r, SL)
        c = sound_re(g, a, r, e)
        ival, st = riemann_integral_c(g, a, SL, r, rL)
        if st != STATUS_OK:
            return r, 0.0, 0.0, st
        u = uL + ival
        f = u - c - xi
        if abs(f) <= 1.0e-12 * (1.0 + abs(xi)):
            return r, u, ptot_re(g, a, r, e), STATUS_OK
        if f > 0.0:
            # u - c decreases with rho? u decreases, c increases => f decreasing
            lo = r
        else:
            hi = r
        dfdr = -c / r - dc_drho_S(g, a, r, e)
        rn = r - f / dfdr
        if rn <= lo or rn >= hi:
            rn = 0.5 * (lo + hi)
        if abs(rn - r) <= 1.0e-15 * r:
            e = e_of_rho_S(g, a, rn, SL)
            ival, st = riemann_integral_c(g, a, SL, rn, rL)
            return rn, uL + ival, ptot_re(g, a, rn, e), st
        r = rn
    return r, u, ptot_re(g, a, r, e), STATUS_ROOT


@njit(cache=True)
def _fan_state_right(g, a, rR, uR, pR, SR, r2, xi):
    """State inside a right rarefaction fan at similarity coordinate xi."""
    lo = r2
    hi = rR
    r = 0.5 * (lo + hi)
    u = uR
    for _ in range(120):
        e = e_of_rho_S(g, a, r, SR)
        c = sound_re(g, a, r, e)
        ival, st = riemann_integral_c(g, a, SR, r, rR)
        if st != STATUS_OK:
            return r, 0.0, 0.0, st
        u = uR - ival
        f = u + c - xi
        # u + c increases with rho (u increases toward uR, c increases)
        if abs(f) <= 1.0e-12 * (1.0 + abs(xi)):
            return r, u, ptot_re(g, a, r, e), STATUS_OK
        if f > 0.0:
            hi = r
        else:
            lo = r
        dfdr = c / r + dc_drho_S(g, a, r, e)
        rn = r - f / dfdr
        if rn <= lo or rn >= hi:
            rn = 0.5 * (lo + hi)
        if abs(rn - r) <= 1.0e-15 * r:
            e = e_of_rho_S(g, a, rn, SR)
            ival, st = riemann_integral_c(g, a, SR, rn, rR)
            return rn, uR - ival, ptot_re(g, a, rn, e), st
        r = rn
    return r, u, ptot_re(g, a, r, e), STATUS_ROOT


@njit(cache=True)
def sample_fan(g, a, rL, uL, pL, rR, uR, pR,
               ps, us, r1, c1, r2, c2, ltype, rtype, xi):
    """Self-similar Riemann solution at coordinate xi = x/t.

    Returns (rho, u, p_tot, status).
    """
    slh, slt, srt, srh = wave_speeds(g, a, rL, uL, pL, rR, uR, pR,
                                     ps, us, r1, c1, r2, c2, ltype, rtype)
    if xi <= slh:
        return rL, uL, pL, STATUS_OK
    if xi >= srh:
        return rR, uR, pR, STATUS_OK
    if xi < slt:
        eL = e_from_rho_ptot(g, a, rL, pL)
        SL = entropy_re(g, a, rL, eL)
        r, u, p, st = _fan_state_left(g, a, rL, uL, pL, SL, r1, xi)
        return r, u, p, st
    if xi > srt:
        eR = e_from_rho_ptot(g, a, rR, pR)
        SR = entropy_re(g, a, rR, eR)
        r, u, p, st = _fan_state_right(g, a, rR, uR, pR, SR, r2, xi)
        return r, u, p, st
    if xi <= us:
        return r1, us, ps, STATUS_OK
    return r2, us, ps, STATUS_OK


# ----------------------------------------------------------------------
# Resolved time derivatives at the cell interface (generalized Riemann
# problem with piecewise-linear initial data). The instantaneous state
# W0 = (rho, u, p_tot) at x/t = 0 and its time derivative are produced
# from the wave fan plus one 2x2 linear system whose rows come from the
# wave on each side.
# ----------------------------------------------------------------------

@njit(cache=True)
def _quasi_linear(g, a, r, u, p, dr, du, dp):
    """Time derivatives of (rho, u, p_tot) in smooth flow, from slopes."""
    e = e_from_rho_ptot(g, a, r, p)
    c2 = csq_re(g, a, r, e)
    drdt = -(u * dr + r * du)
    dudt = -(u * du + dp / r)
    dpdt = -(u * dp + r * c2 * du)
    return drdt, dudt, dpdt


@njit(cache=True)
def _rare_row_left(g, a, rL, uL, pL, eL, cL, SL, drL, duL, dpL,
                   rstar, cstar, ktab):
    """Left-rarefaction coefficient row (a, b, d, status).

    rstar/cstar: state at the downstream evaluation point (fan tail for
    the star case, sonic point for the sonic case).
    """
    dSL = dS_slope(g, a, rL, eL, drL, dpL)
    betaL = uL - cL
    ratio_star = rstar * cstar / (rL * cL)
    b = 1.0 / (rstar * cstar)
    if dSL == 0.0:
        # Entropy-flat data: the coupling terms vanish identically.
        psi = duL + dpL / (rL * cL)
        d = -cL * np.sqrt(ratio_star) * psi
        return 1.0, b, d, STATUS_OK
    KL, st = K_fast(g, a, rL, SL, ktab)
    if st != STATUS_OK:
        return 1.0, b, 0.0, st
    psi = duL + dpL / (rL * cL) + KL * dSL
    a_head = KL * cL * dSL
    # 3-point Lobatto in the sound-speed variable from cL to cstar.
    cmid = 0.5 * (cL + cstar)
    lo = rstar if rstar < rL else rL
    hi = rstar if rstar > rL else rL
    rmid, st = rho_on_isentrope_c(g, a, SL, cmid, lo, hi)
    if st != STATUS_OK:
        return 1.0, b, 0.0, st
    emid = e_of_rho_S(g, a, rmid, SL)
    Kmid, st1 = K_fast(g, a, rmid, SL, ktab)
    Kstar, st2 = K_fast(g, a, rstar, SL, ktab)
    if st1 != STATUS_OK or st2 != STATUS_OK:
        return 1.0, b, 0.0, st1 if st1 != STATUS_OK else st2
    estar = e_of_rho_S(g, a, rstar, SL)

    def_f0 = _rare_integrand(g, a, rL, cL, KL, cL, dSL, betaL, rL, cL,
                             eL)
    def_fm = _rare_integrand(g, a, rmid, cmid, Kmid, cL, dSL, betaL, rL, cL,
                             emid)
    def_f1 = _rare_integrand(g, a, rstar, cstar, Kstar, cL, dSL, betaL,
                             rL, cL, estar)
    integral = (cstar - cL) / 6.0 * (def_f0 + 4.0 * def_fm + def_f1)
    bigB = (a_head - 2.0 * cL * psi) / betaL - integral
    a_star = Kstar * cL * dSL * ratio_star
    d = 0.5 * a_star + 0.5 * betaL * np.sqrt(ratio_star) * bigB
    return 1.0, b, d, STATUS_OK


@njit(cache=True)
def _rare_integrand(g, a, r, c, Kr, cL, dSL, betaL, rL, cLL, e):
    """Integrand of the entropy-coupling integral across a left fan."""
    ratio = r * c / (rL * cLL)
    aval = Kr * cL * dSL * ratio
    dtda = (1.0 / betaL) / np.sqrt(ratio)
    dcdr = dc_drho_S(g, a, r, e)
    return (0.5 / c) * dtda * aval * (1.0 + (c / r) / dcdr)


@njit(cache=True)
def _rare_row_right(g, a, rR, uR, pR, eR, cR, SR, drR, duR, dpR,
                    rstar, cstar, ktab):
    """Right-rarefaction coefficient row (a, b, d, status)."""
    dSR = dS_slope(g, a, rR, eR, drR, dpR)
    betaR = uR + cR
    ratio_star = rstar * cstar / (rR * cR)
    b = -1.0 / (rstar * cstar)
    if dSR == 0.0:
        psi = duR - dpR / (rR * cR)
        d = -cR * np.sqrt(ratio_star) * psi
        return 1.0, b, d, STATUS_OK
    KR, st = K_fast(g, a, rR, SR, ktab)
    if st != STATUS_OK:
        return 1.0, b, 0.0, st
    psi = duR - dpR / (rR * cR) - KR * dSR
    a_head = KR * cR * dSR
    cmid = 0.5 * (cR + cstar)
    lo = rstar if rstar < rR else rR
    hi = rstar if rstar > rR else rR
    rmid, st = rho_on_isentrope_c(g, a, SR, cmid, lo, hi)
    if st != STATUS_OK:
        return 1.0, b, 0.0, st
    emid = e_of_rho_S(g, a, rmid, SR)
    Kmid, st1 = K_fast(g, a, rmid, SR, ktab)
    Kstar, st2 = K_fast(g, a, rstar, SR, ktab)
    if st1 != STATUS_OK or st2 != STATUS_OK:
        return 1.0, b, 0.0, st1 if st1 != STATUS_OK else st2
    estar = e_of_rho_S(g, a, rstar, SR)

    f0 = _rare_integrand_r(g, a, rR, cR, KR, cR, dSR, betaR, rR, cR, eR)
    fm = _rare_integrand_r(g, a, rmid, cmid, Kmid, cR, dSR, betaR, rR, cR,
                           emid)
    f1 = _rare_integrand_r(g, a, rstar, cstar, Kstar, cR, dSR, betaR,
                           rR, cR, estar)
    integral = (cstar - cR) / 6.0 * (f0 + 4.0 * fm + f1)
    bigB = (a_head + 2.0 * cR * psi) / betaR - integral
    a_star = Kstar * cR * dSR * ratio_star
    d = 0.5 * a_star + 0.5 * betaR * np.sqrt(ratio_star) * bigB
    return 1.0, b, d, STATUS_OK


@njit(cache=True)
def _rare_integrand_r(g, a, r, c, Kr, cR, dSR, betaR, rR, cRR, e):
    ratio = r * c / (rR * cRR)
    aval = Kr * cR * dSR * ratio
    dtda = (1.0 / betaR) / np.sqrt(ratio)
    dcdr = dc_drho_S(g, a, r, e)
    return (0.5 / c) * dtda * aval * (1.0 + (c / r) / dcdr)


@njit(cache=True)
def _shock_phis(g, a, ps, pbar, rbar, rpost, epost, ebar):
    """Phi derivatives and H coefficients of the shock relation.

    Returns (phi1, phi2, phi3, h1, h2, h3).
    """
    dv = 1.0 / rbar - 1.0 / rpost
    phi = np.sqrt((ps - pbar) * dv)
    denom = detot_drho_ptot(g, a, rpost, epost) \
        - (ps + pbar) / (2.0 * rpost * rpost)
    h1 = -(detot_dptot_rho(g, a, rpost, epost)
           - (rpost - rbar) / (2.0 * rpost * rbar)) / denom
    h2 = (detot_dptot_rho(g, a, rbar, ebar)
          + (rpost - rbar) / (2.0 * rpost * rbar)) / denom
    h3 = (detot_drho_ptot(g, a, rbar, ebar)
          - (ps + pbar) / (2.0 * rbar * rbar)) / denom
    dphi_dp = dv / (2.0 * phi)
    dphi_dr = (ps - pbar) / (2.0 * phi * rpost * rpost)
    dphi_dpbar = -dv / (2.0 * phi)
    dphi_drbar = -(ps - pbar) / (2.0 * phi * rbar * rbar)
    phi1 = dphi_dp + dphi_dr * h1
    phi2 = dphi_dpbar + dphi_dr * h2
    phi3 = dphi_drbar + dphi_dr * h3
    return phi1, phi2, phi3, h1, h2, h3


@njit(cache=True)
def _shock_row_right(g, a, rR, uR, pR, eR, cR, drR, duR, dpR,
                     ps, us, r2, c2, sig):
    """Right-shock coefficient row (a, b, d)."""
    e2 = e_from_rho_ptot(g, a, r2, ps)
    phi1, phi2, phi3, h1, h2, h3 = _shock_phis(g, a, ps, pR, rR, r2, e2, eR)
    arow = 1.0 + r2 * (sig - us) * phi1
    brow = -(sig - us) / (r2 * c2 * c2) - phi1
    drow = dpR * (-1.0 / rR + (sig - uR) * phi2) \
        + duR * ((sig - uR) - rR * cR * cR * phi2 - rR * phi3) \
        + drR * (sig - uR) * phi3
    return arow, brow, drow


@njit(cache=True)
def _shock_row_left(g, a, rL, uL, pL, eL, cL, drL, duL, dpL,
                    ps, us, r1, c1, sig):
    """Left-shock coefficient row (a, b, d)."""
    e1 = e_from_rho_ptot(g, a, r1, ps)
    phi1, phi2, phi3, h1, h2, h3 = _shock_phis(g, a, ps, pL, rL, r1, e1, eL)
    arow = 1.0 - r1 * (sig - us) * phi1
    brow = -(sig - us) / (r1 * c1 * c1) + phi1
    drow = dpL * (-1.0 / rL - (sig - uL) * phi2) \
        + duL * ((sig - uL) + rL * cL * cL * phi2 + rL * phi3) \
        + drL * (-(sig - uL) * phi3)
    return arow, brow, drow


@njit(cache=True)
def _shock_drho_dt(g, a, rbar, ubar, pbar, ebar, cbar, drbar, dubar, dpbar,
                   ps, us, rpost, cpost, sig, Du, Dp):
    """(d rho/dt) at the axis when the adjacent upwind wave is a shock.

    Works for either side: pass that side's pre-shock state and slopes,
    the post-shock star values and the shock speed.
    """
    e_post = e_from_rho_ptot(g, a, rpost, ps)
    phi1, phi2, phi3, h1, h2, h3 = _shock_phis(g, a, ps, pbar, rbar,
                                               rpost, e_post, ebar)
    c2sq = cpost * cpost
    fbar = (sig - ubar) * (h2 * dpbar + h3 * drbar) \
        - rbar * (h2 * cbar * cbar + h3) * dubar
    num = sig / c2sq * Dp - us * h1 * Dp \
        + rpost * us * (sig - us) * h1 * Du - us * fbar
    return num / (sig - us)


@njit(cache=True)
def _degenerate_row(side, r, c, dr, du, dp):
    """Coefficient row for a side with no wave (zero strength limit)."""
    if side < 0:
        return 1.0, 1.0 / (r * c), -c * du - dp / r
    return 1.0, -1.0 / (r * c), c * du - dp / r


@njit(cache=True)
def grp_solve(g, a, rL, uL, pL, drL, duL, dpL, rR, uR, pR, drR, duR, dpR,
              ktab):
    """Interface state and time derivative for piecewise-linear data.

    Returns (status, case, ltype, rtype, ps, us, r1, r2,
             slh, slt, srt, srh, r0, u0, p0, drdt, dudt, dpdt).
    """
    eL = e_from_rho_ptot(g, a, rL, pL)
    eR = e_from_rho_ptot(g, a, rR, pR)
    if eL < 0.0 or eR < 0.0:
        return (STATUS_EOS, CASE_STAR, WAVE_NONE, WAVE_NONE,
                0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
                0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    cL = sound_re(g, a, rL, eL)
    cR = sound_re(g, a, rR, eR)

    diff = max(abs(rL - rR) / min(rL, rR),
               max(abs(uL - uR) / min(cL, cR),
                   abs(pL - pR) / min(pL, pR)))
    if diff <= EPS_ACOUSTIC:
        # Linearized evolution about the arithmetic mean state.
        rb = 0.5 * (rL + rR)
        ub = 0.5 * (uL + uR)
        pb = 0.5 * (pL + pR)
        # The averaged energy seeds Newton within O(diff^2) of the root.
        eb = 0.5 * (eL + eR)
        g1 = g - 1.0
        for _ in range(2):
            fb = g1 * rb * eb + a * eb * eb * eb * eb / 3.0 - pb
            eb -= fb / (g1 * rb + 4.0 * a * eb * eb * eb / 3.0)
        cb = sound_re(g, a, rb, eb)
        if ub - cb >= 0.0:
            drdt, dudt, dpdt = _quasi_linear(g, a, rL, uL, pL, drL, duL, dpL)
            return (STATUS_OK, CASE_ACOUSTIC, WAVE_NONE, WAVE_NONE,
                    pL, uL, rL, rL, ub - cb, ub - cb, ub + cb, ub + cb,
                    rL, uL, pL, drdt, dudt, dpdt)
        if ub + cb <= 0.0:
            drdt, dudt, dpdt = _quasi_linear(g, a, rR, uR, pR, drR, duR, dpR)
            return (STATUS_OK, CASE_ACOUSTIC, WAVE_NONE, WAVE_NONE,
                    pR, uR, rR, rR, ub - cb, ub - cb, ub + cb, ub + cb,
                    rR, uR, pR, drdt, dudt, dpdt)
        rc = rb * cb
        p0 = pb - 0.5 * (uR - uL) * rc
        u0 = ub - 0.5 * (pR - pL) / rc
        if u0 > 0.0:
            r0 = rL + (p0 - pL) / (cb * cb)
            dS = dS_slope(g, a, rL, eL, drL, dpL)
        elif u0 < 0.0:
            r0 = rR + (p0 - pR) / (cb * cb)
            dS = dS_slope(g, a, rR, eR, drR, dpR)
        else:
            r0 = rb + (p0 - pb) / (cb * cb)
            dS = 0.0
        wl = duL + dpL / rc
        wr = duR - dpR / rc
        dudt = -0.5 * ((ub + cb) * wl + (ub - cb) * wr)
        dpdt = -0.5 * rc * ((ub + cb) * wl - (ub - cb) * wr)
        drdt = (dpdt + u0 * dptot_dS_rho(g, a, rb, eb) * dS) / (cb * cb)
        return (STATUS_OK, CASE_ACOUSTIC, WAVE_NONE, WAVE_NONE,
                p0, u0, r0, r0, ub - cb, ub - cb, ub + cb, ub + cb,
                r0, u0, p0, drdt, dudt, dpdt)

    st, ps, us, r1, c1, r2, c2, ltype, rtype, _ = \
        solve_star(g, a, rL, uL, pL, rR, uR, pR)
    if st != STATUS_OK:
        return (st, CASE_STAR, WAVE_NONE, WAVE_NONE,
                0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
                0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    slh, slt, srt, srh = wave_speeds(g, a, rL, uL, pL, rR, uR, pR,
                                     ps, us, r1, c1, r2, c2, ltype, rtype)
    SL = entropy_re(g, a, rL, eL)
    SR = entropy_re(g, a, rR, eR)

    if slh >= 0.0:
        drdt, dudt, dpdt = _quasi_linear(g, a, rL, uL, pL, drL, duL, dpL)
        return (STATUS_OK, CASE_SIDE_L, ltype, rtype, ps, us, r1, r2,
                slh, slt, srt, srh, rL, uL, pL, drdt, dudt, dpdt)
    if srh <= 0.0:
        drdt, dudt, dpdt = _quasi_linear(g, a, rR, uR, pR, drR, duR, dpR)
        return (STATUS_OK, CASE_SIDE_R, ltype, rtype, ps, us, r1, r2,
                slh, slt, srt, srh, rR, uR, pR, drdt, dudt, dpdt)

    if ltype == WAVE_RARE and slt > 0.0:
        # t-axis inside the left fan: sonic point u = c.
        rs, usn, psn, stf = _fan_state_left(g, a, rL, uL, pL, SL, r1, 0.0)
        if stf != STATUS_OK:
            return (stf, CASE_SONIC_L, ltype, rtype, ps, us, r1, r2,
                    slh, slt, srt, srh, rs, usn, psn, 0.0, 0.0, 0.0)
        es = e_of_rho_S(g, a, rs, SL)
        cs = sound_re(g, a, rs, es)
        arow, brow, drow, str_ = _rare_row_left(
            g, a, rL, uL, pL, eL, cL, SL, drL, duL, dpL, rs, cs, ktab)
        if str_ != STATUS_OK:
            return (str_, CASE_SONIC_L, ltype, rtype, ps, us, r1, r2,
                    slh, slt, srt, srh, rs, usn, psn, 0.0, 0.0, 0.0)
        dudt = drow
        dpdt = rs * cs * drow
        dSL = dS_slope(g, a, rL, eL, drL, dpL)
        dSx = cL * dSL * (rs * cs / (rL * cL)) / cs
        drdt = (dpdt + dptot_dS_rho(g, a, rs, es) * cs * dSx) / (cs * cs)
        return (STATUS_OK, CASE_SONIC_L, ltype, rtype, ps, us, r1, r2,
                slh, slt, srt, srh, rs, cs, psn, drdt, dudt, dpdt)

    if rtype == WAVE_RARE and srt < 0.0:
        rs, usn, psn, stf = _fan_state_right(g, a, rR, uR, pR, SR, r2, 0.0)
        if stf != STATUS_OK:
            return (stf, CASE_SONIC_R, ltype, rtype, ps, us, r1, r2,
                    slh, slt, srt, srh, rs, usn, psn, 0.0, 0.0, 0.0)
        es = e_of_rho_S(g, a, rs, SR)
        cs = sound_re(g, a, rs, es)
        arow, brow, drow, str_ = _rare_row_right(
            g, a, rR, uR, pR, eR, cR, SR, drR, duR, dpR, rs, cs, ktab)
        if str_ != STATUS_OK:
            return (str_, CASE_SONIC_R, ltype, rtype, ps, us, r1, r2,
                    slh, slt, srt, srh, rs, usn, psn, 0.0, 0.0, 0.0)
        dudt = drow
        dpdt = rs * (-cs) * drow
        dSR = dS_slope(g, a, rR, eR, drR, dpR)
        dSx = cR * dSR * (rs * cs / (rR * cR)) / cs
        drdt = (dpdt + dptot_dS_rho(g, a, rs, es) * (-cs) * dSx) / (cs * cs)
        return (STATUS_OK, CASE_SONIC_R, ltype, rtype, ps, us, r1, r2,
                slh, slt, srt, srh, rs, -cs, psn, drdt, dudt, dpdt)

    # t-axis in the star region: one row per side.
    if ltype == WAVE_RARE:
        aLr, bLr, dLr, strow = _rare_row_left(
            g, a, rL, uL, pL, eL, cL, SL, drL, duL, dpL, r1, c1, ktab)
    elif ltype == WAVE_SHOCK:
        aLr, bLr, dLr = _shock_row_left(
            g, a, rL, uL, pL, eL, cL, drL, duL, dpL, ps, us, r1, c1, slh)
        strow = STATUS_OK
    else:
        aLr, bLr, dLr = _degenerate_row(-1, rL, cL, drL, duL, dpL)
        strow = STATUS_OK
    if strow != STATUS_OK:
        return (strow, CASE_STAR, ltype, rtype, ps, us, r1, r2,
                slh, slt, srt, srh, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    if rtype == WAVE_RARE:
        aRr, bRr, dRr, strow = _rare_row_right(
            g, a, rR, uR, pR, eR, cR, SR, drR, duR, dpR, r2, c2, ktab)
    elif rtype == WAVE_SHOCK:
        aRr, bRr, dRr = _shock_row_right(
            g, a, rR, uR, pR, eR, cR, drR, duR, dpR, ps, us, r2, c2, srh)
        strow = STATUS_OK
    else:
        aRr, bRr, dRr = _degenerate_row(1, rR, cR, drR, duR, dpR)
        strow = STATUS_OK
    if strow != STATUS_OK:
        return (strow, CASE_STAR, ltype, rtype, ps, us, r1, r2,
                slh, slt, srt, srh, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    det = aLr * bRr - aRr * bLr
    dscale = abs(aLr * bRr) + abs(aRr * bLr) + 1.0e-300
    if abs(det) <= 1.0e-14 * dscale:
        return (STATUS_SINGULAR, CASE_STAR, ltype, rtype, ps, us, r1, r2,
                slh, slt, srt, srh, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    Du = (dLr * bRr - dRr * bLr) / det
    Dp = (aLr * dRr - aRr * dLr) / det

    if us > 0.0:
        rstar = r1
        cstar = c1
    else:
        rstar = r2
        cstar = c2
    c2sq = cstar * cstar
    dudt = Du + us / (rstar * c2sq) * Dp
    dpdt = Dp + rstar * us * Du

    # Density derivative from the upwind side of the contact.
    if us > 0.0:
        estar = e_from_rho_ptot(g, a, rstar, ps)
        if ltype == WAVE_SHOCK:
            drdt = _shock_drho_dt(g, a, rL, uL, pL, eL, cL, drL, duL, dpL,
                                  ps, us, r1, c1, slh, Du, Dp)
        else:
            dSL = dS_slope(g, a, rL, eL, drL, dpL)
            dSx = cL * dSL * (rstar * cstar / (rL * cL)) / cstar
            drdt = (dpdt + dptot_dS_rho(g, a, rstar, estar) * us * dSx) / c2sq
    elif us < 0.0:
        estar = e_from_rho_ptot(g, a, rstar, ps)
        if rtype == WAVE_SHOCK:
            drdt = _shock_drho_dt(g, a, rR, uR, pR, eR, cR, drR, duR, dpR,
                                  ps, us, r2, c2, srh, Du, Dp)
        else:
            dSR = dS_slope(g, a, rR, eR, drR, dpR)
            dSx = cR * dSR * (rstar * cstar / (rR * cR)) / cstar
            drdt = (dpdt + dptot_dS_rho(g, a, rstar, estar) * us * dSx) / c2sq
    else:
        drdt = dpdt / c2sq
    return (STATUS_OK, CASE_STAR, ltype, rtype, ps, us, r1, r2,
            slh, slt, srt, srh, rstar, us, ps, drdt, dudt, dpdt)


# ----------------------------------------------------------------------
# Conversions between conservative and primitive variables, fluxes,
# characteristic decomposition, slope limiting.
# ----------------------------------------------------------------------

@njit(cache=True)
def cons_from_prim(g, a, r, u, p):
    e = e_from_rho_ptot(g, a, r, p)
    return r, r * u, 0.5 * r * u * u + r * e + a * e * e * e * e


@njit(cache=True)
def prim_from_cons(g, a, r, m, E):
    """Returns (rho, u, p_tot, e). e < 0 flags an invalid state."""
    if r <= 0.0:
        return r, 0.0, -1.0, -1.0
    u = m / r
    q = E - 0.5 * m * u
    e = e_from_rho_etot(g, a, r, q)
    if e <= 0.0:
        return r, u, -1.0, -1.0
    return r, u, ptot_re(g, a, r, e), e


@njit(cache=True)
def flux_prim(g, a, r, u, p):
    e = e_from_rho_ptot(g, a, r, p)
    E = 0.5 * r * u * u + r * e + a * e * e * e * e
    return r * u, r * u * u + p, u * (E + p)


@njit(cache=True)
def minmod3(x, y, z):
    if x > 0.0 and y > 0.0 and z > 0.0:
        m = x
        if y < m:
            m = y
        if z < m:
            m = z
        return m
    if x < 0.0 and y < 0.0 and z < 0.0:
        m = x
        if y > m:
            m = y
        if z > m:
            m = z
        return m
    return 0.0


@njit(cache=True)
def eig_matrix(g, a, r, u, p):
    """Right eigenvector matrix of the flux Jacobian, conservative basis."""
    e = e_from_rho_ptot(g, a, r, p)
    g1 = g - 1.0
    z = a * e * e * e / r
    A = g1 + 4.0 * z / 3.0
    B = 1.0 + 4.0 * z
    c = sound_re(g, a, r, e)
    H = 0.5 * u * u + e + e * A
    R = np.empty((3, 3))
    R[0, 0] = 1.0
    R[0, 1] = 1.0
    R[0, 2] = 1.0
    R[1, 0] = u - c
    R[1, 1] = u
    R[1, 2] = u + c
    R[2, 0] = H - u * c
    R[2, 1] = 0.5 * u * u + e - g1 * e * B / A
    R[2, 2] = H + u * c
    return R


@njit(cache=True)
def solve3(M, v):
    """Solve a 3x3 system with partial pivoting. Returns (x, status)."""
    A = M.copy()
    b = v.copy()
    x = np.zeros(3)
    for k in range(3):
        piv = k
        pv = abs(A[k, k])
        for i in range(k + 1, 3):
            if abs(A[i, k]) > pv:
                pv = abs(A[i, k])
                piv = i
        if pv == 0.0:
            return x, STATUS_SINGULAR
        if piv != k:
            for j in range(3):
                tmp = A[k, j]
                A[k, j] = A[piv, j]
                A[piv, j] = tmp
            tmp = b[k]
            b[k] = b[piv]
            b[piv] = tmp
        for i in range(k + 1, 3):
            f = A[i, k] / A[k, k]
            for j in range(k, 3):
                A[i, j] -= f * A[k, j]
            b[i] -= f * b[k]
    for k in range(2, -1, -1):
        s = b[k]
        for j in range(k + 1, 3):
            s -= A[k, j] * x[j]
        x[k] = s / A[k, k]
    return x, STATUS_OK


@njit(cache=True)
def _eig_rows(g, a, r, u, p):
    """Second and third rows of the right eigenvector matrix (the first
    row is all ones), plus the internal energy. Scalar form of
    eig_matrix for the allocation-free hot loops."""
    e = e_from_rho_ptot(g, a, r, p)
    g1 = g - 1.0
    z = a * e * e * e / r
    A = g1 + 4.0 * z / 3.0
    B = 1.0 + 4.0 * z
    c = sound_re(g, a, r, e)
    H = 0.5 * u * u + e + e * A
    return (u - c, u, u + c,
            H - u * c, 0.5 * u * u + e - g1 * e * B / A, H + u * c, e)


@njit(cache=True)
def _char_solve(l0, l1, l2, m0, m1, m2, b0, b1, b2):
    """Solve [[1,1,1],[l0,l1,l2],[m0,m1,m2]] x = b by Cramer's rule.

    Returns (x0, x1, x2, det); a vanishing det flags failure.
    """
    c12 = l1 * m2 - l2 * m1
    c02 = l0 * m2 - l2 * m0
    c01 = l0 * m1 - l1 * m0
    det = c12 - c02 + c01
    if det == 0.0:
        return 0.0, 0.0, 0.0, 0.0
    x0 = (b0 * c12 - (b1 * m2 - b2 * l2) + (b1 * m1 - b2 * l1)) / det
    x1 = ((b1 * m2 - b2 * l2) - b0 * c02 + (b2 * l0 - b1 * m0)) / det
    x2 = ((b2 * l1 - b1 * m1) - (b2 * l0 - b1 * m0) + b0 * c01) / det
    return x0, x1, x2, det


@njit(cache=True)
def _dprim_from_dcons_e(g, a, r, u, e, d0, d1, d2):
    """dprim_from_dcons with the internal energy already known."""
    g1 = g - 1.0
    z = a * e * e * e / r
    A = g1 + 4.0 * z / 3.0
    B = 1.0 + 4.0 * z
    du = (d1 - u * d0) / r
    de = (d2 - u * d1 + (0.5 * u * u - e) * d0) / (r * B)
    dp = g1 * e * d0 + r * A * de
    return d0, du, dp


@njit(cache=True)
def dprim_from_dcons(g, a, r, u, p, d0, d1, d2):
    """Convert a conservative-variable differential to (drho, du, dp_tot)."""
    e = e_from_rho_ptot(g, a, r, p)
    g1 = g - 1.0
    z = a * e * e * e / r
    A = g1 + 4.0 * z / 3.0
    B = 1.0 + 4.0 * z
    du = (d1 - u * d0) / r
    de = (d2 - u * d1 + (0.5 * u * u - e) * d0) / (r * B)
    dp = g1 * e * d0 + r * A * de
    return d0, du, dp


# ----------------------------------------------------------------------
# One-dimensional mesh kernels. State arrays carry two ghost cells on
# each end: index range [0, n+4), physical cells [2, n+2).
# ----------------------------------------------------------------------

@njit(cache=True, parallel=True)
def interfaces_1d(g, a, dx, dt, W, dW, n, F, Wrp, Wmid, stat, ktab):
    """Resolve all n+1 interfaces. Interface j lies between cells j-1, j."""
    for j in prange(2, n + 3):
        rl = W[0, j - 1] + 0.5 * dx * dW[0, j - 1]
        ul = W[1, j - 1] + 0.5 * dx * dW[1, j - 1]
        pl = W[2, j - 1] + 0.5 * dx * dW[2, j - 1]
        rr = W[0, j] - 0.5 * dx * dW[0, j]
        ur = W[1, j] - 0.5 * dx * dW[1, j]
        pr = W[2, j] - 0.5 * dx * dW[2, j]
        if rl <= 0.0 or pl <= 0.0 or rr <= 0.0 or pr <= 0.0:
            stat[j] = STATUS_EOS
            continue
        out = grp_solve(g, a, rl, ul, pl,
                        dW[0, j - 1], dW[1, j - 1], dW[2, j - 1],
                        rr, ur, pr,
                        dW[0, j], dW[1, j], dW[2, j], ktab)
        stat[j] = out[0]
        if out[0] != STATUS_OK:
            continue
        r0 = out[12]
        u0 = out[13]
        p0 = out[14]
        rm = r0 + 0.5 * dt * out[15]
        um = u0 + 0.5 * dt * out[16]
        pm = p0 + 0.5 * dt * out[17]
        if rm <= 0.0 or pm <= 0.0:
            # Fall back to the instantaneous state; first order locally.
            rm = r0
            um = u0
            pm = p0
        Wrp[0, j] = r0
        Wrp[1, j] = u0
        Wrp[2, j] = p0
        Wmid[0, j] = rm
        Wmid[1, j] = um
        Wmid[2, j] = pm
        f0, f1, f2 = flux_prim(g, a, rm, um, pm)
        F[0, j] = f0
        F[1, j] = f1
        F[2, j] = f2


@njit(cache=True)
def update_cons_1d(dx, dt, U, F, n):
    lam = dt / dx
    for i in range(2, n + 2):
        for k in range(3):
            U[k, i] -= lam * (F[k, i + 1] - F[k, i])


@njit(cache=True)
def cons_to_prim_grid(g, a, U, W, n):
    """Fill W from U over all cells including ghosts. Returns status."""
    bad = 0
    for i in range(n + 4):
        r, u, p, e = prim_from_cons(g, a, U[0, i], U[1, i], U[2, i])
        if p <= 0.0:
            bad = STATUS_EOS
        W[0, i] = r
        W[1, i] = u
        W[2, i] = p
    return bad


@njit(cache=True)
def slopes_update_grp(g, a, dx, dt, U, W, dW, Wrp, Wmid, theta, n):
    """Evolved limited slopes after a conservative update.

    The interface values advanced to the new time level provide the raw
    slope; it is limited against theta times the neighbor differences in
    the local characteristic basis of the new cell average.
    """
    # New-time interface values of the conservative state, shared by the
    # two adjacent cells.
    Q = np.empty((3, n + 4))
    for j in range(2, n + 3):
        m0, m1, m2 = cons_from_prim(g, a, Wmid[0, j], Wmid[1, j],
                                    Wmid[2, j])
        v0, v1, v2 = cons_from_prim(g, a, Wrp[0, j], Wrp[1, j],
                                    Wrp[2, j])
        Q[0, j] = 2.0 * m0 - v0
        Q[1, j] = 2.0 * m1 - v1
        Q[2, j] = 2.0 * m2 - v2
    dWn = np.empty_like(dW)
    for i in range(2, n + 2):
        l0, l1, l2, m0, m1, m2, e = _eig_rows(g, a, W[0, i], W[1, i],
                                              W[2, i])
        am0, am1, am2, det1 = _char_solve(
            l0, l1, l2, m0, m1, m2,
            theta * (U[0, i] - U[0, i - 1]) / dx,
            theta * (U[1, i] - U[1, i - 1]) / dx,
            theta * (U[2, i] - U[2, i - 1]) / dx)
        ar0, ar1, ar2, det2 = _char_solve(
            l0, l1, l2, m0, m1, m2,
            (Q[0, i + 1] - Q[0, i]) / dx,
            (Q[1, i + 1] - Q[1, i]) / dx,
            (Q[2, i + 1] - Q[2, i]) / dx)
        ap0, ap1, ap2, det3 = _char_solve(
            l0, l1, l2, m0, m1, m2,
            theta * (U[0, i + 1] - U[0, i]) / dx,
            theta * (U[1, i + 1] - U[1, i]) / dx,
            theta * (U[2, i + 1] - U[2, i]) / dx)
        if det1 == 0.0 or det2 == 0.0 or det3 == 0.0:
            dWn[0, i] = 0.0
            dWn[1, i] = 0.0
            dWn[2, i] = 0.0
            continue
        w0 = minmod3(am0, ar0, ap0)
        w1 = minmod3(am1, ar1, ap1)
        w2 = minmod3(am2, ar2, ap2)
        d0 = w0 + w1 + w2
        d1 = l0 * w0 + l1 * w1 + l2 * w2
        d2 = m0 * w0 + m1 * w1 + m2 * w2
        a0, a1, a2 = _dprim_from_dcons_e(g, a, W[0, i], W[1, i], e,
                                         d0, d1, d2)
        dWn[0, i] = a0
        dWn[1, i] = a1
        dWn[2, i] = a2
    for i in range(2, n + 2):
        dW[0, i] = dWn[0, i]
        dW[1, i] = dWn[1, i]
        dW[2, i] = dWn[2, i]


@njit(cache=True)
def limited_slopes_from_averages(g, a, dx, U, W, dW, theta, n):
    """Characteristic minmod slopes built from cell averages only."""
    for i in range(2, n + 2):
        l0, l1, l2, m0, m1, m2, e = _eig_rows(g, a, W[0, i], W[1, i],
                                              W[2, i])
        am0, am1, am2, det1 = _char_solve(
            l0, l1, l2, m0, m1, m2,
            theta * (U[0, i] - U[0, i - 1]) / dx,
            theta * (U[1, i] - U[1, i - 1]) / dx,
            theta * (U[2, i] - U[2, i - 1]) / dx)
        ac0, ac1, ac2, det2 = _char_solve(
            l0, l1, l2, m0, m1, m2,
            0.5 * (U[0, i + 1] - U[0, i - 1]) / dx,
            0.5 * (U[1, i + 1] - U[1, i - 1]) / dx,
            0.5 * (U[2, i + 1] - U[2, i - 1]) / dx)
        ap0, ap1, ap2, det3 = _char_solve(
            l0, l1, l2, m0, m1, m2,
            theta * (U[0, i + 1] - U[0, i]) / dx,
            theta * (U[1, i + 1] - U[1, i]) / dx,
            theta * (U[2, i + 1] - U[2, i]) / dx)
        if det1 == 0.0 or det2 == 0.0 or det3 == 0.0:
            dW[0, i] = 0.0
            dW[1, i] = 0.0
            dW[2, i] = 0.0
            continue
        w0 = minmod3(am0, ac0, ap0)
        w1 = minmod3(am1, ac1, ap1)
        w2 = minmod3(am2, ac2, ap2)
        d0 = w0 + w1 + w2
        d1 = l0 * w0 + l1 * w1 + l2 * w2
        d2 = m0 * w0 + m1 * w1 + m2 * w2
        a0, a1, a2 = _dprim_from_dcons_e(g, a, W[0, i], W[1, i], e,
                                         d0, d1, d2)
        dW[0, i] = a0
        dW[1, i] = a1
        dW[2, i] = a2


@njit(cache=True)
def max_signal_1d(g, a, W, n):
    smax = 0.0
    for i in range(2, n + 2):
        e = e_from_rho_ptot(g, a, W[0, i], W[2, i])
        s = abs(W[1, i]) + sound_re(g, a, W[0, i], e)
        if s > smax:
            smax = s
    return smax


@njit(cache=True)
def apply_bc_1d(arr, n, mode):
    """Ghost-cell fill. mode 0: zero-gradient, 1: periodic."""
    if mode == 1:
        for k in range(arr.shape[0]):
            arr[k, 0] = arr[k, n]
            arr[k, 1] = arr[k, n + 1]
            arr[k, n + 2] = arr[k, 2]
            arr[k, n + 3] = arr[k, 3]
    else:
        for k in range(arr.shape[0]):
            arr[k, 0] = arr[k, 2]
            arr[k, 1] = arr[k, 2]
            arr[k, n + 2] = arr[k, n + 1]
            arr[k, n + 3] = arr[k, n + 1]


@njit(cache=True, parallel=True)
def muscl_interfaces_1d(g, a, dx, dt, W, dW, n, F, stat):
    """Interface fluxes for the predictor-corrector baseline scheme.

    Boundary extrapolated values are advanced half a step with the local
    flux difference, then an exact Riemann solution is sampled at the
    interface.
    """
    for j in prange(2, n + 3):
        # Left side: cell j-1 plus-side value after the half step.
        stat[j] = STATUS_OK
        i = j - 1
        rl = W[0, i] + 0.5 * dx * dW[0, i]
        ul = W[1, i] + 0.5 * dx * dW[1, i]
        pl = W[2, i] + 0.5 * dx * dW[2, i]
        rm = W[0, i] - 0.5 * dx * dW[0, i]
        um = W[1, i] - 0.5 * dx * dW[1, i]
        pm = W[2, i] - 0.5 * dx * dW[2, i]
        if rl <= 0.0 or pl <= 0.0 or rm <= 0.0 or pm <= 0.0:
            stat[j] = STATUS_EOS
            continue
        up0, up1, up2 = cons_from_prim(g, a, rl, ul, pl)
        fp0, fp1, fp2 = flux_prim(g, a, rl, ul, pl)
        fm0, fm1, fm2 = flux_prim(g, a, rm, um, pm)
        lam = 0.5 * dt / dx
        u0 = up0 - lam * (fp0 - fm0)
        u1 = up1 - lam * (fp1 - fm1)
        u2 = up2 - lam * (fp2 - fm2)
        rl, ul, pl, el = prim_from_cons(g, a, u0, u1, u2)
        if pl <= 0.0:
            stat[j] = STATUS_EOS
            continue
        # Right side: cell j minus-side value after the half step.
        i = j
        rr = W[0, i] - 0.5 * dx * dW[0, i]
        ur = W[1, i] - 0.5 * dx * dW[1, i]
        pr = W[2, i] - 0.5 * dx * dW[2, i]
        rq = W[0, i] + 0.5 * dx * dW[0, i]
        uq = W[1, i] + 0.5 * dx * dW[1, i]
        pq = W[2, i] + 0.5 * dx * dW[2, i]
        if rr <= 0.0 or pr <= 0.0 or rq <= 0.0 or pq <= 0.0:
            stat[j] = STATUS_EOS
            continue
        um0, um1, um2 = cons_from_prim(g, a, rr, ur, pr)
        fm0, fm1, fm2 = flux_prim(g, a, rr, ur, pr)
        fq0, fq1, fq2 = flux_prim(g, a, rq, uq, pq)
        v0 = um0 - lam * (fq0 - fm0)
        v1 = um1 - lam * (fq1 - fm1)
        v2 = um2 - lam * (fq2 - fm2)
        rr, ur, pr, er = prim_from_cons(g, a, v0, v1, v2)
        if pr <= 0.0:
            stat[j] = STATUS_EOS
            continue
        st, ps, us, r1, c1, r2, c2, lt, rt, _ = \
            solve_star(g, a, rl, ul, pl, rr, ur, pr)
        if st != STATUS_OK:
            stat[j] = st
            continue
        r0, u0v, p0v, st = sample_fan(g, a, rl, ul, pl, rr, ur, pr,
                                      ps, us, r1, c1, r2, c2, lt, rt, 0.0)
        if st != STATUS_OK:
            stat[j] = st
            continue
        f0, f1, f2 = flux_prim(g, a, r0, u0v, p0v)
        F[0, j] = f0
        F[1, j] = f1
        F[2, j] = f2
