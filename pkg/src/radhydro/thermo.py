"""Vectorized thermodynamic closures for arrays of states.

The scalar versions live in the compiled core; these numpy forms are used
for grid initialization, output, and diagnostics, where whole fields are
converted at once. The quartic inversions use a vectorized Newton start
at the pure-gas value, which is an upper bound, so the iteration descends
monotonically on a convex residual.
"""

import numpy as np

from .errors import InvalidStateError

_MAXIT = 100
_RTOL = 1.0e-12


def e_from_rho_ptot(gamma, a_rad, rho, ptot):
    """Invert (gamma-1) rho e + a e^4/3 = p_tot elementwise."""
    rho = np.asarray(rho, dtype=float)
    ptot = np.asarray(ptot, dtype=float)
    if np.any(rho <= 0.0) or np.any(ptot <= 0.0):
        raise InvalidStateError("nonpositive density or pressure")
    g1 = gamma - 1.0
    e = ptot / (g1 * rho)
    if a_rad == 0.0:
        return e
    for _ in range(_MAXIT):
        f = g1 * rho * e + a_rad * e ** 4 / 3.0 - ptot
        if np.all(np.abs(f) <= _RTOL * ptot):
            break
        e = e - f / (g1 * rho + 4.0 * a_rad * e ** 3 / 3.0)
    return e


def e_from_rho_etot(gamma, a_rad, rho, q):
    """Invert rho e + a e^4 = q (q = rho e_tot) elementwise."""
    rho = np.asarray(rho, dtype=float)
    q = np.asarray(q, dtype=float)
    if np.any(rho <= 0.0) or np.any(q <= 0.0):
        raise InvalidStateError("nonpositive density or total energy")
    e = q / rho
    if a_rad == 0.0:
        return e
    for _ in range(_MAXIT):
        f = rho * e + a_rad * e ** 4 - q
        if np.all(np.abs(f) <= _RTOL * q):
            break
        e = e - f / (rho + 4.0 * a_rad * e ** 3)
    return e


def ptot(gamma, a_rad, rho, e):
    return (gamma - 1.0) * rho * e + a_rad * e ** 4 / 3.0


def p_rad(a_rad, e):
    return a_rad * e ** 4 / 3.0


def etot(gamma, a_rad, rho, e):
    return e + a_rad * e ** 4 / rho


def sound(gamma, a_rad, rho, e):
    g1 = gamma - 1.0
    z = a_rad * e ** 3 / rho
    A = g1 + 4.0 * z / 3.0
    B = 1.0 + 4.0 * z
    return np.sqrt(e * (g1 + A * A / B))


def entropy(gamma, a_rad, rho, e):
    z = a_rad * e ** 3 / rho
    return np.log(gamma - 1.0) + np.log(e) + (1.0 - gamma) * np.log(rho) \
        + 4.0 * z / 3.0


def cons_from_prim(gamma, a_rad, rho, u, p):
    """Conservative fields (rho, rho u, E) from primitive arrays."""
    e = e_from_rho_ptot(gamma, a_rad, rho, p)
    E = 0.5 * rho * u ** 2 + rho * e + a_rad * e ** 4
    return rho, rho * u, E


def prim_from_cons(gamma, a_rad, r, m, E):
    u = m / r
    e = e_from_rho_etot(gamma, a_rad, r, E - 0.5 * m * u)
    return r, u, ptot(gamma, a_rad, r, e), e
