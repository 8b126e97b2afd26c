"""Analysis utilities: genuine-nonlinearity threshold and error norms.

The acoustic characteristic fields lose genuine nonlinearity once the
gas constant gamma1 = 3(gamma - 1) crosses a threshold.  The classifier
is the sign of a quartic-in-r_e, cubic-in-gamma1 polynomial f, where
r_e is the radiation-to-gas internal energy ratio; the threshold is the
first gamma1 at which f acquires a nonnegative real root in r_e.

This module also provides the cell-averaged error norms and the
convergence-order harness used by the accuracy studies.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DomainMismatchError

# 3-point Gauss-Legendre rule on [-1, 1]
_GAUSS_X = np.array([-np.sqrt(3.0 / 5.0), 0.0, np.sqrt(3.0 / 5.0)])
_GAUSS_W = np.array([5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0])


def genuine_nonlinearity_f(r_e, gamma1):
    """Classifier polynomial f(r_e, gamma1), Horner form in gamma1."""
    r = np.asarray(r_e, dtype=float)
    g1 = np.asarray(gamma1, dtype=float)
    c3 = -216.0 * r + 27.0
    c2 = (1728.0 * r + 1080.0) * r + 81.0
    c1 = ((7488.0 * r + 4464.0) * r + 756.0) * r + 54.0
    c0 = (1792.0 * r + 640.0) * r * r * r
    return ((c3 * g1 + c2) * g1 + c1) * g1 + c0


def _f_coeffs_in_re(g1):
    """Coefficients of f as a quartic in r_e, highest power first."""
    return np.array([
        1792.0,
        7488.0 * g1 + 640.0,
        1728.0 * g1 * g1 + 4464.0 * g1,
        -216.0 * g1 ** 3 + 1080.0 * g1 * g1 + 756.0 * g1,
        27.0 * g1 ** 3 + 81.0 * g1 * g1 + 54.0 * g1,
    ])


def max_real_zero(gamma1, tol=1.0e-12):
    """Largest nonnegative real root of f(., gamma1), or None.

    Near the threshold f only grazes zero (a double root forming inside
    a narrow dip), so root existence is decided at the critical points
    of the quartic: a nonnegative root exists iff min f over r >= 0 is
    nonpositive.  The rightmost crossing is then refined by bisection.
    """
    g1 = float(gamma1)
    coef = _f_coeffs_in_re(g1)

    def f(r):
        return np.polyval(coef, r)

    crit = np.roots(np.polyder(coef))
    cand = [0.0]
    for r in crit:
        if abs(r.imag) <= 1.0e-9 * max(1.0, abs(r)) and r.real > 0.0:
            cand.append(r.real)
    neg = [r for r in cand if f(r) <= 0.0]
    if not neg:
        return None
    lo = max(neg)
    if f(lo) == 0.0:
        return lo
    # The leading term dominates beyond max(1, sum |c_k| / c_4).
    hi = max(1.0, lo + 1.0, np.sum(np.abs(coef[1:])) / coef[0])
    while f(hi) <= 0.0:
        hi *= 2.0
    while hi - lo > tol * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        v = f(mid)
        if v == 0.0:
            return mid
        if v < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def max_zero_sweep(gamma1_grid):
    """Largest nonnegative real r_e zero of f per gamma1 (None if absent)."""
    return [max_real_zero(g1) for g1 in np.asarray(gamma1_grid, dtype=float)]


def first_gamma1_with_root(lo=14.0, hi=16.0, tol=1.0e-6):
    """First gamma1 in [lo, hi] at which f has a nonnegative real root."""
    if max_real_zero(lo) is not None:
        raise ValueError("lower end of the bracket already has a root")
    if max_real_zero(hi) is None:
        raise ValueError("upper end of the bracket has no root")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if max_real_zero(mid) is None:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def cell_average_1d(f: Callable, x0, dx, n):
    """3-point Gauss cell averages of f(x) on n uniform cells."""
    xc = x0 + (np.arange(n) + 0.5) * dx
    acc = np.zeros(n)
    for q in range(3):
        acc += 0.5 * _GAUSS_W[q] * np.asarray(
            f(xc + 0.5 * dx * _GAUSS_X[q]), dtype=float)
    return acc


def cell_average_2d(f: Callable, x0, dx, nx, y0, dy, ny):
    """3x3 Gauss cell averages of f(x, y) on an nx-by-ny uniform mesh."""
    xc = x0 + (np.arange(nx) + 0.5) * dx
    yc = y0 + (np.arange(ny) + 0.5) * dy
    acc = np.zeros((nx, ny))
    for qx in range(3):
        for qy in range(3):
            X, Y = np.meshgrid(xc + 0.5 * dx * _GAUSS_X[qx],
                               yc + 0.5 * dy * _GAUSS_X[qy], indexing="ij")
            acc += 0.25 * _GAUSS_W[qx] * _GAUSS_W[qy] * np.asarray(
                f(X, Y), dtype=float)
    return acc


def error_norms(numeric, exact_avg):
    """Cell-averaged l1, l2, linf errors between two fields."""
    numeric = np.asarray(numeric, dtype=float)
    exact_avg = np.asarray(exact_avg, dtype=float)
    if numeric.shape != exact_avg.shape:
        raise DomainMismatchError(
            "field shapes differ: %r vs %r"
            % (numeric.shape, exact_avg.shape))
    d = np.abs(numeric - exact_avg)
    return float(d.mean()), float(np.sqrt((d * d).mean())), float(d.max())


@dataclass
class ConvergenceReport:
    resolutions: Sequence[int]
    errors_l1: Sequence[float]
    errors_l2: Sequence[float]
    errors_linf: Sequence[float]

    def orders(self, which="l1"):
        errs = {"l1": self.errors_l1, "l2": self.errors_l2,
                "linf": self.errors_linf}[which]
        out = []
        for k in range(1, len(errs)):
            ratio = np.log2(self.resolutions[k] / self.resolutions[k - 1])
            out.append(float(np.log2(errs[k - 1] / errs[k]) / ratio))
        return out

    def rows(self):
        """Aligned rows (N, l1, l1_order, l2, l2_order, linf, linf_order)."""
        o1 = [None] + self.orders("l1")
        o2 = [None] + self.orders("l2")
        oi = [None] + self.orders("linf")
        return list(zip(self.resolutions, self.errors_l1, o1,
                        self.errors_l2, o2, self.errors_linf, oi))


def convergence_study(run_level: Callable, resolutions) -> ConvergenceReport:
    """Assemble a report from a per-resolution runner.

    run_level(N) must return (numeric_field, exact_cell_averages).
    """
    e1, e2, ei = [], [], []
    for n in resolutions:
        num, ex = run_level(n)
        l1, l2, li = error_norms(num, ex)
        e1.append(l1)
        e2.append(l2)
        ei.append(li)
    return ConvergenceReport(list(resolutions), e1, e2, ei)
