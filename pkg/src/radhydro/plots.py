"""Matplotlib figures for run reports.

All functions save a PNG to the given path and return the path.  The Agg
backend is forced so the module works headless.
"""

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def profile_1d(path, x, sol, exact=None, title=""):
    """Density, velocity, total pressure, and temperature profiles.

    sol is a Solution1D; exact, when given, is (rho, u, ptot) arrays on
    the same x to overlay as a reference line.
    """
    fig, axes = plt.subplots(2, 2, figsize=(9, 6), sharex=True)
    panels = [("density", sol.rho, 0), ("velocity", sol.u, 1),
              ("total pressure", sol.ptot, 2), ("temperature", sol.T, None)]
    for ax, (label, field, k) in zip(axes.flat, panels):
        if exact is not None and k is not None:
            ax.plot(x, exact[k], "-", color="0.6", lw=1.0, label="exact")
        ax.plot(x, field, "k.", ms=2.5, label="numeric")
        ax.set_ylabel(label)
        ax.legend(loc="best", fontsize=8)
    for ax in axes[1]:
        ax.set_xlabel("x")
    if title:
        fig.suptitle(title)
    return _save(fig, path)


def convergence(path, report, title=""):
    """log-log error-vs-resolution plot with a second-order guide line."""
    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    N = np.asarray(report.resolutions, dtype=float)
    for label, errs in (("l1", report.errors_l1),
                        ("l2", report.errors_l2),
                        ("linf", report.errors_linf)):
        ax.loglog(N, errs, "o-", label=label)
    guide = report.errors_l1[0] * (N[0] / N) ** 2
    ax.loglog(N, guide, "--", color="0.6", label="slope -2")
    ax.set_xlabel("cells per direction")
    ax.set_ylabel("error")
    ax.legend()
    if title:
        ax.set_title(title)
    return _save(fig, path)


def contours_2d(path, x, y, field, levels, label="", title=""):
    """Filled-line contour plot of one 2D field."""
    fig, ax = plt.subplots(figsize=(8, 4.2))
    X, Y = np.meshgrid(x, y, indexing="ij")
    cs = ax.contour(X, Y, field, levels=levels, linewidths=0.6,
                    colors="k")
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    if label:
        ax.text(0.02, 0.93, label, transform=ax.transAxes, fontsize=9)
    if title:
        ax.set_title(title)
    return _save(fig, path)


def lineout_compare(path, x, profiles, ylabel="density", title=""):
    """Overlay y = const lineouts from several schemes.

    profiles is a dict: scheme label -> 1D array on x.
    """
    fig, ax = plt.subplots(figsize=(6.5, 4.2))
    styles = ["k-", "r--", "b:"]
    for (label, prof), sty in zip(profiles.items(), styles):
        ax.plot(x, prof, sty, lw=1.2, label=label)
    ax.set_xlabel("x")
    ax.set_ylabel(ylabel)
    ax.legend()
    if title:
        ax.set_title(title)
    return _save(fig, path)


def sweep_plot(path, gamma1_values, roots, title=""):
    """Largest admissible root versus gamma - 1; gaps where none exists."""
    fig, ax = plt.subplots(figsize=(5.5, 4.2))
    g = np.asarray(gamma1_values, dtype=float)
    r = np.array([np.nan if v is None else v for v in roots])
    ax.plot(g, r, "k.-", ms=3, lw=0.8)
    ax.set_xlabel("gamma - 1")
    ax.set_ylabel("largest root")
    if title:
        ax.set_title(title)
    return _save(fig, path)
