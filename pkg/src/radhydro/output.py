"""CSV writers with fixed 17-significant-digit formatting.

Every float is rendered with %.17g so repeated runs of the same
configuration produce byte-identical files.
"""

import os


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def write_csv(path, header, rows):
    """Write rows (iterables of str/float/int/None) under a header line."""
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")
    return path


def write_profile_1d(path, x, rho, u, ptot, e):
    """Snapshot of a 1D run: one row per cell center."""
    header = ("x", "rho", "u", "ptot", "e")
    rows = ((float(xi), float(ri), float(ui), float(pi), float(ei))
            for xi, ri, ui, pi, ei in zip(x, rho, u, ptot, e))
    return write_csv(path, header, rows)


def write_fields_2d(path, x, y, fields):
    """Snapshot of a 2D run: one row per cell, fields keyed by name."""
    names = list(fields)
    header = ["x", "y"] + names
    arrays = [fields[n] for n in names]
    nx, ny = arrays[0].shape

    def rows():
        for i in range(nx):
            for j in range(ny):
                yield ([float(x[i]), float(y[j])]
                       + [float(a[i, j]) for a in arrays])

    return write_csv(path, header, rows())


def write_convergence(path, report):
    """ConvergenceReport as (N, l1, l1_order, l2, l2_order, linf, linf_order)."""
    header = ("N", "l1", "l1_order", "l2", "l2_order", "linf", "linf_order")
    return write_csv(path, header, report.rows())


def write_sweep(path, gamma1_values, roots):
    """Root sweep as (gamma1, max_zero); blank when no root exists."""
    header = ("gamma1", "max_zero")
    rows = ((float(g), None if r is None else float(r))
            for g, r in zip(gamma1_values, roots))
    return write_csv(path, header, rows)
