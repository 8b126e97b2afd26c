"""Registry of benchmark cases.

1D: a smooth advected sine wave for accuracy studies and four Riemann
problems with increasingly strong waves (given in (rho, u, T)).
2D: a diagonal sine wave, a strong shock striking a dense circular
cloud, and a wind accelerating into a dense cloud.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import riemann, thermo
from .errors import ConfigError
from .model import GasModel, PrimState


@dataclass(frozen=True)
class Case1D:
    name: str
    model: GasModel
    x0: float
    x1: float
    t_end: float
    bc: str
    cells: int                     # published resolution
    theta: float
    init: Callable                 # x -> (rho, u, ptot)
    exact: Optional[Callable]      # (x, t) -> (rho, u, ptot), or None
    smooth: bool = False


@dataclass(frozen=True)
class Case2D:
    name: str
    model: GasModel
    x0: float
    x1: float
    y0: float
    y1: float
    t_end: float
    bc: object                    # Solver2D bc spec
    nx: int
    ny: int
    theta: float
    init: Callable                # (X, Y) -> (rho, u, v, ptot)
    exact: Optional[Callable]     # (X, Y, t) -> rho, or None
    smooth: bool = False


def _sine1d_model():
    return GasModel(gamma=5.0 / 3.0, a_rad=1.0)


def _sine1d_init(x):
    rho = 1.0 + 0.2 * np.sin(2.0 * np.pi * np.asarray(x, dtype=float))
    return rho, np.full_like(rho, 0.2), np.ones_like(rho)


def _sine1d_exact(x, t):
    rho = 1.0 + 0.2 * np.sin(2.0 * np.pi * (np.asarray(x, dtype=float)
                                            - 0.2 * t))
    return rho, np.full_like(rho, 0.2), np.ones_like(rho)


def _riemann_case(name, left_rut, right_rut, x_split, t_end):
    """1D Riemann case from (rho, u, T) side states."""
    model = GasModel(gamma=5.0 / 3.0, a_rad=1.0)
    g, a = model.gamma, model.a_rad

    def prim(rut):
        rho, u, T = rut
        return rho, u, float(thermo.ptot(g, a, rho, T))

    rl, ul, pl = prim(left_rut)
    rr, ur, pr = prim(right_rut)

    def init(x):
        x = np.asarray(x, dtype=float)
        left = x < x_split
        rho = np.where(left, rl, rr)
        u = np.where(left, ul, ur)
        p = np.where(left, pl, pr)
        return rho, u, p

    fan_cache = {}

    def exact(x, t):
        if "fan" not in fan_cache:
            fan_cache["fan"] = riemann.solve(model, PrimState(rl, ul, pl),
                                             PrimState(rr, ur, pr))
        if t <= 0.0:
            return init(x)
        xi = (np.asarray(x, dtype=float) - x_split) / t
        return fan_cache["fan"].sample(xi)

    return Case1D(name=name, model=model, x0=0.0, x1=1.0, t_end=t_end,
                  bc="outflow", cells=200, theta=1.0,
                  init=init, exact=exact)


def _sine2d_init(X, Y):
    rho = 1.0 + 0.2 * np.sin(2.0 * np.pi * (np.asarray(X, dtype=float)
                                            + np.asarray(Y, dtype=float)))
    shape = np.shape(rho)
    return (rho, np.full(shape, 0.2), np.full(shape, 0.2),
            np.ones(shape))


def _sine2d_exact(X, Y, t):
    return 1.0 + 0.2 * np.sin(2.0 * np.pi * (np.asarray(X, dtype=float)
                                             + np.asarray(Y, dtype=float)
                                             - 0.4 * t))


def _shock_cloud_init(X, Y):
    """Mach 256.7 shock at x=1.64 running into a 100x denser cloud."""
    model = GasModel(gamma=5.0 / 3.0, a_rad=0.01)
    g, a = model.gamma, model.a_rad
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    post = X < 1.64
    cloud = (X - 1.82) ** 2 + (Y - 0.5) ** 2 < 0.15 ** 2
    rho = np.where(post, 6.57615, 1.0)
    rho = np.where(cloud, 100.0, rho)
    T = np.where(post, 20.0, 0.01)
    u = np.where(post, 0.0, -22.9472)
    v = np.zeros_like(X)
    p = thermo.ptot(g, a, rho, T)
    return rho, u, v, p


def _wind_cloud_init(X, Y):
    """Quiescent ambient gas with a 25x denser circular cloud."""
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    cloud = (X - 0.3) ** 2 + (Y - 0.5) ** 2 < 0.15 ** 2
    rho = np.where(cloud, 25.0, 1.0)
    T = np.full_like(X, 0.09)
    model = GasModel(gamma=5.0 / 3.0, a_rad=1.0)
    p = thermo.ptot(model.gamma, model.a_rad, rho, T)
    return rho, np.zeros_like(X), np.zeros_like(X), p


def _wind_inflow(t):
    """Left-edge wind state ramping up as 6(1 - exp(-10t))."""
    model = GasModel(gamma=5.0 / 3.0, a_rad=1.0)
    p = float(thermo.ptot(model.gamma, model.a_rad, 1.0, 0.09))
    return np.array([1.0, 6.0 * (1.0 - np.exp(-10.0 * t)), 0.0, p])


def _build_registry():
    reg = {}
    reg["sine1d"] = Case1D(
        name="sine1d", model=_sine1d_model(), x0=0.0, x1=1.0, t_end=0.5,
        bc="periodic", cells=200, theta=1.5,
        init=_sine1d_init, exact=_sine1d_exact, smooth=True)
    reg["rp1"] = _riemann_case("rp1", (1.0, 50.0, 0.5), (2.0, -40.0, 1.0),
                               0.6, 0.04)
    reg["rp2"] = _riemann_case("rp2", (1.0, 150.0, 0.5), (2.0, -100.0, 1.0),
                               0.6, 0.018)
    reg["rp3"] = _riemann_case("rp3", (1.0, -1.0, 1.0), (1.0, 1.0, 1.0),
                               0.5, 0.2)
    reg["rp4"] = _riemann_case("rp4", (1.0, 0.0, 6.0), (1.0, 0.0, 1.5),
                               0.5, 0.01)
    reg["sine2d"] = Case2D(
        name="sine2d", model=GasModel(gamma=5.0 / 3.0, a_rad=1.0),
        x0=0.0, x1=1.0, y0=0.0, y1=1.0, t_end=0.5, bc="periodic",
        nx=10, ny=10, theta=1.5,
        init=_sine2d_init, exact=_sine2d_exact, smooth=True)
    reg["shock-cloud"] = Case2D(
        name="shock-cloud", model=GasModel(gamma=5.0 / 3.0, a_rad=0.01),
        x0=0.0, x1=2.0, y0=0.0, y1=1.0, t_end=0.07, bc="outflow",
        nx=256, ny=128, theta=1.5,
        init=_shock_cloud_init, exact=None)
    reg["wind-cloud"] = Case2D(
        name="wind-cloud", model=GasModel(gamma=5.0 / 3.0, a_rad=1.0),
        x0=0.0, x1=2.0, y0=0.0, y1=1.0, t_end=0.6,
        bc={"left": _wind_inflow, "right": "outflow",
            "bottom": "outflow", "top": "outflow"},
        nx=256, ny=128, theta=1.5,
        init=_wind_cloud_init, exact=None)
    return reg


_REGISTRY = _build_registry()


def case_names():
    return sorted(_REGISTRY)


def get_case(name):
    try:
        return _REGISTRY[name]
    except KeyError:
        raise ConfigError("unknown case %r (known: %s)"
                          % (name, ", ".join(case_names())))
