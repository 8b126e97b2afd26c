"""Radiation hydrodynamics solvers in the zero-diffusion limit.

Exact Riemann solver and a second-order interface-derivative scheme for
an ideal gas coupled to equilibrium radiation pressure, in one and two
space dimensions.
"""

from .model import GasModel, PrimState, PrimState2D, GAMMA_CAP
from .mesh1d import Grid1D, Solver1D
from . import riemann, grp, thermo

__version__ = "0.1.0"

__all__ = [
    "GasModel", "PrimState", "PrimState2D", "GAMMA_CAP",
    "Grid1D", "Solver1D", "riemann", "grp", "thermo",
    "__version__",
]
