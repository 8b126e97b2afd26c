"""Interface state and time derivatives for piecewise-linear data.

Given primitive states and spatial slopes on each side of an interface,
produce the instantaneous state on the t-axis and its exact first time
derivative. This is the building block of the second-order scheme; the
mesh kernels call the compiled version directly, this module is the
inspectable entry point for single interfaces.
"""

from dataclasses import dataclass

from . import _kernels as _k
from .errors import raise_for_status
from .model import GasModel, PrimState

_CASE_NAMES = {
    _k.CASE_STAR: "star",
    _k.CASE_SONIC_L: "sonic-left",
    _k.CASE_SONIC_R: "sonic-right",
    _k.CASE_SIDE_L: "upwind-left",
    _k.CASE_SIDE_R: "upwind-right",
    _k.CASE_ACOUSTIC: "acoustic",
}

_WAVE_NAMES = {_k.WAVE_RARE: "rarefaction",
               _k.WAVE_SHOCK: "shock",
               _k.WAVE_NONE: "none"}


@dataclass(frozen=True)
class GrpResult:
    """Resolved interface solution.

    state is the limit W(x=0, t->0+); ddt its first time derivative along
    the t-axis, both in primitive variables (rho, u, p_tot).
    """
    case: str
    left_wave: str
    right_wave: str
    p_star: float
    u_star: float
    rho_star_left: float
    rho_star_right: float
    speeds: tuple
    state: PrimState
    ddt: tuple


def interface_rows(model: GasModel,
                   left: PrimState, dleft: tuple,
                   right: PrimState, dright: tuple):
    """Linear-system rows (a, b, d) behind the time derivatives.

    Each side of the contact contributes one equation
    a * du/dt + b * dp/dt = d for the star-region derivatives.  Returns
    ((aL, bL, dL), (aR, bR, dR)) when the t-axis sits in the star region,
    or None when the interface resolves through a side, sonic, or
    acoustic path where no such system is formed.
    """
    g, a = model.gamma, model.a_rad
    ktab = model.k_table()
    res = solve_interface(model, left, dleft, right, dright)
    if res.case != "star":
        return None
    st, ps, us, r1, c1, r2, c2, ltype, rtype, _ = _k.solve_star(
        g, a, left.rho, left.u, left.ptot,
        right.rho, right.u, right.ptot)
    raise_for_status(st, "star state solve failed")
    eL = _k.e_from_rho_ptot(g, a, left.rho, left.ptot)
    eR = _k.e_from_rho_ptot(g, a, right.rho, right.ptot)
    cL = _k.sound_re(g, a, left.rho, eL)
    cR = _k.sound_re(g, a, right.rho, eR)
    slh, slt, srt, srh = _k.wave_speeds(
        g, a, left.rho, left.u, left.ptot, right.rho, right.u, right.ptot,
        ps, us, r1, c1, r2, c2, ltype, rtype)
    if ltype == _k.WAVE_RARE:
        SL = _k.entropy_re(g, a, left.rho, eL)
        aL_, bL_, dL_, strow = _k._rare_row_left(
            g, a, left.rho, left.u, left.ptot, eL, cL, SL,
            dleft[0], dleft[1], dleft[2], r1, c1, ktab)
        raise_for_status(strow, "left fan row failed")
    elif ltype == _k.WAVE_NONE:
        aL_, bL_, dL_ = _k._degenerate_row(-1, left.rho, cL,
                                           dleft[0], dleft[1], dleft[2])
    else:
        aL_, bL_, dL_ = _k._shock_row_left(
            g, a, left.rho, left.u, left.ptot, eL, cL,
            dleft[0], dleft[1], dleft[2], ps, us, r1, c1, slh)
    if rtype == _k.WAVE_RARE:
        SR = _k.entropy_re(g, a, right.rho, eR)
        aR_, bR_, dR_, strow = _k._rare_row_right(
            g, a, right.rho, right.u, right.ptot, eR, cR, SR,
            dright[0], dright[1], dright[2], r2, c2, ktab)
        raise_for_status(strow, "right fan row failed")
    elif rtype == _k.WAVE_NONE:
        aR_, bR_, dR_ = _k._degenerate_row(1, right.rho, cR,
                                           dright[0], dright[1], dright[2])
    else:
        aR_, bR_, dR_ = _k._shock_row_right(
            g, a, right.rho, right.u, right.ptot, eR, cR,
            dright[0], dright[1], dright[2], ps, us, r2, c2, srh)
    return ((aL_, bL_, dL_), (aR_, bR_, dR_))


def solve_interface(model: GasModel,
                    left: PrimState, dleft: tuple,
                    right: PrimState, dright: tuple) -> GrpResult:
    """Resolve one interface with slopes dleft/dright = (drho, du, dp)."""
    out = _k.grp_solve(model.gamma, model.a_rad,
                       left.rho, left.u, left.ptot,
                       dleft[0], dleft[1], dleft[2],
                       right.rho, right.u, right.ptot,
                       dright[0], dright[1], dright[2],
                       model.k_table())
    raise_for_status(out[0], "interface derivative solve failed")
    return GrpResult(
        case=_CASE_NAMES[out[1]],
        left_wave=_WAVE_NAMES[out[2]],
        right_wave=_WAVE_NAMES[out[3]],
        p_star=out[4], u_star=out[5],
        rho_star_left=out[6], rho_star_right=out[7],
        speeds=(out[8], out[9], out[10], out[11]),
        state=PrimState(out[12], out[13], out[14]),
        ddt=(out[15], out[16], out[17]))
