"""Exception types and status-code translation for the solver core."""

from . import _kernels as _k


class RadHydroError(Exception):
    """Base class for all solver errors."""


class InvalidStateError(RadHydroError):
    """A thermodynamic state could not be inverted (negative density,
    pressure, or energy)."""


class VacuumError(RadHydroError):
    """The Riemann data pull apart strongly enough to open a vacuum."""


class RootConvergenceError(RadHydroError):
    """An iterative root solve did not converge."""


class BracketError(RadHydroError):
    """A root could not be bracketed."""


class QuadratureError(RadHydroError):
    """An adaptive quadrature exceeded its subdivision budget."""


class SingularSystemError(RadHydroError):
    """The interface 2x2 (or characteristic) system was singular."""


class ConfigError(RadHydroError):
    """Malformed run configuration."""


class ParseError(ConfigError):
    """Syntactically invalid configuration text.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__("line %d: %s" % (lineno, message))


class ValidationError(ConfigError):
    """Configuration parsed but failed a semantic check.

    Carries the name of the offending field.
    """

    def __init__(self, fieldname, message=""):
        self.field = fieldname
        text = fieldname if not message else "%s: %s" % (fieldname, message)
        super().__init__(text)


class DomainMismatchError(RadHydroError):
    """Fields compared on incompatible grids."""


_STATUS_MAP = {
    _k.STATUS_VACUUM: VacuumError,
    _k.STATUS_ROOT: RootConvergenceError,
    _k.STATUS_BRACKET: BracketError,
    _k.STATUS_EOS: InvalidStateError,
    _k.STATUS_SINGULAR: SingularSystemError,
    _k.STATUS_QUAD: QuadratureError,
}


def raise_for_status(status, context=""):
    """Raise the exception matching a kernel status code (0 is a no-op)."""
    if status == _k.STATUS_OK:
        return
    exc = _STATUS_MAP.get(status, RadHydroError)
    msg = context if context else "kernel status %d" % status
    raise exc(msg)
