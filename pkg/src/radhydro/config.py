"""Run configuration: a small line-oriented `section.key = value` format.

Grammar (one statement per line):

    # comment                 blank lines and '#' comments are ignored
    case = rp1                bare keys live in the top-level section
    model.gamma = 1.4         dotted keys select a section
    control.cfl = 0.45

Unknown keys are hard errors.  Parsing reports the offending line number;
validation reports the offending field name.
"""

from dataclasses import dataclass, replace
from typing import Optional

from . import cases
from .errors import ParseError, ValidationError

SCHEMES = ("grp", "muscl", "godunov")

# key -> (converter, default).  None defaults mean "use the case value".
_SCHEMA = {
    "case": (str, None),
    "scheme": (str, "grp"),
    "threads": (int, 1),
    "model.gamma": (float, 5.0 / 3.0),
    "model.a_rad": (float, 1.0),
    "grid.cells": (int, None),
    "grid.nx": (int, None),
    "grid.ny": (int, None),
    "control.cfl": (float, 0.45),
    "control.theta": (float, None),
    "control.t_end": (float, None),
    "output.directory": (str, "out"),
}


@dataclass(frozen=True)
class RunConfig:
    case: Optional[str] = None
    scheme: str = "grp"
    threads: int = 1
    gamma: float = 5.0 / 3.0
    a_rad: float = 1.0
    cells: Optional[int] = None
    nx: Optional[int] = None
    ny: Optional[int] = None
    cfl: float = 0.45
    theta: Optional[float] = None
    t_end: Optional[float] = None
    directory: str = "out"


_FIELD_OF_KEY = {
    "case": "case", "scheme": "scheme", "threads": "threads",
    "model.gamma": "gamma", "model.a_rad": "a_rad",
    "grid.cells": "cells", "grid.nx": "nx", "grid.ny": "ny",
    "control.cfl": "cfl", "control.theta": "theta",
    "control.t_end": "t_end", "output.directory": "directory",
}
_KEY_OF_FIELD = {v: k for k, v in _FIELD_OF_KEY.items()}


def parse_config(text):
    """Parse and validate configuration text into a RunConfig."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(lineno, "expected 'key = value'")
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if not key:
            raise ParseError(lineno, "missing key before '='")
        if key not in _SCHEMA:
            raise ParseError(lineno, "unknown key %r" % key)
        if key in values:
            raise ParseError(lineno, "duplicate key %r" % key)
        conv, _default = _SCHEMA[key]
        try:
            values[key] = conv(val)
        except ValueError:
            raise ParseError(lineno, "bad value %r for %r" % (val, key))
    kwargs = {_FIELD_OF_KEY[k]: v for k, v in values.items()}
    return validate(RunConfig(**kwargs))


def validate(cfg):
    """Check a RunConfig against field constraints; returns cfg."""
    if cfg.case is None:
        raise ValidationError("case", "a case name is required")
    if cfg.case not in cases.case_names():
        raise ValidationError("case", "unknown case %r (known: %s)"
                              % (cfg.case, ", ".join(cases.case_names())))
    if cfg.scheme not in SCHEMES:
        raise ValidationError("scheme", "must be one of %s" % (SCHEMES,))
    if cfg.gamma <= 1.0:
        raise ValidationError("model.gamma", "must exceed 1")
    if cfg.a_rad < 0.0:
        raise ValidationError("model.a_rad", "must be nonnegative")
    if not 0.0 < cfg.cfl <= 1.0:
        raise ValidationError("control.cfl", "must lie in (0, 1]")
    if cfg.theta is not None and not 1.0 <= cfg.theta <= 2.0:
        raise ValidationError("control.theta", "must lie in [1, 2]")
    if cfg.t_end is not None and cfg.t_end < 0.0:
        raise ValidationError("control.t_end", "must be nonnegative")
    if cfg.threads < 1:
        raise ValidationError("threads", "must be at least 1")
    for name in ("cells", "nx", "ny"):
        val = getattr(cfg, name)
        if val is not None and val < 4:
            raise ValidationError("grid.%s" % name, "must be at least 4")
    is_2d = isinstance(cases.get_case(cfg.case), cases.Case2D)
    if is_2d and cfg.cells is not None:
        raise ValidationError("grid.cells",
                              "use grid.nx/grid.ny for a 2D case")
    if not is_2d and (cfg.nx is not None or cfg.ny is not None):
        raise ValidationError("grid.nx", "use grid.cells for a 1D case")
    if cfg.scheme == "godunov" and is_2d:
        raise ValidationError("scheme", "godunov is 1D-only")
    return cfg


def serialize(cfg):
    """Render a RunConfig back to parseable text (round-trips exactly)."""
    lines = []
    for key in _SCHEMA:
        val = getattr(cfg, _FIELD_OF_KEY[key])
        if val is None:
            continue
        if isinstance(val, float):
            lines.append("%s = %.17g" % (key, val))
        else:
            lines.append("%s = %s" % (key, val))
    return "\n".join(lines) + "\n"


def with_overrides(cfg, **kwargs):
    """Apply non-None keyword overrides and revalidate."""
    updates = {k: v for k, v in kwargs.items() if v is not None}
    return validate(replace(cfg, **updates))
