"""Hilbert-Samuel constancy on cones and characteristic polyhedra."""

import json as _json

from ._hsconst import (
    REPORT_SCHEMA,
    Session,
    SessionError,
    __version__,
    command_names,
    cone_constancy_criterion,
    directrix,
    hs_at_origin,
    hs_cone_origin,
    hs_generic_point,
    parse,
    ridge,
    run_command,
    stratum_scan,
)


def load(path):
    """Parses an .ideal file from disk."""
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def report(session, command, **options):
    """Runs a command and returns the decoded JSON report and the exit code."""
    text, code = run_command(session, command, **options)
    return _json.loads(text), code


__all__ = [
    "REPORT_SCHEMA",
    "Session",
    "SessionError",
    "__version__",
    "command_names",
    "cone_constancy_criterion",
    "directrix",
    "hs_at_origin",
    "hs_cone_origin",
    "hs_generic_point",
    "load",
    "parse",
    "report",
    "ridge",
    "run_command",
    "stratum_scan",
]
