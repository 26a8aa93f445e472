"""Simple lines and simple wedges of planar point configurations.

Coordinates are exact: pass ints, ``fractions.Fraction`` values or strings
such as ``"4/3"``; coordinates come back as ``Fraction``.
"""

import json as _json

from ._core import (
    Configuration,
    SimpleWedgeError,
    __version__,
    brute_force_wedges,
    closed_orbit_config,
    collinear,
    conjecture_search,
    decompose,
    find_wedge_from_line,
    g_extended,
    intersect,
    is_ell_bounded,
    line_through,
    maximal_orbit,
    nine_point,
    parse_points,
    render_svg,
    simple_lines,
    six_point,
    spanned_lines,
    third_point,
    verify_orbit,
    wedge_coverage,
    write_points,
    analyze_json,
)


def analyze(config):
    """Full analysis report as a dict (same schema as ``simplewedge analyze --json``)."""
    return _json.loads(analyze_json(config))


__all__ = [
    "Configuration",
    "SimpleWedgeError",
    "analyze",
    "analyze_json",
    "brute_force_wedges",
    "closed_orbit_config",
    "collinear",
    "conjecture_search",
    "decompose",
    "find_wedge_from_line",
    "g_extended",
    "intersect",
    "is_ell_bounded",
    "line_through",
    "maximal_orbit",
    "nine_point",
    "parse_points",
    "render_svg",
    "simple_lines",
    "six_point",
    "spanned_lines",
    "third_point",
    "verify_orbit",
    "wedge_coverage",
    "write_points",
]
