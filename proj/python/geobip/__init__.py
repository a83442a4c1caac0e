"""Bipartiteness of segment and ball intersection graphs.

Every answer carries a witness: a 2-coloring or an odd cycle of object ids.
Coordinates may be ints, strings ("0.1", "1/3"), Fractions or floats; all
arithmetic is exact.
"""

from ._core import (
    DegenerateInputError,
    InvariantError,
    ParseError,
    check_balls,
    check_json,
    check_segments,
    degree_cap,
    generate,
    svg,
)

__all__ = [
    "DegenerateInputError",
    "InvariantError",
    "ParseError",
    "check_balls",
    "check_json",
    "check_segments",
    "degree_cap",
    "generate",
    "svg",
]
