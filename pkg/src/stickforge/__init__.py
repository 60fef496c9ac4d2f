"""Planar stick diagrams of knots, bouquet graphs, and theta-curves.

Enumerates stick configurations on an integer grid, sweeps crossing
assignments of diagram shadows, and identifies the resulting knots by
polynomial invariants against a bundled reference table.
"""

from stickforge.geom import ExactPoint, Stick, orientation, segment_intersection
from stickforge.pdcode import PDCode, parse_pd, emit_pd, MalformedPD
from stickforge.diagram import GraphType, StickDiagram, Shadow, build_diagram, shadow_of

__version__ = "0.1.0"

__all__ = [
    "ExactPoint",
    "Stick",
    "orientation",
    "segment_intersection",
    "PDCode",
    "parse_pd",
    "emit_pd",
    "MalformedPD",
    "GraphType",
    "StickDiagram",
    "Shadow",
    "build_diagram",
    "shadow_of",
]
