"""Exact rational plane geometry for stick diagrams.

Coordinates are `fractions.Fraction` (integer grid points in practice), so
every predicate is decided exactly; there is no epsilon anywhere. Degenerate
configurations are first-class return values rather than errors, which lets
the enumerator reject and resample placements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

Rational = Union[int, Fraction]


class GeneralPositionViolation(ValueError):
    """A placement breaks the general-position rules of a stick diagram."""


class DegenerateTriangle(ValueError):
    """Triangle with collinear corners passed where a proper one is required."""


@dataclass(frozen=True)
class ExactPoint:
    """Point in the plane with exact rational coordinates."""

    x: Rational
    y: Rational

    def __sub__(self, other: "ExactPoint") -> "ExactPoint":
        return ExactPoint(self.x - other.x, self.y - other.y)

    def __add__(self, other: "ExactPoint") -> "ExactPoint":
        return ExactPoint(self.x + other.x, self.y + other.y)

    def cross(self, other: "ExactPoint") -> Rational:
        return self.x * other.y - self.y * other.x

    def dot(self, other: "ExactPoint") -> Rational:
        return self.x * other.x + self.y * other.y

    def as_pair(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        fx, fy = Fraction(self.x), Fraction(self.y)
        return ((fx.numerator, fx.denominator), (fy.numerator, fy.denominator))


@dataclass(frozen=True)
class Stick:
    """Closed segment between two distinct exact points."""

    a: ExactPoint
    b: ExactPoint

    def __post_init__(self):
        if self.a == self.b:
            raise GeneralPositionViolation(f"zero-length stick at {self.a}")

    def direction(self) -> ExactPoint:
        return self.b - self.a


def orientation(p: ExactPoint, q: ExactPoint, r: ExactPoint) -> int:
    """Sign of the cross product (q-p) x (r-p): +1 ccw, -1 cw, 0 collinear."""
    v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


class ProperPoint:
    """Transverse interior intersection point of two sticks."""

    __slots__ = ("point",)

    def __init__(self, point: ExactPoint):
        self.point = point

    def __repr__(self):
        return f"ProperPoint({self.point.x}, {self.point.y})"

    def __eq__(self, other):
        return isinstance(other, ProperPoint) and other.point == self.point


class Degenerate:
    """Non-transverse incidence: endpoint contact, collinear overlap, or touch."""

    __slots__ = ()

    def __repr__(self):
        return "Degenerate"

    def __eq__(self, other):
        return isinstance(other, Degenerate)


DEGENERATE = Degenerate()

IntersectionResult = Union[None, ProperPoint, Degenerate]


def _on_segment_collinear(p: ExactPoint, s: Stick) -> bool:
    # p assumed collinear with s; true iff p lies within the closed segment
    if s.a.x != s.b.x:
        lo, hi = min(s.a.x, s.b.x), max(s.a.x, s.b.x)
        return lo <= p.x <= hi
    lo, hi = min(s.a.y, s.b.y), max(s.a.y, s.b.y)
    return lo <= p.y <= hi


def segment_intersection(s: Stick, t: Stick) -> IntersectionResult:
    """Classify how two sticks meet.

    Returns ProperPoint(p) for a single transverse interior crossing, None
    for disjoint sticks, and Degenerate for anything else (shared endpoint,
    endpoint on interior, collinear overlap).
    """
    o1 = orientation(s.a, s.b, t.a)
    o2 = orientation(s.a, s.b, t.b)
    o3 = orientation(t.a, t.b, s.a)
    o4 = orientation(t.a, t.b, s.b)

    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        d1 = (t.a - s.a).cross(t.b - s.a)
        d2 = (t.b - s.b).cross(t.a - s.b)
        lam = Fraction(d1, d1 + d2)
        p = ExactPoint(
            s.a.x + lam * (s.b.x - s.a.x),
            s.a.y + lam * (s.b.y - s.a.y),
        )
        return ProperPoint(p)

    # any zero orientation: check whether the touch actually lands on both segments
    if o1 == 0 and _on_segment_collinear(t.a, s):
        return DEGENERATE
    if o2 == 0 and _on_segment_collinear(t.b, s):
        return DEGENERATE
    if o3 == 0 and _on_segment_collinear(s.a, t):
        return DEGENERATE
    if o4 == 0 and _on_segment_collinear(s.b, t):
        return DEGENERATE
    return None


def triangle_side(tri: Tuple[ExactPoint, ExactPoint, ExactPoint], p: ExactPoint) -> str:
    """Strict point-in-triangle test: 'inside', 'outside', or 'boundary'."""
    a, b, c = tri
    ref = orientation(a, b, c)
    if ref == 0:
        raise DegenerateTriangle("collinear triangle corners")
    signs = (
        ref * orientation(a, b, p),
        ref * orientation(b, c, p),
        ref * orientation(c, a, p),
    )
    if any(s < 0 for s in signs):
        return "outside"
    if any(s == 0 for s in signs):
        return "boundary"
    return "inside"


def triangle_crossing_parity(tri: Tuple[ExactPoint, ExactPoint, ExactPoint], e: Stick) -> int:
    """Number of proper crossings of stick `e` with the triangle boundary.

    Requires both endpoints of `e` strictly off the boundary; the count obeys
    the parity table: opposite sides -> 1, both inside -> 0, both outside ->
    0 or 2.
    """
    a, b, c = tri
    side_a = triangle_side(tri, e.a)
    side_b = triangle_side(tri, e.b)
    if side_a == "boundary" or side_b == "boundary":
        raise GeneralPositionViolation("stick endpoint on triangle boundary")
    count = 0
    for u, v in ((a, b), (b, c), (c, a)):
        hit = segment_intersection(Stick(u, v), e)
        if isinstance(hit, ProperPoint):
            count += 1
        elif isinstance(hit, Degenerate):
            raise GeneralPositionViolation("stick meets triangle non-transversely")
    if side_a == side_b:
        expected = (0,) if side_a == "inside" else (0, 2)
    else:
        expected = (1,)
    if count not in expected:
        raise GeneralPositionViolation(f"parity contract violated: {count} crossings")
    return count


def crossing_point(s: Stick, t: Stick) -> Optional[ExactPoint]:
    """Exact crossing point when segment_intersection is proper, else None."""
    hit = segment_intersection(s, t)
    if isinstance(hit, ProperPoint):
        return hit.point
    return None


def position_along(s: Stick, p: ExactPoint) -> Fraction:
    """Affine parameter of p along s (0 at a, 1 at b); p must lie on line(s)."""
    d = s.direction()
    return Fraction((p - s.a).dot(d)) / Fraction(d.dot(d))
