"""Exact planar geometry over Q(sqrt(3)).

Points carry Scalar coordinates, so intersection tests, angle classification
and perpendicular feet are all exact.  Lengths are exact Scalars whenever the
squared length is a perfect square in the field (true for every edge whose
direction is a multiple of 30 degrees and whose length lies in the field),
and flagged Approx floats otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .exactnum import (
    ONE,
    SQRT3,
    ZERO,
    Approx,
    ExactnumError,
    Scalar,
    scalar,
    scalar_sqrt,
)

__all__ = [
    "Point",
    "Segment",
    "IntersectionResult",
    "unit_direction",
    "rotate",
    "distance",
    "segment_intersection",
    "angle_at_vertex",
    "polyline_length",
    "point_line_distance",
    "perpendicular_foot",
]

Number = Union[Scalar, int, Fraction]


@dataclass(frozen=True)
class Point:
    x: Scalar
    y: Scalar

    def __post_init__(self):
        object.__setattr__(self, "x", Scalar.of(self.x))
        object.__setattr__(self, "y", Scalar.of(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def scale(self, k: Number) -> "Point":
        k = Scalar.of(k)
        return Point(self.x * k, self.y * k)

    def dot(self, other: "Point") -> Scalar:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> Scalar:
        return self.x * other.y - self.y * other.x

    def norm_sq(self) -> Scalar:
        return self.dot(self)

    def norm(self):
        return scalar_sqrt(self.norm_sq())

    def to_floats(self) -> tuple[float, float]:
        return (self.x.to_float(), self.y.to_float())

    def __repr__(self):
        return f"Point({self.x.text()}, {self.y.text()})"


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    def direction(self) -> Point:
        return self.q - self.p

    def midpoint(self) -> Point:
        return Point((self.p.x + self.q.x) / 2, (self.p.y + self.q.y) / 2)

    def length(self):
        return distance(self.p, self.q)


_HALF = Fraction(1, 2)
# cos/sin of k*30 degrees, k = 0..11, as (a, b) with value a + b*sqrt(3).
_COS = [
    scalar(1),
    scalar(0, _HALF),
    scalar(_HALF),
    scalar(0),
    scalar(-_HALF),
    scalar(0, -_HALF),
    scalar(-1),
    scalar(0, -_HALF),
    scalar(-_HALF),
    scalar(0),
    scalar(_HALF),
    scalar(0, _HALF),
]
_SIN = _COS[9:] + _COS[:9]  # sin(x) = cos(x - 90deg)


def unit_direction(k30: int) -> Point:
    """Unit vector in direction k30 * 30 degrees (exact)."""
    k = k30 % 12
    return Point(_COS[k], _SIN[k])


def rotate(p: Point, k30: int) -> Point:
    """Rotate a point about the origin by k30 * 30 degrees (exact)."""
    k = k30 % 12
    c, s = _COS[k], _SIN[k]
    return Point(p.x * c - p.y * s, p.x * s + p.y * c)


def distance(p: Point, q: Point):
    return (q - p).norm()


@dataclass(frozen=True)
class IntersectionResult:
    """Outcome of a segment-segment intersection test.

    kind is one of "none", "proper-point", "endpoint-touch",
    "collinear-overlap".  For the point kinds, ``point`` is the exact
    intersection point; for collinear overlap it is one point of the shared
    portion (an endpoint of the overlap interval).
    """

    kind: str
    point: Optional[Point] = None


def _on_segment_collinear(p: Point, s: Segment) -> bool:
    """Whether collinear point p lies within segment s (inclusive)."""
    d = s.direction()
    t = (p - s.p).dot(d)
    return ZERO <= t <= d.norm_sq()


def segment_intersection(s1: Segment, s2: Segment) -> IntersectionResult:
    r = s1.direction()
    s = s2.direction()
    qp = s2.p - s1.p
    denom = r.cross(s)
    if denom.is_zero():
        if not qp.cross(r).is_zero():
            return IntersectionResult("none")
        # Collinear: project onto r.
        rr = r.norm_sq()
        t0 = qp.dot(r)
        t1 = t0 + s.dot(r)
        lo, hi = (t0, t1) if t0 <= t1 else (t1, t0)
        if hi < ZERO or lo > rr:
            return IntersectionResult("none")
        if hi == ZERO:
            return IntersectionResult("endpoint-touch", s1.p)
        if lo == rr:
            return IntersectionResult("endpoint-touch", s1.q)
        # Genuine overlap of positive length.
        start_t = lo if lo > ZERO else ZERO
        pt = s1.p + r.scale(start_t / rr)
        return IntersectionResult("collinear-overlap", pt)
    t_num = qp.cross(s)
    u_num = qp.cross(r)
    # Parameters: t = t_num/denom on s1, u = u_num/denom on s2.
    t = t_num / denom
    u = u_num / denom
    if t < ZERO or t > ONE or u < ZERO or u > ONE:
        return IntersectionResult("none")
    pt = s1.p + r.scale(t)
    at_end = t == ZERO or t == ONE or u == ZERO or u == ONE
    if at_end:
        return IntersectionResult("endpoint-touch", pt)
    return IntersectionResult("proper-point", pt)


def angle_at_vertex(prev: Point, v: Point, nxt: Point) -> str:
    """Classify the angle between the two edge rays meeting at v.

    The angle is measured between the rays v->prev and v->nxt, so a straight
    pass-through is "pi" and a hairpin fold is "0".  Returns one of
    "0", "pi/6", "pi/3", "pi/2", "2pi/3", "pi", "other".
    """
    u = prev - v
    w = nxt - v
    if u.norm_sq().is_zero() or w.norm_sq().is_zero():
        raise ExactnumError("degenerate vertex")
    d = u.dot(w)
    c = u.cross(w)
    n = u.norm_sq() * w.norm_sq()
    if c.is_zero():
        return "pi" if d.sign() < 0 else "0"
    if d.is_zero():
        return "pi/2"
    d4 = d * d * 4
    if d.sign() > 0:
        if d4 == n:
            return "pi/3"
        if d4 == n * 3:
            return "pi/6"
    else:
        if d4 == n:
            return "2pi/3"
    return "other"


def polyline_length(points: Sequence[Point]):
    """Total length of a polyline; exact when every edge length is exact.

    Repeated edge vectors are counted and measured once, so long periodic
    chains (accordions, shuttle trains) cost one square root per distinct
    edge shape rather than one per edge.
    """
    counts: dict[tuple, int] = {}
    prev = None
    for p in points:
        cur = (
            p.x.a.numerator, p.x.a.denominator, p.x.b.numerator, p.x.b.denominator,
            p.y.a.numerator, p.y.a.denominator, p.y.b.numerator, p.y.b.denominator,
        )
        if prev is not None:
            # Raw cross-multiplied differences: no gcd, cheap integer hashing.
            nums = []
            dens = []
            for i in range(0, 8, 2):
                fn, fd = cur[i], cur[i + 1]
                gn, gd = prev[i], prev[i + 1]
                nums.append(fn * gd - gn * fd)
                dens.append(fd * gd)
            # Length is invariant under negating the edge vector; canonicalize.
            if nums < [0, 0, 0, 0]:
                nums = [-v for v in nums]
            key = (nums[0], dens[0], nums[1], dens[1], nums[2], dens[2], nums[3], dens[3])
            counts[key] = counts.get(key, 0) + 1
        prev = cur
    total = ZERO
    approx = 0.0
    inexact = False
    for key, c in counts.items():
        xa = Fraction(key[0], key[1])
        xb = Fraction(key[2], key[3])
        ya = Fraction(key[4], key[5])
        yb = Fraction(key[6], key[7])
        nsq = Scalar(xa * xa + 3 * xb * xb + ya * ya + 3 * yb * yb, 2 * (xa * xb + ya * yb))
        ln = scalar_sqrt(nsq)
        if isinstance(ln, Approx):
            inexact = True
            approx += ln.value * c
        else:
            total = total + ln * c
    if inexact:
        return Approx(total.to_float() + approx)
    return total


def point_line_distance(p: Point, line: Segment):
    """Distance from p to the infinite line through the segment's endpoints."""
    d = line.direction()
    nsq = d.norm_sq()
    if nsq.is_zero():
        raise ExactnumError("degenerate line")
    c = d.cross(p - line.p)
    return scalar_sqrt(c * c / nsq)


def perpendicular_foot(p: Point, line: Segment) -> Point:
    """Orthogonal projection of p onto the infinite line (exact)."""
    d = line.direction()
    nsq = d.norm_sq()
    if nsq.is_zero():
        raise ExactnumError("degenerate line")
    t = (p - line.p).dot(d) / nsq
    return line.p + d.scale(t)
