import math
from fractions import Fraction

import pytest

from foldribbon.exactnum import ONE, SQRT3, ZERO, Approx, Scalar, scalar
from foldribbon.geometry import (
    Point,
    Segment,
    angle_at_vertex,
    distance,
    perpendicular_foot,
    point_line_distance,
    polyline_length,
    rotate,
    segment_intersection,
    unit_direction,
)


def P(x, y):
    return Point(Scalar.of(Fraction(x)), Scalar.of(Fraction(y)))


def test_unit_directions_on_the_grid():
    assert unit_direction(0) == Point(ONE, ZERO)
    assert unit_direction(3) == Point(ZERO, ONE)
    u = unit_direction(2)  # 60 degrees
    assert u == Point(scalar(Fraction(1, 2)), scalar(0, Fraction(1, 2)))
    for k in range(-12, 13):
        v = unit_direction(k)
        assert v.x * v.x + v.y * v.y == ONE


def test_rotate_composition():
    p = Point(scalar(2), scalar(0, Fraction(1, 3)))
    assert rotate(rotate(p, 5), 7) == rotate(p, 12) == p.scale(-ONE).scale(-ONE)
    assert rotate(p, 6) == Point(-p.x, -p.y)


def test_distance_exact():
    assert distance(P(0, 0), P(3, 4)) == scalar(5)
    # Grid diagonal: |(1, sqrt3)| = 2
    q = Point(ONE, SQRT3)
    assert distance(Point(ZERO, ZERO), q) == scalar(2)


def test_segment_intersection_kinds():
    a = Segment(P(0, 0), P(2, 0))
    assert segment_intersection(a, Segment(P(1, -1), P(1, 1))).kind == "proper-point"
    assert segment_intersection(a, Segment(P(2, 0), P(3, 1))).kind == "endpoint-touch"
    assert segment_intersection(a, Segment(P(1, 0), P(3, 0))).kind == "collinear-overlap"
    assert segment_intersection(a, Segment(P(0, 1), P(2, 1))).kind == "none"
    r = segment_intersection(a, Segment(P(1, -1), P(1, 1)))
    assert r.point == P(1, 0)


def test_angle_classification():
    v = P(0, 0)
    assert angle_at_vertex(P(1, 0), v, P(-1, 0)) == "pi"
    assert angle_at_vertex(P(1, 0), v, P(1, 0)) == "0"
    assert angle_at_vertex(P(1, 0), v, Point(ZERO, ONE)) == "pi/2"
    # 60-degree opening
    assert angle_at_vertex(P(1, 0), v, unit_direction(2)) == "pi/3"
    assert angle_at_vertex(P(1, 0), v, unit_direction(4)) == "2pi/3"
    assert angle_at_vertex(P(1, 0), v, unit_direction(1)) == "pi/6"


def test_polyline_length_exact_and_approx():
    pts = [P(0, 0), P(1, 0), Point(scalar(1), SQRT3)]
    assert polyline_length(pts) == scalar(1, 1)
    # |(1, sqrt3)| = 2 exactly
    assert polyline_length([P(0, 0), Point(ONE, SQRT3)]) == scalar(2)
    # An off-grid edge falls back to a float approximation.
    odd = [P(0, 0), P(1, 1)]
    ln = polyline_length(odd)
    assert isinstance(ln, Approx)
    assert ln.value == pytest.approx(math.sqrt(2))


def test_polyline_length_many_repeated_edges():
    pts = [P(0, 0)]
    for j in range(1, 2001):
        pts.append(P(j, j % 2))  # alternating diagonal-ish integer edges
    ln = polyline_length(pts)
    assert isinstance(ln, Approx)
    assert ln.value == pytest.approx(2000 * math.sqrt(2))


def test_point_line_distance_and_foot():
    line = Segment(P(0, 0), P(1, 0))
    p = Point(scalar(5), scalar(0, 2))
    assert point_line_distance(p, line) == scalar(0, 2)
    assert perpendicular_foot(p, line) == P(5, 0)
    slanted = Segment(P(0, 0), unit_direction(2))
    assert point_line_distance(P(1, 0), slanted) == scalar(0, Fraction(1, 2))
