"""Accordion-fold generators.

A plain accordion zig-zags with fold angle pi/3 and uniform spacing d between
consecutive fold vertices.  An escape accordion is an even-fold accordion
whose entering and leaving strands are a full ribbon width apart, so the
strand can exit the coil; its interior spacing is adjusted so that the exit
clearance equals the width exactly and the arc from start to end vertex is
exactly 4w/sqrt(3).  Half-wraps continue an escape accordion around the far
end of the stack with uniform spacing d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .exactnum import (
    INV_SQRT3,
    ONE,
    SQRT3,
    ZERO,
    Approx,
    Scalar,
    SymbolicLength,
    scalar,
    scalar_ceil,
)
from .geometry import Point, Segment, distance, point_line_distance, rotate, unit_direction
from .ribbon import Diagram, measure_subpath

__all__ = [
    "ConstructionError",
    "AccordionSpec",
    "AccordionGeometry",
    "gen_accordion",
    "gen_escape_accordion",
    "escape_valid",
    "min_folds_for_escape",
    "gen_half_wraps",
    "verify_accordion_distances",
]


class ConstructionError(ValueError):
    """Raised when a construction's preconditions are not met."""


Number = Union[Scalar, int, Fraction]

_HALF = Fraction(1, 2)


def _as_scalar(x: Number) -> Scalar:
    return Scalar.of(x)


@dataclass(frozen=True)
class AccordionSpec:
    d: Scalar
    fold_count: int
    variant: str = "plain-accordion"
    fold_angle: str = "pi/3"  # fixed; the only exact-optimal accordion angle

    def __post_init__(self):
        object.__setattr__(self, "d", _as_scalar(self.d))
        if self.d.sign() <= 0:
            raise ConstructionError("invalid spacing")
        if self.fold_count < 1:
            raise ConstructionError("fold_count must be positive")
        if self.variant not in ("plain-accordion", "half-wrap-positive", "half-wrap-negative"):
            raise ConstructionError(f"unknown variant {self.variant!r}")


@dataclass
class AccordionGeometry:
    """A generated accordion as a one-component diagram plus named geometry.

    o and e are segments supporting the two parallel lines that carry the
    alternating fold vertices.  For an escape accordion the interior spacing
    is the adjusted value mu (see module docstring); wraps always use the
    requested spacing d.
    """

    diagram: Diagram
    d: Scalar
    w: Scalar
    o: Segment
    e: Segment
    escape: bool = False
    m: Optional[int] = None
    mu: Optional[Scalar] = None
    variant: str = "plain-accordion"
    wrap_count: int = 0
    wrap_sign: Optional[str] = None
    wrap_lines: Optional[Tuple[Segment, Segment]] = None
    named_points: Dict[str, Point] = field(default_factory=dict)
    entering_line: Optional[Segment] = None
    component: int = 0


def _fold_label(variant: str, index: int) -> str:
    if variant == "plain-accordion":
        return "over"
    first = "under" if variant == "half-wrap-positive" else "over"
    second = "over" if first == "under" else "under"
    return first if index % 2 == 0 else second


def gen_accordion(spec: AccordionSpec, start: Point = Point(ZERO, ZERO), entry_direction: int = 0) -> AccordionGeometry:
    """Generate a uniform accordion.

    In the canonical frame (start at the origin, entry_direction = 0, i.e.
    horizontal), the fold vertices alternate between the vertical line x = 0
    and the vertical line x = d*sqrt(3)/2, with edges of length d and fold
    angle pi/3 at every interior vertex.  entry_direction rotates the whole
    frame in multiples of 30 degrees.
    """
    d = spec.d
    half_d = d * _HALF
    x_off = d * SQRT3 * _HALF
    diagram = Diagram(width=ONE)
    ci = diagram.new_component()
    n = spec.fold_count + 2  # fold_count interior folds
    for j in range(n):
        p = Point(x_off if j % 2 else ZERO, half_d * j)
        p = rotate(p, entry_direction) + start
        fold = _fold_label(spec.variant, j - 1) if 0 < j < n - 1 else None
        idx = diagram.add_vertex(ci, p, fold)
        diagram.set_landmark(f"w_{j + 1}", ci, idx)
    o = Segment(
        rotate(Point(ZERO, ZERO), entry_direction) + start,
        rotate(Point(ZERO, d), entry_direction) + start,
    )
    e = Segment(
        rotate(Point(x_off, half_d), entry_direction) + start,
        rotate(Point(x_off, half_d * 3), entry_direction) + start,
    )
    return AccordionGeometry(diagram=diagram, d=d, w=ONE, o=o, e=e, variant=spec.variant)


def escape_valid(m: int, d: Number, w: Number) -> bool:
    """Escape condition: (2m+1) * d * sqrt(3)/4 >= w (exact comparison)."""
    if m < 1:
        raise ConstructionError("m must be positive")
    d = _as_scalar(d)
    w = _as_scalar(w)
    if d.sign() <= 0:
        raise ConstructionError("invalid spacing")
    return d * SQRT3 * Fraction(2 * m + 1, 4) >= w


def min_folds_for_escape(d: Number, w: Number) -> int:
    """Smallest m with escape_valid(m, d, w)."""
    d = _as_scalar(d)
    w = _as_scalar(w)
    if d.sign() <= 0:
        raise ConstructionError("invalid spacing")
    if w.sign() <= 0:
        return 1
    # (2m+1) >= 4w / (sqrt(3) d)  <=>  m >= (4w/(sqrt(3) d) - 1) / 2
    t = (w * 4) / (SQRT3 * d)
    m = scalar_ceil((t - ONE) * _HALF)
    return max(m, 1)


def _escape_vertices(m: int, d: Scalar, w: Scalar, arc_target: Optional[Scalar] = None):
    """Vertex chain of an escape accordion in a horizontal frame.

    The march runs along +x from v_S = (0,0) to v_E on the same line, with
    2m interior fold vertices and total arc equal to arc_target (default
    4w/sqrt(3)); then d(v_E, entering line) = arc_target * sqrt(3)/4.
    Returns (points, labels of interior folds start..end, mu).
    """
    if arc_target is None:
        arc_target = w * 4 * INV_SQRT3
    mu = (arc_target - d * 2) / (2 * m)
    if mu.sign() <= 0:
        raise ConstructionError("not an escape accordion: d(v_E,P) < w")
    half_mu = mu * _HALF
    peak_y = mu * SQRT3 * _HALF
    pts: List[Point] = [Point(ZERO, ZERO)]
    for j in range(1, 2 * m):
        pts.append(Point(half_mu * j, peak_y if j % 2 else ZERO))
    # Merged descending edge passes straight through the old valley position
    # and dips half a wrap-line below, then climbs back to the march line.
    x_dip = half_mu * (2 * m) + d * _HALF
    y_dip = -(d * SQRT3 * _HALF)
    pts.append(Point(x_dip, y_dip))
    pts.append(Point(half_mu * (2 * m) + d, ZERO))
    return pts, mu


def gen_escape_accordion(m: int, d: Number, w: Number = ONE) -> AccordionGeometry:
    """Generate an escape accordion with 2m folds between v_S and v_E.

    The interior spacing is adjusted so the leaving vertex v_E is exactly one
    ribbon width from the entering strand line, the arc d_K(v_S, v_E) is
    exactly 4w/sqrt(3) and the chord d(v_S, v_E) exactly 2w/sqrt(3).  Emits
    landmarks v_S and v_E and the perpendicular foot P on the entering line.
    """
    d = _as_scalar(d)
    w = _as_scalar(w)
    if not escape_valid(m, d, w):
        raise ConstructionError("not an escape accordion: d(v_E,P) < w")
    if d * SQRT3 < w * 2:
        pts, mu = _escape_vertices(m, d, w)
    else:
        # Spacing so large that a uniform accordion already clears the width.
        pts, mu = _escape_vertices(m, d, w, arc_target=d * (2 * m + 1))
    diagram = Diagram(width=w)
    ci = diagram.new_component()
    # Entering stub: the strand arrives at v_S from the upper left at -60deg.
    stub = pts[0] + unit_direction(4).scale(w * _HALF)  # direction 120deg
    diagram.add_vertex(ci, stub)
    for idx, p in enumerate(pts):
        interior = 0 < idx < len(pts) - 1
        fold = "over" if (interior or idx == 0) else None  # v_S folds against the stub
        diagram.add_vertex(ci, p, fold)
    diagram.set_landmark("v_S", ci, 1)
    diagram.set_landmark("v_E", ci, len(pts))
    entering = Segment(pts[0], pts[0] + unit_direction(-2))  # line at -60deg
    v_e = pts[-1]
    from .geometry import perpendicular_foot

    p_foot = perpendicular_foot(v_e, entering)
    peak_y = mu * SQRT3 * _HALF
    o = Segment(pts[0], Point(ONE, ZERO))
    e = Segment(Point(ZERO, peak_y), Point(ONE, peak_y))
    return AccordionGeometry(
        diagram=diagram,
        d=d,
        w=w,
        o=o,
        e=e,
        escape=True,
        m=m,
        mu=mu,
        named_points={"P": p_foot},
        entering_line=entering,
    )


def gen_half_wraps(base: AccordionGeometry, count: int, sign: str) -> AccordionGeometry:
    """Append count half-wraps to an escape accordion, starting at v_E = w_1.

    Wraps use uniform spacing d between the line through v_E and a parallel
    line d*sqrt(3)/2 beyond it; the flat vertex coordinates are identical for
    both signs, only the folding information differs.
    """
    if not base.escape:
        raise ConstructionError("escape accordion required")
    if sign not in ("+", "-"):
        raise ConstructionError("sign must be '+' or '-'")
    if count < 0:
        raise ConstructionError("count must be nonnegative")
    ci = base.component
    comp = base.diagram.components[ci]
    v_e_idx = base.diagram.landmarks["v_E"][1]
    base.diagram.set_landmark("w_1", ci, v_e_idx)
    if count == 0:
        return base
    v_e = comp.vertices[v_e_idx].point
    d = base.d
    half_d = d * _HALF
    dip_y = v_e.y - d * SQRT3 * _HALF
    variant = "half-wrap-positive" if sign == "+" else "half-wrap-negative"
    comp.vertices[v_e_idx].fold = _fold_label(variant, 0)
    for j in range(2, count + 2):
        p = Point(v_e.x + half_d * (j - 1), v_e.y if j % 2 else dip_y)
        fold = _fold_label(variant, j - 1) if j < count + 1 else None
        idx = base.diagram.add_vertex(ci, p, fold)
        base.diagram.set_landmark(f"w_{j}", ci, idx)
    base.variant = variant
    base.wrap_count = count
    base.wrap_sign = sign
    base.wrap_lines = (
        Segment(v_e, Point(v_e.x + ONE, v_e.y)),
        Segment(Point(v_e.x, dip_y), Point(v_e.x + ONE, dip_y)),
    )
    return base


@dataclass(frozen=True)
class DistanceCheck:
    name: str
    expected: Scalar
    measured: Union[Scalar, Approx]
    match: bool


def _check(name: str, expected: Scalar, measured) -> DistanceCheck:
    ok = isinstance(measured, Scalar) and measured == expected
    return DistanceCheck(name, expected, measured, ok)


def verify_accordion_distances(g: AccordionGeometry) -> List[DistanceCheck]:
    """Check every applicable exact distance relation on a generated accordion."""
    checks: List[DistanceCheck] = []
    diagram = g.diagram
    lm = diagram.landmarks
    if g.escape:
        v_s = diagram.landmark_point("v_S")
        v_e = diagram.landmark_point("v_E")
        w = g.w
        four_over_sqrt3 = w * 4 * INV_SQRT3
        checks.append(_check("d_K(v_S,v_E)", four_over_sqrt3 if g.mu is not None and g.d * SQRT3 < w * 2 else g.d * (2 * g.m + 1), measure_subpath(diagram, "v_S", "v_E")))
        checks.append(_check("d(v_S,v_E)", (checks[-1].expected) * _HALF, distance(v_s, v_e)))
        if g.entering_line is not None:
            checks.append(_check("d(v_E,P)", checks[0].expected * SQRT3 * Fraction(1, 4), point_line_distance(v_e, g.entering_line)))
        # Interior odd/even fold lines of the escape coil.
        checks.append(_check("o-e distance", g.mu * SQRT3 * _HALF, point_line_distance(g.e.p, g.o)))
    else:
        checks.append(_check("o-e distance", g.d * SQRT3 * _HALF, point_line_distance(g.e.p, g.o)))
        if "w_1" in lm and "w_3" in lm:
            checks.append(_check("d(w_1,w_3)", g.d, distance(diagram.landmark_point("w_1"), diagram.landmark_point("w_3"))))
    if g.wrap_count:
        checks.append(_check("wrap o-e distance", g.d * SQRT3 * _HALF, point_line_distance(g.wrap_lines[1].p, g.wrap_lines[0])))
        if g.wrap_count >= 2:
            checks.append(_check("d(w_1,w_3)", g.d, distance(diagram.landmark_point("w_1"), diagram.landmark_point("w_3"))))
        n = g.wrap_count // 2
        if n >= 1 and f"w_{2 * n + 1}" in lm:
            top = f"w_{2 * n + 1}"
            checks.append(_check(f"d(w_1,{top})", g.d * n, distance(diagram.landmark_point("w_1"), diagram.landmark_point(top))))
            checks.append(_check(f"d_K(w_1,{top})", g.d * 2 * n, measure_subpath(diagram, "w_1", top)))
    return checks
