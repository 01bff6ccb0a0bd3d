"""Half-twist assemblies between two ribbons, with exact measured length.

The assembly realizes k half-twists between ribbon AB and ribbon CD.  Ribbon
AB carries an escape accordion followed by |k| wrap edges; ribbon CD runs a
monotone shuttle train of pi/3 folds under the accordion and meets the wrap
edges in anti-phase, producing exactly |k| transversal crossings.  Every fold
line in the assembly is horizontal, so the diagram validates cleanly, and the
measured length from the start vertices to the final landmarks is exactly
12/sqrt(3) + (2|k|-1)d for every integer k (including k = 0, where the
formula degenerates to 12/sqrt(3) - d).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple, Union

from .accordion import ConstructionError, _escape_vertices, _fold_label, escape_valid, min_folds_for_escape
from .exactnum import (
    INV_SQRT3,
    ONE,
    SQRT3,
    ZERO,
    Scalar,
    SymbolicLength,
    scalar,
    scalar_floor,
)
from .geometry import Point, Segment, rotate, unit_direction
from .ribbon import Crossing, Diagram, measure_subpath

__all__ = [
    "TwistAssembly",
    "construct_half_twists",
    "half_twist_length_formula",
    "measure_twist_assembly",
    "spacing_for_epsilon",
    "fold_back_end",
    "zero_fold_join",
]

Number = Union[Scalar, int, Fraction]
_HALF = Fraction(1, 2)


@dataclass
class TwistAssembly:
    diagram: Diagram
    k: int
    d: Scalar
    m: int
    w: Scalar
    ab_component: int
    cd_component: int
    ab_start: str  # landmark names delimiting the measured arcs
    ab_end: str
    cd_start: str
    cd_end: str


def half_twist_length_formula(k: int, d: Number = None) -> SymbolicLength:
    """Closed form 12/sqrt(3) + (2|k|-1)d, symbolic in the spacing d.

    The d argument is accepted for signature compatibility and ignored; the
    result stays symbolic.  For k = 0 the coefficient is -1.
    """
    return SymbolicLength(scalar(0, 4), Scalar.of(2 * abs(k) - 1))


def spacing_for_epsilon(k: int, epsilon: Number) -> Scalar:
    """A spacing d for which the construction exceeds 12/sqrt(3) by at most
    epsilon: d <= epsilon*sqrt(3) / (12*(2|k|-1))."""
    eps = Scalar.of(epsilon)
    if eps.sign() <= 0:
        raise ConstructionError("epsilon must be positive")
    coeff = max(2 * abs(k) - 1, 1)
    return eps * SQRT3 / (12 * coeff)


@lru_cache(maxsize=32)
def _escape_chain(m: int, d: Scalar, w: Scalar) -> Tuple[Point, ...]:
    pts, _mu = _escape_vertices(m, d, w)
    return tuple(pts)


@lru_cache(maxsize=32)
def _train_chain(d: Scalar, w: Scalar) -> Tuple[Point, ...]:
    """Shuttle train of ribbon CD from C to u_1, independent of k."""
    half_d = d * _HALF
    y1 = -(d * SQRT3 * _HALF)
    x_e = w * 2 * INV_SQRT3
    c_start = Point(-x_e + half_d, y1)
    span = x_e - c_start.x  # = 4w/sqrt(3) - d/2
    n_pairs = scalar_floor(span / d)
    lam = span - d * n_pairs
    if lam.is_zero():
        n_pairs -= 1
        lam = d
    pts = [c_start]
    x = c_start.x
    for leg in [lam] + [d] * n_pairs:
        pts.append(Point(x + leg * _HALF, y1 - leg * SQRT3 * _HALF))
        x = x + leg
        pts.append(Point(x, y1))
    return tuple(pts)


def construct_half_twists(k: int, d: Number, m: Optional[int] = None, w: Number = ONE) -> TwistAssembly:
    """Build the k half-twist assembly (any integer k, including 0)."""
    d = Scalar.of(d)
    w = Scalar.of(w)
    if d.sign() <= 0:
        raise ConstructionError("invalid spacing")
    if m is None:
        m = min_folds_for_escape(d, w)
    if not escape_valid(m, d, w):
        raise ConstructionError("not an escape accordion: d(v_E,P) < w")

    n = abs(k)
    half_d = d * _HALF
    y1 = -(d * SQRT3 * _HALF)  # lower wrap / train line
    y2 = y1 * 2  # train bottom line
    diagram = Diagram(width=w)

    # ---- ribbon AB: stub, escape accordion, wrap edges -------------------
    esc_pts = _escape_chain(m, d, w)
    ab = diagram.new_component()
    stub = esc_pts[0] + unit_direction(4).scale(w * _HALF)
    diagram.add_vertex(ab, stub)
    for idx, p in enumerate(esc_pts):
        fold = "over" if idx < len(esc_pts) - 1 else None
        diagram.add_vertex(ab, p, fold)
    v_s_idx = 1
    v_e_idx = len(esc_pts)
    diagram.set_landmark("v_S", ab, v_s_idx)
    diagram.set_landmark("v_E", ab, v_e_idx)
    x_e = esc_pts[-1].x  # = 2w/sqrt(3)
    wrap_variant = "half-wrap-positive" if k >= 0 else "half-wrap-negative"
    diagram.set_landmark("w_1", ab, v_e_idx)
    if n:
        diagram.components[ab].vertices[v_e_idx].fold = _fold_label(wrap_variant, 0)
    for j in range(2, n + 2):
        p = Point(x_e + half_d * (j - 1), ZERO if j % 2 else y1)
        fold = _fold_label(wrap_variant, j - 1) if j < n + 1 else None
        idx = diagram.add_vertex(ab, p, fold)
        diagram.set_landmark(f"w_{j}", ab, idx)
    ab_end = f"w_{n + 1}" if n else "v_E"

    # ---- ribbon CD: monotone shuttle train, then anti-phase zig ----------
    cd = diagram.new_component()
    train = _train_chain(d, w)
    for i, p in enumerate(train):
        fold = "over" if 0 < i < len(train) - 1 else None
        diagram.add_vertex(cd, p, fold)
    diagram.set_landmark("C", cd, 0)
    u1_idx = len(train) - 1
    diagram.set_landmark("u_1", cd, u1_idx)
    # u_1 is a straight pass-through: the climb out of the train continues
    # directly into the first anti-phase zig edge.  Zig folds start at u_2.
    zig_variant = "half-wrap-negative" if k >= 0 else "half-wrap-positive"
    for j in range(2, n + 2):
        p = Point(x_e + half_d * (j - 1), y1 if j % 2 else ZERO)
        fold = _fold_label(zig_variant, j - 2) if j < n + 1 else None
        idx = diagram.add_vertex(cd, p, fold)
        diagram.set_landmark(f"u_{j}", cd, idx)
    if n == 0:
        # End D extends past end B: straight pass-through beyond u_1.
        y_idx = diagram.add_vertex(cd, Point(x_e + half_d, ZERO))
        diagram.set_landmark("Y", cd, y_idx)
        cd_end = "u_1"
        end_name = "Y"
    else:
        cd_end = f"u_{n + 1}"
        end_name = "E" if n % 2 else "G"
    diagram.set_landmark(end_name, cd, diagram.landmarks[cd_end][1] if n else y_idx)

    # ---- crossings: wrap edge j meets zig edge j exactly once ------------
    quarter_d = d * Fraction(1, 4)
    for j in range(1, n + 1):
        ab_edge = v_e_idx + j - 1
        cd_edge = u1_idx + j - 1
        pt = Point(x_e + quarter_d * (2 * j - 1), y1 * _HALF)
        diagram.crossings.append(Crossing((ab, ab_edge), (cd, cd_edge), k > 0, pt, kind="twist"))

    return TwistAssembly(
        diagram=diagram,
        k=k,
        d=d,
        m=m,
        w=w,
        ab_component=ab,
        cd_component=cd,
        ab_start="v_S",
        ab_end=ab_end,
        cd_start="C",
        cd_end=cd_end,
    )


def measure_twist_assembly(t: TwistAssembly) -> Scalar:
    """Sum of the measured arcs of both ribbons, start to final landmark."""
    a = measure_subpath(t.diagram, t.ab_start, t.ab_end)
    b = measure_subpath(t.diagram, t.cd_start, t.cd_end)
    return a + b


@dataclass(frozen=True)
class FoldBack:
    q: Point
    r: Point
    fold_line: Segment
    distances: Dict[str, Scalar]


def fold_back_end(p: Point, direction: int, w: Number = ONE, side: int = 1) -> FoldBack:
    """Fold a strand end back towards its start.

    The strand arrives at its final pi/3 fold vertex P travelling in
    ``direction`` (a multiple of 30 degrees).  The end is folded at a new
    vertex Q placed so that the ribbon's side edge lands on the fold line
    through P; R is the perpendicular foot of Q on the strand line.  The
    exact distances are d(P,Q) = w/sqrt(3), d(P,R) = w/2 and
    d(Q,R) = w/(2*sqrt(3)); they are identical for an overfold and an
    underfold at Q (side = +1 or -1).
    """
    w = Scalar.of(w)
    u = unit_direction(direction)
    q = p + rotate(u, -side).scale(w * INV_SQRT3)
    r = p + u.scale(w * _HALF)
    fold_dir = rotate(u, 3 * side)  # perpendicular to the strand
    half = w * _HALF
    fold_line = Segment(q - fold_dir.scale(half), q + fold_dir.scale(half))
    distances = {
        "d(P,Q)": w * INV_SQRT3,
        "d(P,R)": w * _HALF,
        "d(Q,R)": w * INV_SQRT3 * _HALF,
    }
    return FoldBack(q, r, fold_line, distances)


_TAN_HALF = {
    "pi/3": INV_SQRT3,  # tan(pi/6)
    "pi/2": ONE,  # tan(pi/4)
    "2pi/3": SQRT3,  # tan(pi/3)
}


def zero_fold_join(end1: Segment, end2: Segment, theta: str, w: Number = ONE) -> Tuple[Segment, Scalar]:
    """Join two coinciding parallel strand ends with an angle-zero fold.

    Both ends must lie on the same supporting line with overlapping extents;
    the join fold is placed perpendicular to the strand through the point Z
    at the minimal legal distance d(B,Z) = (1/2)tan(theta/2) from the vertex
    B = end1.q carrying the existing fold of angle theta.  Returns the fold
    line and the offset d(B,Z).
    """
    w = Scalar.of(w)
    if theta not in _TAN_HALF:
        raise ConstructionError(f"unsupported fold angle {theta!r}")
    from .geometry import segment_intersection

    res = segment_intersection(end1, end2)
    if res.kind not in ("collinear-overlap", "endpoint-touch"):
        raise ConstructionError("ends not joinable")
    b = end1.q
    back = end1.p - b
    nsq = back.norm_sq()
    if nsq.is_zero():
        raise ConstructionError("ends not joinable")
    from .exactnum import scalar_sqrt, Approx

    ln = scalar_sqrt(nsq)
    if isinstance(ln, Approx):
        raise ConstructionError("ends not joinable")
    u = back.scale(ln.inverse())
    offset = _TAN_HALF[theta] * _HALF * w
    z = b + u.scale(offset)
    perp = Point(-u.y, u.x)
    half = w * _HALF
    fold_line = Segment(z - perp.scale(half), z + perp.scale(half))
    return fold_line, offset
