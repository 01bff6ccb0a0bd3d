"""Folded-ribbon diagram model: geometry realization, validation, measurement,
and export to a plain-text geometry format and SVG.

A diagram is a set of polyline components (the ribbon centerlines) whose
vertices carry folding information (which side of the fold lies on top),
plus declared crossings between edges, named landmark vertices, and the
ribbon width.  All coordinates are exact elements of Q(sqrt(3)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .exactnum import (
    ONE,
    ZERO,
    Approx,
    ExactnumError,
    Scalar,
    SymbolicLength,
    parse_scalar,
    scalar,
    scalar_sqrt,
)
from .geometry import (
    IntersectionResult,
    Point,
    Segment,
    point_line_distance,
    polyline_length,
    segment_intersection,
)

__all__ = [
    "Vertex",
    "Component",
    "Crossing",
    "JoinRecord",
    "Diagram",
    "FoldLine",
    "Geometry",
    "ValidationIssue",
    "ValidationReport",
    "build_ribbon_geometry",
    "validate",
    "ribbonlength",
    "measure_subpath",
    "export_geometry",
    "parse_geometry",
    "export_svg",
]

EdgeRef = Tuple[int, int]  # (component index, edge index)


@dataclass
class Vertex:
    point: Point
    fold: Optional[str] = None  # "over" | "under" | None


@dataclass
class Component:
    vertices: List[Vertex] = field(default_factory=list)
    closed: bool = False

    def points(self) -> List[Point]:
        pts = [v.point for v in self.vertices]
        if self.closed and pts:
            pts.append(pts[0])
        return pts

    def edge_count(self) -> int:
        n = len(self.vertices)
        return n if self.closed else max(n - 1, 0)

    def edge(self, i: int) -> Segment:
        n = len(self.vertices)
        return Segment(self.vertices[i % n].point, self.vertices[(i + 1) % n].point)


@dataclass
class Crossing:
    edge1: EdgeRef
    edge2: EdgeRef
    over_first: bool  # True if edge1 passes over edge2
    point: Point
    kind: str = "twist"  # "twist" | "incidental"


@dataclass
class JoinRecord:
    """Recorded arc length contributed by one join, symbolic in the spacing d."""

    name: str
    parts: List[Tuple[str, SymbolicLength]] = field(default_factory=list)

    def total(self) -> SymbolicLength:
        t = SymbolicLength(ZERO, ZERO)
        for _, p in self.parts:
            t = t + p
        return t


@dataclass
class Diagram:
    components: List[Component] = field(default_factory=list)
    crossings: List[Crossing] = field(default_factory=list)
    landmarks: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    width: Scalar = ONE
    joins: List[JoinRecord] = field(default_factory=list)

    # -- building helpers --------------------------------------------------
    def new_component(self, closed: bool = False) -> int:
        self.components.append(Component(closed=closed))
        return len(self.components) - 1

    def add_vertex(self, comp: int, point: Point, fold: Optional[str] = None) -> int:
        self.components[comp].vertices.append(Vertex(point, fold))
        return len(self.components[comp].vertices) - 1

    def set_landmark(self, name: str, comp: int, index: int) -> None:
        self.landmarks[name] = (comp, index)

    def landmark_point(self, name: str) -> Point:
        c, i = self.landmarks[name]
        return self.components[c].vertices[i].point


@dataclass(frozen=True)
class FoldLine:
    segment: Segment
    component: int
    vertex: int
    angle: str


@dataclass
class Geometry:
    fold_lines: List[FoldLine]
    boundaries: List[List[List[Point]]]  # per component: [left offset, right offset]


# ---------------------------------------------------------------------------
# Geometry realization
# ---------------------------------------------------------------------------


def _exact_unit(v: Point) -> Point:
    ln = scalar_sqrt(v.norm_sq())
    if isinstance(ln, Approx):
        raise ExactnumError("edge length outside the exact field")
    return v.scale(ln.inverse())


def _fold_segment(prev: Point, v: Point, nxt: Point, w: Scalar) -> Optional[Segment]:
    """Fold line at a vertex: perpendicular to the angle bisector of the two
    edge rays, centered at the vertex, spanning the full ribbon width.

    Its half-length is (w/2)/cos(theta/2); returns None for a straight
    pass-through (theta = pi).
    """
    uh = _exact_unit(prev - v)
    xh = _exact_unit(nxt - v)
    one_plus_cos = ONE + uh.dot(xh)
    if one_plus_cos.is_zero():
        return None
    bis = uh + xh
    off = Point(-bis.y, bis.x).scale((w * Fraction(1, 2)) / one_plus_cos)
    return Segment(v - off, v + off)


def _vertex_angles(comp: Component):
    """Yield (vertex index, prev point, point, next point) for fold-capable
    vertices: interior vertices of open components, all vertices of closed."""
    n = len(comp.vertices)
    if n < 3 and not comp.closed:
        return
    rng = range(n) if comp.closed else range(1, n - 1)
    for i in rng:
        p = comp.vertices[(i - 1) % n].point
        v = comp.vertices[i].point
        q = comp.vertices[(i + 1) % n].point
        yield i, p, v, q


def build_ribbon_geometry(diagram: Diagram) -> Geometry:
    """Compute the fold lines and the two offset boundary polylines for each
    component of a diagram of ribbon width w."""
    w = diagram.width
    fold_lines: List[FoldLine] = []
    boundaries: List[List[List[Point]]] = []
    from .geometry import angle_at_vertex

    for ci, comp in enumerate(diagram.components):
        for i, p, v, q in _vertex_angles(comp):
            ang = angle_at_vertex(p, v, q)
            if ang == "pi":
                continue
            seg = _fold_segment(p, v, q, w)
            if seg is not None:
                fold_lines.append(FoldLine(seg, ci, i, ang))
        boundaries.append(_offset_boundaries(comp, w))
    return Geometry(fold_lines, boundaries)


def _offset_boundaries(comp: Component, w: Scalar) -> List[List[Point]]:
    pts = [v.point for v in comp.vertices]
    n = len(pts)
    if n < 2:
        return [[], []]
    half = w * Fraction(1, 2)
    edge_idx = list(range(n)) if comp.closed else list(range(n - 1))
    normals = []
    for i in edge_idx:
        d = _exact_unit(pts[(i + 1) % n] - pts[i])
        normals.append(Point(-d.y, d.x))
    sides: List[List[Point]] = []
    for sgn in (1, -1):
        out: List[Point] = []
        if not comp.closed:
            out.append(pts[0] + normals[0].scale(half * sgn))
        vr = range(n) if comp.closed else range(1, n - 1)
        for i in vr:
            n_in = normals[(i - 1) % len(normals)]
            n_out = normals[i % len(normals)]
            denom = ONE + n_in.dot(n_out)
            if denom.is_zero():
                # Hairpin: a miter would be unbounded; bevel with two points.
                out.append(pts[i] + n_in.scale(half * sgn))
                out.append(pts[i] + n_out.scale(half * sgn))
            else:
                m = (n_in + n_out).scale((half * sgn) / denom)
                out.append(pts[i] + m)
        if not comp.closed:
            out.append(pts[n - 1] + normals[-1].scale(half * sgn))
        else:
            out.append(out[0])
        sides.append(out)
    return sides


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ValidationIssue:
    kind: str
    message: str


@dataclass
class ValidationReport:
    errors: List[ValidationIssue] = field(default_factory=list)
    warnings: List[ValidationIssue] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.errors


def _line_key(seg: Segment):
    """Canonical key for the supporting line of a segment."""
    d = seg.direction()
    a, b = d.y, -d.x  # normal (a, b); line: a x + b y = c
    c = a * seg.p.x + b * seg.p.y
    if not a.is_zero():
        return ("x", b / a, c / a)
    return ("y", ZERO, c / b)


def _dir_key(seg: Segment):
    d = seg.direction()
    if not d.x.is_zero():
        return ("s", d.y / d.x)
    return ("v", ZERO)


def _bbox(seg: Segment):
    x1, y1 = seg.p.to_floats()
    x2, y2 = seg.q.to_floats()
    return (min(x1, x2), min(y1, y2), max(x1, x2), max(y1, y2))


def _sweep_pairs(segs: List[Segment], pad: float = 1e-9):
    """Yield index pairs whose float bounding boxes overlap."""
    boxes = [_bbox(s) for s in segs]
    order = sorted(range(len(segs)), key=lambda i: boxes[i][0])
    active: List[int] = []
    for i in order:
        xmin = boxes[i][0]
        active = [j for j in active if boxes[j][2] + pad >= xmin]
        for j in active:
            if boxes[i][1] <= boxes[j][3] + pad and boxes[j][1] <= boxes[i][3] + pad:
                yield (j, i)
        active.append(i)


def _point_on_edge(pt: Point, seg: Segment) -> bool:
    d = seg.direction()
    r = pt - seg.p
    if not d.cross(r).is_zero():
        return False
    t = r.dot(d)
    return ZERO <= t <= d.norm_sq()


def validate(diagram: Diagram, geometry: Optional[Geometry] = None, mode: str = "default") -> ValidationReport:
    """Check a diagram and its realized geometry for physical consistency.

    Errors: fold lines crossing transversally, transversal edge crossings
    not declared (or declared but absent / missing an over-under choice),
    and fold vertices without folding information.  Warnings (typed):
    "collinear-stack" for fold lines sharing a supporting line with
    overlapping spans, "endpoint-touch" for fold lines or non-adjacent edges
    meeting at a point of tangency, "edge-retrace" for collinear overlapping
    edges.  In strict mode every fold-line contact is an error.
    """
    from .geometry import angle_at_vertex

    if geometry is None:
        geometry = build_ribbon_geometry(diagram)
    report = ValidationReport()
    strict = mode == "strict"

    # Folding information on every fold vertex; none on pass-through vertices.
    for ci, comp in enumerate(diagram.components):
        for i, p, v, q in _vertex_angles(comp):
            ang = angle_at_vertex(p, v, q)
            fold = comp.vertices[i].fold
            if ang == "pi":
                if fold is not None:
                    report.errors.append(
                        ValidationIssue("fold-info", f"component {ci} vertex {i}: folding info on a straight vertex")
                    )
            elif fold not in ("over", "under"):
                report.errors.append(
                    ValidationIssue("fold-info", f"component {ci} vertex {i}: fold vertex without folding info")
                )

    # Fold line vs fold line.
    _check_fold_lines(geometry.fold_lines, strict, report)

    # Edge vs edge crossings.
    _check_edges(diagram, report)

    return report


def _check_fold_lines(fold_lines: List[FoldLine], strict: bool, report: ValidationReport) -> None:
    by_line: Dict[object, List[int]] = {}
    for idx, fl in enumerate(fold_lines):
        by_line.setdefault(_line_key(fl.segment), []).append(idx)

    def describe(i: int) -> str:
        fl = fold_lines[i]
        return f"fold line at component {fl.component} vertex {fl.vertex}"

    # Same supporting line: interval sweep for overlaps and touches.
    for _, idxs in by_line.items():
        if len(idxs) < 2:
            continue
        ref = fold_lines[idxs[0]].segment
        axis = ref.direction()
        items = []
        for i in idxs:
            s = fold_lines[i].segment
            t0 = (s.p - ref.p).dot(axis)
            t1 = (s.q - ref.p).dot(axis)
            lo, hi = (t0, t1) if t0 <= t1 else (t1, t0)
            items.append((lo, hi, i))
        items.sort(key=lambda it: (it[0].to_float(), it[1].to_float()))
        for k in range(len(items)):
            lo_k, hi_k, i = items[k]
            for m in range(k + 1, len(items)):
                lo_m, hi_m, j = items[m]
                if lo_m > hi_k:
                    break
                kind = "endpoint-touch" if lo_m == hi_k else "collinear-stack"
                issue = ValidationIssue(kind, f"{describe(i)} and {describe(j)} share a supporting line")
                (report.errors if strict else report.warnings).append(issue)

    # Different supporting lines: parallel ones cannot meet; check the rest.
    by_dir: Dict[object, List[int]] = {}
    for idx, fl in enumerate(fold_lines):
        by_dir.setdefault(_dir_key(fl.segment), []).append(idx)
    dir_groups = list(by_dir.values())
    for gi in range(len(dir_groups)):
        for gj in range(gi + 1, len(dir_groups)):
            small, large = dir_groups[gi], dir_groups[gj]
            if len(small) > len(large):
                small, large = large, small
            large_boxes = [(_bbox(fold_lines[j].segment), j) for j in large]
            for i in small:
                bi = _bbox(fold_lines[i].segment)
                for bj, j in large_boxes:
                    if bi[2] < bj[0] - 1e-9 or bj[2] < bi[0] - 1e-9:
                        continue
                    if bi[3] < bj[1] - 1e-9 or bj[3] < bi[1] - 1e-9:
                        continue
                    res = segment_intersection(fold_lines[i].segment, fold_lines[j].segment)
                    if res.kind == "proper-point":
                        report.errors.append(
                            ValidationIssue("fold-cross", f"{describe(i)} crosses {describe(j)}")
                        )
                    elif res.kind == "endpoint-touch":
                        issue = ValidationIssue("endpoint-touch", f"{describe(i)} touches {describe(j)}")
                        (report.errors if strict else report.warnings).append(issue)


def _check_edges(diagram: Diagram, report: ValidationReport) -> None:
    edges: List[Tuple[EdgeRef, Segment]] = []
    for ci, comp in enumerate(diagram.components):
        for ei in range(comp.edge_count()):
            edges.append(((ci, ei), comp.edge(ei)))

    declared: Dict[frozenset, Crossing] = {}
    for cr in diagram.crossings:
        declared[frozenset((cr.edge1, cr.edge2))] = cr
    seen: set = set()

    segs = [s for _, s in edges]
    for i, j in _sweep_pairs(segs):
        (c1, e1), s1 = edges[i]
        (c2, e2), s2 = edges[j]
        if c1 == c2:
            n = diagram.components[c1].edge_count()
            gap = abs(e1 - e2)
            if gap == 1 or (diagram.components[c1].closed and gap == n - 1):
                continue  # adjacent edges share a vertex
        res = segment_intersection(s1, s2)
        if res.kind == "none":
            continue
        if res.kind == "collinear-overlap":
            report.warnings.append(
                ValidationIssue("edge-retrace", f"edges {c1}:{e1} and {c2}:{e2} overlap along a line")
            )
            continue
        if res.kind == "endpoint-touch":
            report.warnings.append(
                ValidationIssue("endpoint-touch", f"edges {c1}:{e1} and {c2}:{e2} touch at an endpoint")
            )
            continue
        key = frozenset(((c1, e1), (c2, e2)))
        cr = declared.get(key)
        if cr is None:
            report.errors.append(
                ValidationIssue("undeclared-crossing", f"edges {c1}:{e1} and {c2}:{e2} cross without a declaration")
            )
        else:
            seen.add(key)
            if cr.point != res.point:
                report.errors.append(
                    ValidationIssue("crossing-location", f"declared crossing {c1}:{e1}/{c2}:{e2} is not at the intersection point")
                )

    for key, cr in declared.items():
        if key not in seen:
            report.errors.append(
                ValidationIssue(
                    "missing-crossing",
                    f"declared crossing {cr.edge1[0]}:{cr.edge1[1]}/{cr.edge2[0]}:{cr.edge2[1]} does not occur",
                )
            )


# ---------------------------------------------------------------------------
# Measurement
# ---------------------------------------------------------------------------


def ribbonlength(diagram: Diagram):
    """Total centerline length divided by the ribbon width."""
    total: Union[Scalar, Approx] = ZERO
    approx = 0.0
    inexact = False
    for comp in diagram.components:
        ln = polyline_length(comp.points())
        if isinstance(ln, Approx):
            inexact = True
            approx += ln.value
        else:
            total = total + ln
    if inexact:
        return Approx((total.to_float() + approx) / diagram.width.to_float())
    return total / diagram.width


def measure_subpath(diagram: Diagram, start: str, end: str):
    """Arc length along a component between two landmark vertices."""
    if start not in diagram.landmarks or end not in diagram.landmarks:
        raise ExactnumError("unknown landmark")
    c1, i1 = diagram.landmarks[start]
    c2, i2 = diagram.landmarks[end]
    if c1 != c2:
        raise ExactnumError("landmarks on different components")
    lo, hi = (i1, i2) if i1 <= i2 else (i2, i1)
    pts = [v.point for v in diagram.components[c1].vertices[lo : hi + 1]]
    return polyline_length(pts)


# ---------------------------------------------------------------------------
# Text geometry format
# ---------------------------------------------------------------------------

_FORMAT_HEADER = "ribbon-geometry v1"


def export_geometry(diagram: Diagram) -> str:
    """Serialize a diagram in the plain-text ribbon-geometry v1 format."""
    lines = [_FORMAT_HEADER, "[width]", diagram.width.text()]
    for ci, comp in enumerate(diagram.components):
        lines.append(f"[component {ci}]")
        lines.append(f"closed={1 if comp.closed else 0}")
        for v in comp.vertices:
            fold = v.fold if v.fold else "none"
            lines.append(f"v {v.point.x.text()} {v.point.y.text()} fold={fold}")
    lines.append("[crossings]")
    for cr in diagram.crossings:
        lines.append(
            "x {}:{} {}:{} over={} at {} {} kind={}".format(
                cr.edge1[0],
                cr.edge1[1],
                cr.edge2[0],
                cr.edge2[1],
                1 if cr.over_first else 0,
                cr.point.x.text(),
                cr.point.y.text(),
                cr.kind,
            )
        )
    lines.append("[landmarks]")
    for name in sorted(diagram.landmarks):
        c, i = diagram.landmarks[name]
        lines.append(f"{name} {c}:{i}")
    if diagram.joins:
        lines.append("[joins]")
        for jr in diagram.joins:
            for label, sym in jr.parts:
                lines.append(
                    f"j {jr.name} {label} {sym.constant.text()} {sym.d_coeff.text()}"
                )
    return "\n".join(lines) + "\n"


def parse_geometry(text: str) -> Diagram:
    """Parse the ribbon-geometry v1 format back into a diagram."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != _FORMAT_HEADER:
        raise ExactnumError("not a ribbon-geometry v1 document")
    diagram = Diagram(width=ONE)
    section = None
    comp: Optional[Component] = None
    joins: Dict[str, JoinRecord] = {}
    for ln in lines[1:]:
        if ln.startswith("["):
            tag = ln.strip("[]")
            if tag == "width":
                section = "width"
            elif tag.startswith("component"):
                section = "component"
                comp = Component()
                diagram.components.append(comp)
            elif tag in ("crossings", "landmarks", "joins"):
                section = tag
            else:
                raise ExactnumError(f"unknown section {tag!r}")
            continue
        if section == "width":
            diagram.width = parse_scalar(ln)
        elif section == "component":
            if ln.startswith("closed="):
                comp.closed = ln.split("=", 1)[1] == "1"
            elif ln.startswith("v "):
                _, sx, sy, foldtok = ln.split()
                fold = foldtok.split("=", 1)[1]
                comp.vertices.append(
                    Vertex(Point(parse_scalar(sx), parse_scalar(sy)), None if fold == "none" else fold)
                )
            else:
                raise ExactnumError(f"bad component line {ln!r}")
        elif section == "crossings":
            toks = ln.split()
            if toks[0] != "x" or toks[4] != "at":
                raise ExactnumError(f"bad crossing line {ln!r}")
            e1 = tuple(int(t) for t in toks[1].split(":"))
            e2 = tuple(int(t) for t in toks[2].split(":"))
            over = toks[3].split("=", 1)[1] == "1"
            pt = Point(parse_scalar(toks[5]), parse_scalar(toks[6]))
            kind = "twist"
            if len(toks) > 7 and toks[7].startswith("kind="):
                kind = toks[7].split("=", 1)[1]
            diagram.crossings.append(Crossing(e1, e2, over, pt, kind))
        elif section == "landmarks":
            name, ref = ln.split()
            c, i = ref.split(":")
            diagram.landmarks[name] = (int(c), int(i))
        elif section == "joins":
            toks = ln.split()
            if toks[0] != "j":
                raise ExactnumError(f"bad join line {ln!r}")
            jr = joins.setdefault(toks[1], JoinRecord(toks[1]))
            jr.parts.append((toks[2], SymbolicLength(parse_scalar(toks[3]), parse_scalar(toks[4]))))
        else:
            raise ExactnumError(f"content outside a section: {ln!r}")
    diagram.joins = list(joins.values())
    return diagram


# ---------------------------------------------------------------------------
# SVG export
# ---------------------------------------------------------------------------

_SVG_SCALE = 100.0  # drawing units per ribbon-width unit
_GAP_FRACTION = 0.15  # under-strand gap half-length, in width units


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def export_svg(diagram: Diagram, geometry: Optional[Geometry] = None) -> str:
    """Render a diagram as an SVG 1.1 document.

    Layers (SVG groups): "boundary" (ribbon edges), "diagram" (centerline,
    with gaps on the under strand at each crossing), "fold-lines", and
    "landmarks".  The y axis is flipped so the drawing matches the
    mathematical orientation.
    """
    if geometry is None:
        geometry = build_ribbon_geometry(diagram)
    w = diagram.width.to_float()
    scale = _SVG_SCALE / w if w else _SVG_SCALE

    def xy(p: Point) -> Tuple[float, float]:
        fx, fy = p.to_floats()
        return (fx * scale, -fy * scale)

    all_pts: List[Tuple[float, float]] = []
    for comp in diagram.components:
        all_pts.extend(xy(v.point) for v in comp.vertices)
    for fl in geometry.fold_lines:
        all_pts.append(xy(fl.segment.p))
        all_pts.append(xy(fl.segment.q))
    if not all_pts:
        all_pts = [(0.0, 0.0)]
    margin = _SVG_SCALE
    xs = [p[0] for p in all_pts]
    ys = [p[1] for p in all_pts]
    x0, y0 = min(xs) - margin, min(ys) - margin
    bw, bh = max(xs) - min(xs) + 2 * margin, max(ys) - min(ys) + 2 * margin

    # Gap intervals per edge for under strands at crossings.
    gaps: Dict[EdgeRef, List[Tuple[float, float]]] = {}
    for cr in diagram.crossings:
        under = cr.edge2 if cr.over_first else cr.edge1
        comp = diagram.components[under[0]]
        seg = comp.edge(under[1])
        p1, p2 = seg.p.to_floats(), seg.q.to_floats()
        px, py = cr.point.to_floats()
        dx, dy = p2[0] - p1[0], p2[1] - p1[1]
        elen = (dx * dx + dy * dy) ** 0.5
        if elen == 0:
            continue
        t = ((px - p1[0]) * dx + (py - p1[1]) * dy) / (elen * elen)
        dt = _GAP_FRACTION * w / elen
        gaps.setdefault(under, []).append((max(0.0, t - dt), min(1.0, t + dt)))

    def polyline_paths(ci: int, comp: Component) -> List[List[Tuple[float, float]]]:
        paths: List[List[Tuple[float, float]]] = []
        current: List[Tuple[float, float]] = []
        for ei in range(comp.edge_count()):
            seg = comp.edge(ei)
            a, b = xy(seg.p), xy(seg.q)
            if not current:
                current = [a]
            ivals = sorted(gaps.get((ci, ei), []))
            pos = 0.0
            for lo, hi in ivals:
                if lo > pos:
                    current.append((a[0] + (b[0] - a[0]) * lo, a[1] + (b[1] - a[1]) * lo))
                paths.append(current)
                current = []
                pos = hi
                if pos < 1.0:
                    current = [(a[0] + (b[0] - a[0]) * pos, a[1] + (b[1] - a[1]) * pos)]
            if current:
                current.append(b)
        if current:
            paths.append(current)
        return paths

    def path_d(pts: List[Tuple[float, float]]) -> str:
        return "M " + " L ".join(f"{_fmt(px)} {_fmt(py)}" for px, py in pts)

    out: List[str] = []
    out.append(
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(bw)} {_fmt(bh)}">'
    )
    out.append('<g id="boundary" fill="none" stroke="#bbbbbb" stroke-width="1">')
    for sides in geometry.boundaries:
        for side in sides:
            if len(side) >= 2:
                out.append(f'<path d="{path_d([xy(p) for p in side])}"/>')
    out.append("</g>")
    out.append('<g id="diagram" fill="none" stroke="#000000" stroke-width="3">')
    for ci, comp in enumerate(diagram.components):
        for pts in polyline_paths(ci, comp):
            if len(pts) >= 2:
                out.append(f'<path d="{path_d(pts)}"/>')
    out.append("</g>")
    out.append('<g id="fold-lines" stroke="#cc3333" stroke-width="1.5" stroke-dasharray="6 4">')
    for fl in geometry.fold_lines:
        (ax, ay), (bx, by) = xy(fl.segment.p), xy(fl.segment.q)
        out.append(f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}"/>')
    out.append("</g>")
    out.append('<g id="landmarks" fill="#2255cc" font-size="14">')
    for name in sorted(diagram.landmarks):
        p = diagram.landmark_point(name)
        px, py = xy(p)
        out.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="3"/>')
        out.append(f'<text x="{_fmt(px + 5)}" y="{_fmt(py - 5)}">{name}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
