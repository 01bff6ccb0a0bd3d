"""Flat pretzel assemblies with exactly measured ribbonlength totals.

Each strand of the pretzel is a horizontal band of |p_i| half-twist
crossings between two zig-zag ribbons.  Consecutive bands are stitched
together through side hops: every hop runs out to a reversal post (a 2pi/3
fold with a vertical fold line), folds back, and re-enters the next band.
Because every hop is x-monotone on its way out and back, its arc length is
exactly twice the post distance in each direction, and the total length of
the assembly is independent of the details of the routing.  A reservoir hop
absorbs the remaining length budget so the measured total equals the closed
form exactly:

* three strands, all twist counts of equal parity:   55/sqrt(3) + (6K+4)d
* three strands, exactly one even twist count:       49/sqrt(3) + (6K+5)d
* n strands, any twist counts (upper bound):     (18n+1)/sqrt(3) + (2nK+n+1)d

where K is the largest twist count and d the zig-zag spacing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .accordion import ConstructionError, _fold_label
from .exactnum import ONE, SQRT3, ZERO, Scalar, SymbolicLength, scalar, symlen_eval
from .geometry import Point, Segment, segment_intersection, unit_direction
from .ribbon import Crossing, Diagram, JoinRecord, ribbonlength
from .ribbon import _sweep_pairs

__all__ = [
    "PretzelAssembly",
    "construct_pretzel",
    "construct_pretzel3_same_parity",
    "construct_pretzel3_mixed",
    "construct_pretzel_n",
    "pretzel_length_formula",
    "equalize_strands",
]

Number = Union[Scalar, int, Fraction]
_HALF = Fraction(1, 2)
_V = Fraction(1, 100)  # vertical pitch between consecutive bands
_ADJ = Fraction(1, 1024)  # parity adjuster leg at an even-count departure
_PRE = Fraction(1, 1024)  # parity adjuster leg at an even-count arrival
_TWO_OVER_SQRT3 = scalar(0, Fraction(2, 3))


@dataclass
class PretzelAssembly:
    diagram: Diagram
    params: Tuple[int, ...]
    d: Scalar
    total: Scalar
    formula: SymbolicLength
    exactness: str  # "exact" | "upper-bound"
    crossing_count: int


def pretzel_length_formula(params: Sequence[int], d: Number = None) -> Tuple[SymbolicLength, str]:
    """Closed form for the measured total, symbolic in the spacing d.

    Returns (formula, flag) where flag is "exact" for the three-strand
    parity-matched cases and "upper-bound" for the general n-strand form.
    """
    params = tuple(int(p) for p in params)
    n = len(params)
    if n < 2:
        raise ConstructionError("too few strands")
    ks = [abs(p) for p in params]
    khat = max(ks)
    if n == 3:
        evens = sum(1 for k in ks if k % 2 == 0)
        if evens in (0, 3):
            return SymbolicLength(scalar(0, Fraction(55, 3)), Scalar.of(6 * khat + 4)), "exact"
        if evens == 1:
            return SymbolicLength(scalar(0, Fraction(49, 3)), Scalar.of(6 * khat + 5)), "exact"
    return (
        SymbolicLength(scalar(0, Fraction(18 * n + 1, 3)), Scalar.of(2 * n * khat + n + 1)),
        "upper-bound",
    )


def equalize_strands(params: Sequence[int]) -> List[int]:
    """Even padding counts that bring every twist count up to the maximum.

    All counts must share a parity, so each deficit is an even number of
    extra half twists; otherwise no parity-preserving padding exists.
    """
    ks = [abs(int(p)) for p in params]
    if not ks:
        raise ConstructionError("too few strands")
    khat = max(ks)
    pads = [khat - k for k in ks]
    if any(p % 2 for p in pads):
        raise ConstructionError("parity")
    return pads


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------


def _band_points(i: int, k: int, d: Scalar) -> Tuple[List[Point], List[Point]]:
    y_top = -Scalar.of(_V) * i
    h = d * SQRT3 * _HALF
    x0 = -(d * k) * _HALF
    half_d = d * _HALF
    ab = [Point(x0 + half_d * j, y_top - (h if j % 2 else ZERO)) for j in range(k + 1)]
    cd = [Point(x0 + half_d * j, y_top - (ZERO if j % 2 else h)) for j in range(k + 1)]
    return ab, cd


def _split_legs(src: Point, dst: Point, up_first: bool) -> Tuple[Scalar, Scalar]:
    """Leg lengths for a two-leg path src -> dst within one slope family."""
    dx = dst.x - src.x
    dy = dst.y - src.y
    if dx.sign() < 0:
        dx = -dx
    along = dy * SQRT3 / 3  # dy / sqrt(3)
    first = dx + along if up_first else dx - along
    second = dx - along if up_first else dx + along
    if first.sign() <= 0 or second.sign() <= 0:
        raise ConstructionError("assembly does not fit the target length")
    return first, second


def _hop_right(b: Point, d_pt: Point, x_post: Scalar, k_src: int, k_dst: int) -> List[Point]:
    """Interior vertices of the hop B -> D around the right reversal post."""
    pts: List[Point] = []
    start = b
    if k_src % 2 == 0:
        start = b + unit_direction(-2).scale(Scalar.of(_ADJ))
        pts.append(start)
    target = d_pt
    if k_dst % 2 == 0:
        target = d_pt + unit_direction(2).scale(Scalar.of(_PRE))
    # Post at the midpoint height: halves the sideways drift of the apex and
    # dip folds, keeping both clear of the vertical fold at the post.
    post = Point(x_post, (start.y + target.y) * _HALF)
    p, _q = _split_legs(start, post, up_first=True)
    apex = start + unit_direction(2).scale(p)
    a, _b = _split_legs(post, target, up_first=False)
    dip = post + unit_direction(8).scale(a)
    pts.extend([apex, post, dip])
    if k_dst % 2 == 0:
        pts.append(target)
    return pts


def _hop_left(c: Point, a_pt: Point, x_post: Scalar, k_src: int, k_dst: int) -> List[Point]:
    """Interior vertices of the hop C -> A around the left reversal post."""
    post = Point(-x_post, (c.y + a_pt.y) * _HALF)
    p, _q = _split_legs(c, post, up_first=True)
    apex = c + unit_direction(4).scale(p)
    a, _b = _split_legs(post, a_pt, up_first=False)
    dip = post + unit_direction(-2).scale(a)
    return [apex, post, dip]


def _declare_incidental(diagram: Diagram) -> None:
    """Record every undeclared transversal edge crossing as incidental."""
    edges: List[Tuple[Tuple[int, int], Segment]] = []
    for ci, comp in enumerate(diagram.components):
        for ei in range(comp.edge_count()):
            edges.append(((ci, ei), comp.edge(ei)))
    declared = {frozenset((cr.edge1, cr.edge2)) for cr in diagram.crossings}
    segs = [s for _, s in edges]
    for i, j in _sweep_pairs(segs):
        r1, s1 = edges[i]
        r2, s2 = edges[j]
        if r1[0] == r2[0]:
            ncomp = diagram.components[r1[0]].edge_count()
            gap = abs(r1[1] - r2[1])
            if gap == 1 or (diagram.components[r1[0]].closed and gap == ncomp - 1):
                continue
        res = segment_intersection(s1, s2)
        if res.kind != "proper-point":
            continue
        key = frozenset((r1, r2))
        if key in declared:
            continue
        declared.add(key)
        first, second = (r1, r2) if r1 <= r2 else (r2, r1)
        diagram.crossings.append(Crossing(first, second, True, res.point, kind="incidental"))


def _assemble(params: Sequence[int], d: Number, formula: SymbolicLength, exactness: str) -> PretzelAssembly:
    params = tuple(int(p) for p in params)
    n = len(params)
    if n < 2:
        raise ConstructionError("too few strands")
    d = Scalar.of(d)
    if d.sign() <= 0:
        raise ConstructionError("invalid spacing")
    v = Scalar.of(_V)
    # Bands must stay vertically separated and reversal posts distinct.
    if d * SQRT3 * _HALF + SQRT3 * Fraction(_PRE, 2) >= v:
        raise ConstructionError("invalid spacing")
    ks = [abs(p) for p in params]
    khat = max(ks)

    slack = formula.constant - scalar(0, Fraction(16 * n, 3))
    if slack.sign() <= 0:
        raise ConstructionError("assembly does not fit the target length")
    eps = slack / (16 * n)
    x_r = _TWO_OVER_SQRT3 + eps
    x_l = _TWO_OVER_SQRT3 + eps + d * khat * _HALF
    base = (x_r + x_l) * (4 * n)
    target = symlen_eval(formula, d)
    delta = (target - base) / 4
    if delta.sign() <= 0:
        raise ConstructionError("assembly does not fit the target length")

    bands = [_band_points(i, ks[i], d) for i in range(n)]
    diagram = Diagram(width=ONE)

    ab_loc: Dict[int, Tuple[int, int]] = {}
    cd_loc: Dict[int, Tuple[int, int]] = {}  # position of c_k (band end D)

    visited = set()
    for start_band in range(n):
        if start_band in visited:
            continue
        comp = diagram.new_component(closed=True)
        i = start_band
        while True:
            visited.add(i)
            ab, _cd = bands[i]
            k = ks[i]
            variant = "half-wrap-positive" if params[i] >= 0 else "half-wrap-negative"
            ab_loc[i] = (comp, len(diagram.components[comp].vertices))
            for j, p in enumerate(ab):
                label = _fold_label(variant, j - 1) if 0 < j < k else "over"
                diagram.add_vertex(comp, p, label)
            # hop B_i -> D_{i+1}
            nxt = (i + 1) % n
            d_pt = bands[nxt][1][ks[nxt]]
            post_x = x_r + delta if i == 0 else x_r
            for p in _hop_right(ab[k], d_pt, post_x, k, ks[nxt]):
                diagram.add_vertex(comp, p, "over")
            # band CD_{i+1}, traversed D -> C
            _ab2, cd2 = bands[nxt]
            k2 = ks[nxt]
            variant2 = "half-wrap-positive" if params[nxt] >= 0 else "half-wrap-negative"
            cd_loc[nxt] = (comp, len(diagram.components[comp].vertices))
            for j in range(k2, -1, -1):
                label = _fold_label(variant2, j - 1) if 0 < j < k2 else "over"
                diagram.add_vertex(comp, cd2[j], label)
            # hop C_{i+1} -> A_{i+2}
            nxt2 = (nxt + 1) % n
            a_pt = bands[nxt2][0][0]
            for p in _hop_left(cd2[0], a_pt, x_l, k2, ks[nxt2]):
                diagram.add_vertex(comp, p, "over")
            i = nxt2
            if i == start_band:
                break

    for i in range(n):
        comp, a0 = ab_loc[i]
        ccomp, ck = cd_loc[i]
        k = ks[i]
        diagram.set_landmark(f"A_{i}", comp, a0)
        diagram.set_landmark(f"B_{i}", comp, a0 + k)
        diagram.set_landmark(f"D_{i}", ccomp, ck)
        diagram.set_landmark(f"C_{i}", ccomp, ck + k)

    # Declared twist crossings: band edge j of one ribbon over the other.
    h = d * SQRT3 * Fraction(1, 4)
    quarter_d = d * Fraction(1, 4)
    for i in range(n):
        k = ks[i]
        comp, a0 = ab_loc[i]
        ccomp, ck = cd_loc[i]
        y_top = -v * i
        x0 = -(d * k) * _HALF
        for j in range(1, k + 1):
            ab_edge = (comp, a0 + j - 1)
            cd_edge = (ccomp, ck + k - j)  # CD is laid down from D back to C
            pt = Point(x0 + quarter_d * (2 * j - 1), y_top - h)
            diagram.crossings.append(Crossing(ab_edge, cd_edge, params[i] > 0, pt, kind="twist"))

    _declare_incidental(diagram)

    # Record the length decomposition, symbolic in d.
    eps_sym = _TWO_OVER_SQRT3 + eps
    delta_sym = SymbolicLength(
        (formula.constant - eps_sym * 8 * n) / 4,
        (formula.d_coeff - Scalar.of(2 * n * khat)) / 4,
    )
    for i in range(n):
        parts = [(f"strand-{i}-half-twists", SymbolicLength(ZERO, Scalar.of(2 * ks[i])))]
        diagram.joins.append(JoinRecord(f"band[{i}]", parts))
    for i in range(n):
        out = SymbolicLength(eps_sym * 2, ZERO)
        ret = SymbolicLength(eps_sym * 2, ZERO)
        if i == 0:
            out = out + SymbolicLength(delta_sym.constant * 2, delta_sym.d_coeff * 2)
            ret = ret + SymbolicLength(delta_sym.constant * 2, delta_sym.d_coeff * 2)
        diagram.joins.append(JoinRecord(f"stitch-right[{i}]", [("outbound", out), ("return", ret)]))
        nxt = (i + 1) % n
        out_l = SymbolicLength(eps_sym * 2, Scalar.of(khat - ks[i]))
        ret_l = SymbolicLength(eps_sym * 2, Scalar.of(khat - ks[nxt]))
        diagram.joins.append(JoinRecord(f"stitch-left[{i}]", [("outbound", out_l), ("return", ret_l)]))

    total = ribbonlength(diagram)
    if not isinstance(total, Scalar) or total != target:
        raise ConstructionError("assembly does not measure to the target length")
    return PretzelAssembly(
        diagram=diagram,
        params=params,
        d=d,
        total=total,
        formula=formula,
        exactness=exactness,
        crossing_count=sum(1 for c in diagram.crossings if c.kind == "twist"),
    )


def construct_pretzel3_same_parity(p: int, q: int, r: int, d: Number) -> PretzelAssembly:
    """Three-strand assembly; all twist counts must share a parity."""
    ks = [abs(p) % 2, abs(q) % 2, abs(r) % 2]
    if len(set(ks)) != 1:
        raise ConstructionError("parity")
    formula, flag = pretzel_length_formula((p, q, r))
    return _assemble((p, q, r), d, formula, flag)


def construct_pretzel3_mixed(p: int, q: int, r: int, d: Number) -> PretzelAssembly:
    """Three-strand assembly with exactly one even twist count."""
    evens = sum(1 for x in (p, q, r) if abs(x) % 2 == 0)
    if evens != 1:
        raise ConstructionError("parity")
    formula, flag = pretzel_length_formula((p, q, r))
    return _assemble((p, q, r), d, formula, flag)


def construct_pretzel_n(params: Sequence[int], d: Number) -> PretzelAssembly:
    """General n-strand assembly realizing the n-strand upper bound exactly."""
    params = tuple(int(p) for p in params)
    n = len(params)
    if n < 2:
        raise ConstructionError("too few strands")
    ks = [abs(p) for p in params]
    khat = max(ks)
    formula = SymbolicLength(scalar(0, Fraction(18 * n + 1, 3)), Scalar.of(2 * n * khat + n + 1))
    return _assemble(params, d, formula, "upper-bound")


def construct_pretzel(params: Sequence[int], d: Number) -> PretzelAssembly:
    """Dispatch to the tightest construction available for the parameters."""
    params = tuple(int(p) for p in params)
    if len(params) == 3:
        evens = sum(1 for x in params if abs(x) % 2 == 0)
        if evens in (0, 3):
            return construct_pretzel3_same_parity(*params, d)
        if evens == 1:
            return construct_pretzel3_mixed(*params, d)
    return construct_pretzel_n(params, d)
