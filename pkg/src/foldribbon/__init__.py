"""Exact folded-ribbon knot diagrams on the 30-degree grid.

Constructions (twist regions, escape accordions, pretzel assemblies),
exact length measurement in Q(sqrt 3), physical validation, and a
catalog of ribbonlength bounds for knots through nine crossings.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .exactnum import (
    Approx,
    ExactnumError,
    Scalar,
    SymbolicLength,
    parse_scalar,
    scalar,
    scalar_ceil,
    scalar_floor,
    scalar_sqrt,
    scalar_to_float,
    symlen_eval,
)
from .geometry import (
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
from .ribbon import (
    Component,
    Crossing,
    Diagram,
    JoinRecord,
    ValidationIssue,
    ValidationReport,
    Vertex,
    build_ribbon_geometry,
    export_geometry,
    export_svg,
    measure_subpath,
    parse_geometry,
    ribbonlength,
    validate,
)
from .accordion import (
    AccordionGeometry,
    AccordionSpec,
    ConstructionError,
    escape_valid,
    gen_accordion,
    gen_escape_accordion,
    gen_half_wraps,
    min_folds_for_escape,
    verify_accordion_distances,
)
from .twists import (
    FoldBack,
    TwistAssembly,
    construct_half_twists,
    fold_back_end,
    half_twist_length_formula,
    measure_twist_assembly,
    spacing_for_epsilon,
    zero_fold_join,
)
from .pretzel import (
    PretzelAssembly,
    construct_pretzel,
    construct_pretzel3_mixed,
    construct_pretzel3_same_parity,
    construct_pretzel_n,
    equalize_strands,
    pretzel_length_formula,
)
from .bounds import (
    BoundsError,
    CatalogEntry,
    applicable_bounds,
    best_bound,
    crossing_number,
    generic_bound,
    load_catalog,
    parse_family,
    pretzel_bound,
    rational_bound,
    render_table,
    torus_bound,
    twist_bound,
    twisted_torus_bound,
    uniform_bound,
    uniform_bound_demo,
)

__version__ = "0.1.0"

_ALLOWED_WARNINGS = {"collinear-stack", "endpoint-touch", "edge-retrace"}


def _clean(report: ValidationReport) -> bool:
    return report.ok() and all(
        w.kind in _ALLOWED_WARNINGS for w in report.warnings
    )


def verify_all(
    d: Fraction = Fraction(1, 100), kmax: int = 4, rmax: int = 5
) -> List[Tuple[str, bool, str]]:
    """Self-check the constructions at spacing ``d``.

    Builds every twist assembly with ``|k| <= kmax`` and a spread of
    pretzel assemblies with strand parameters up to ``rmax``, then checks
    exact agreement with the closed-form lengths, validation cleanliness,
    and the integer crossing-number bounds.  Returns
    ``(check name, passed, detail)`` triples.
    """
    ds = Scalar.of(d)
    results: List[Tuple[str, bool, str]] = []

    bad = []
    for k in range(-kmax, kmax + 1):
        t = construct_half_twists(k, d)
        want = symlen_eval(half_twist_length_formula(k), ds)
        if measure_twist_assembly(t) != want:
            bad.append(str(k))
    results.append(
        (
            "twist lengths match closed form",
            not bad,
            "" if not bad else "k in {" + ", ".join(bad) + "}",
        )
    )

    bad = []
    for k in (-kmax, 0, 1, kmax):
        t = construct_half_twists(k, d)
        if not _clean(validate(t.diagram)):
            bad.append(str(k))
    results.append(
        (
            "twist assemblies validate",
            not bad,
            "" if not bad else "k in {" + ", ".join(bad) + "}",
        )
    )

    r = rmax if rmax % 2 == 1 else rmax - 1
    e = rmax if rmax % 2 == 0 else rmax - 1
    cases = [[1, 1, 1], [1, r, r], [r, r, r], [1, 2, 1], [2, r, 2], [2, 3, 4, 5]]
    if e >= 2:
        cases.append([e, e, e])
    bad = []
    for params in cases:
        assembly = construct_pretzel(params, d)
        want = symlen_eval(assembly.formula, ds)
        if ribbonlength(assembly.diagram) != want:
            bad.append(str(params))
    results.append(
        (
            "pretzel lengths match closed form",
            not bad,
            "" if not bad else ", ".join(bad),
        )
    )

    bad = []
    for params in ([1, r, r], [1, 2, 1], [2, 3, 4, 5]):
        assembly = construct_pretzel(params, d)
        if not _clean(validate(assembly.diagram)):
            bad.append(str(params))
    results.append(
        (
            "pretzel assemblies validate",
            not bad,
            "" if not bad else ", ".join(bad),
        )
    )

    bad = []
    for params in cases:
        assembly = construct_pretzel(params, d)
        total = ribbonlength(assembly.diagram)
        limit = symlen_eval(assembly.formula, ds)
        if not total <= limit:
            bad.append(str(params))
    results.append(
        (
            "pretzel lengths stay within the closed-form bound",
            not bad,
            "" if not bad else ", ".join(bad),
        )
    )

    return results
