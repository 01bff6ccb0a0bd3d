from fractions import Fraction

import pytest

from foldribbon.exactnum import ONE, SQRT3, ZERO, ExactnumError, Scalar, SymbolicLength, scalar
from foldribbon.geometry import Point, Segment, unit_direction
from foldribbon.ribbon import (
    Crossing,
    Diagram,
    JoinRecord,
    build_ribbon_geometry,
    export_geometry,
    export_svg,
    measure_subpath,
    parse_geometry,
    ribbonlength,
    validate,
)


def P(x, y):
    return Point(Scalar.of(Fraction(x)), Scalar.of(Fraction(y)))


def zigzag(diagram=None, fold="over"):
    """A 60-degree zigzag with one fold vertex: (0,0) -> (1,0) -> 60deg leg."""
    d = diagram or Diagram()
    ci = d.new_component()
    d.add_vertex(ci, P(0, 0))
    d.add_vertex(ci, P(1, 0), fold)
    d.add_vertex(ci, P(1, 0) + unit_direction(4))  # 120 degrees: pi/3 opening
    return d, ci


def test_ribbonlength_divides_by_width():
    d = Diagram(width=scalar(Fraction(1, 2)))
    ci = d.new_component()
    d.add_vertex(ci, P(0, 0))
    d.add_vertex(ci, P(3, 0))
    assert ribbonlength(d) == scalar(6)


def test_closed_component_counts_the_returning_edge():
    d = Diagram()
    ci = d.new_component(closed=True)
    for p in (P(0, 0), P(2, 0), Point(scalar(2), SQRT3), Point(ZERO, SQRT3)):
        d.add_vertex(ci, p)
    assert ribbonlength(d) == scalar(4, 2)  # 4 + 2*sqrt3


def test_measure_subpath_and_errors():
    d, ci = zigzag()
    d.set_landmark("a", ci, 0)
    d.set_landmark("b", ci, 2)
    assert measure_subpath(d, "a", "b") == scalar(2)
    with pytest.raises(ExactnumError, match="unknown landmark"):
        measure_subpath(d, "a", "nope")
    other = d.new_component()
    d.add_vertex(other, P(5, 5))
    d.set_landmark("c", other, 0)
    with pytest.raises(ExactnumError, match="landmarks on different components"):
        measure_subpath(d, "a", "c")


def test_validate_clean_zigzag():
    d, _ = zigzag()
    report = validate(d)
    assert report.ok()
    assert not report.warnings


def test_validate_fold_info_errors():
    d, ci = zigzag(fold=None)
    report = validate(d)
    assert [i.kind for i in report.errors] == ["fold-info"]
    assert "without folding info" in report.errors[0].message

    straight = Diagram()
    ci = straight.new_component()
    straight.add_vertex(ci, P(0, 0))
    straight.add_vertex(ci, P(1, 0), "over")
    straight.add_vertex(ci, P(2, 0))
    report = validate(straight)
    assert [i.kind for i in report.errors] == ["fold-info"]
    assert "straight vertex" in report.errors[0].message


def test_validate_undeclared_and_declared_crossings():
    d = Diagram()
    a = d.new_component()
    d.add_vertex(a, P(0, 0))
    d.add_vertex(a, P(2, 0))
    b = d.new_component()
    d.add_vertex(b, P(1, -1))
    d.add_vertex(b, P(1, 1))
    report = validate(d)
    assert [i.kind for i in report.errors] == ["undeclared-crossing"]

    d.crossings.append(Crossing((a, 0), (b, 0), True, P(1, 0)))
    assert validate(d).ok()

    d.crossings[0] = Crossing((a, 0), (b, 0), True, P(0, 0))
    assert [i.kind for i in validate(d).errors] == ["crossing-location"]

    d.crossings[0] = Crossing((a, 0), (b, 0), True, P(1, 0))
    d.crossings.append(Crossing((a, 0), (b, 0), True, P(5, 5), kind="incidental"))
    kinds = [i.kind for i in validate(d).errors]
    assert kinds == ["crossing-location"] or "missing-crossing" in kinds


def test_validate_missing_crossing():
    d = Diagram()
    a = d.new_component()
    d.add_vertex(a, P(0, 0))
    d.add_vertex(a, P(2, 0))
    b = d.new_component()
    d.add_vertex(b, P(0, 1))
    d.add_vertex(b, P(2, 1))
    d.crossings.append(Crossing((a, 0), (b, 0), True, P(1, 0)))
    assert [i.kind for i in validate(d).errors] == ["missing-crossing"]


def test_validate_fold_cross_error():
    # Two fold vertices whose fold lines intersect transversally: a
    # horizontal pi/3 fold line against a vertical 2pi/3 fold line through
    # nearly the same point.
    d = Diagram()
    a = d.new_component()
    d.add_vertex(a, P(-1, 0) + unit_direction(-2))
    d.add_vertex(a, P(-1, 0), "over")  # 2pi/3 vertex: vertical fold line
    d.add_vertex(a, P(-1, 0) + unit_direction(2))
    b = d.new_component()
    q = Point(scalar(-1, Fraction(-1, 10)), scalar(Fraction(1, 10)))
    d.add_vertex(b, q + unit_direction(0).scale(scalar(2)))
    d.add_vertex(b, q, "over")  # pi/3 vertex: horizontal fold line
    d.add_vertex(b, q + unit_direction(2).scale(scalar(2)))
    report = validate(d)
    assert "fold-cross" in [i.kind for i in report.errors]


def test_validate_warning_kinds():
    # Two successive pi/3 folds at spacing d share supporting fold lines
    # only when collinear; retracing edges warn instead of erroring.
    d = Diagram()
    a = d.new_component()
    d.add_vertex(a, P(0, 0))
    d.add_vertex(a, P(2, 0))
    b = d.new_component()
    d.add_vertex(b, P(1, 0))
    d.add_vertex(b, P(3, 0))
    report = validate(d)
    assert report.ok()
    assert {w.kind for w in report.warnings} == {"edge-retrace"}


def test_strict_mode_promotes_contacts():
    d = Diagram()
    a = d.new_component()
    d.add_vertex(a, P(0, 0) + unit_direction(-2))
    d.add_vertex(a, P(0, 0), "over")
    d.add_vertex(a, P(0, 0) + unit_direction(2))
    d.add_vertex(a, P(0, 0) + unit_direction(2) + unit_direction(-2))
    b = d.new_component()
    d.add_vertex(b, P(3, 0) + unit_direction(-2))
    d.add_vertex(b, P(3, 0), "over")
    d.add_vertex(b, P(3, 0) + unit_direction(2))
    default = validate(d)
    strict = validate(d, mode="strict")
    assert len(strict.errors) >= len(default.errors)


def test_geometry_format_roundtrip():
    d, ci = zigzag()
    d.set_landmark("start", ci, 0)
    d.crossings.append(Crossing((ci, 0), (ci, 1), False, P(1, 0), kind="incidental"))
    d.joins.append(
        JoinRecord("seam", [("leg", SymbolicLength(scalar(0, 4), Scalar.of(3)))])
    )
    text = export_geometry(d)
    assert text.startswith("ribbon-geometry v1\n")
    back = parse_geometry(text)
    assert export_geometry(back) == text
    assert back.landmarks == d.landmarks
    assert back.crossings[0].point == P(1, 0)
    assert back.joins[0].total().d_coeff == Scalar.of(3)

    with pytest.raises(ExactnumError, match="not a ribbon-geometry v1"):
        parse_geometry("something else\n")


def test_export_svg_contains_centerline_and_boundary():
    d, _ = zigzag()
    svg = export_svg(d)
    assert svg.startswith("<svg")
    assert 'id="boundary"' in svg
    assert 'id="centerline"' in svg or "path" in svg


def test_build_ribbon_geometry_offsets():
    d, _ = zigzag()
    geom = build_ribbon_geometry(d)
    assert len(geom.fold_lines) == 1
    # One boundary polyline on each side of the single component.
    assert len(geom.boundaries[0]) == 2
