from fractions import Fraction

import pytest

from foldribbon.accordion import ConstructionError, min_folds_for_escape
from foldribbon.exactnum import INV_SQRT3, ONE, SQRT3, Scalar, scalar, symlen_eval
from foldribbon.geometry import Point, Segment, distance
from foldribbon.ribbon import ribbonlength, validate
from foldribbon.twists import (
    construct_half_twists,
    fold_back_end,
    half_twist_length_formula,
    measure_twist_assembly,
    spacing_for_epsilon,
    zero_fold_join,
)

D100 = Fraction(1, 100)
HALF = Fraction(1, 2)

ALLOWED = {"collinear-stack", "endpoint-touch", "edge-retrace"}


def P(x, y):
    return Point(Scalar.of(Fraction(x)), Scalar.of(Fraction(y)))


@pytest.mark.parametrize("k", [-3, -1, 0, 1, 2, 5])
def test_total_length_closed_form(k):
    t = construct_half_twists(k, D100)
    want = symlen_eval(half_twist_length_formula(k), Scalar.of(D100))
    assert measure_twist_assembly(t) == want
    assert want == scalar(0, 4) + Scalar.of(D100) * (2 * abs(k) - 1)


def test_crossing_records():
    for k in (-4, 3):
        t = construct_half_twists(k, D100)
        twist = [c for c in t.diagram.crossings if c.kind == "twist"]
        assert len(twist) == abs(k)
        assert all(c.over_first == (k > 0) for c in twist)
        # Each twist crossing pairs one AB edge with one CD edge.
        for c in twist:
            assert {c.edge1[0], c.edge2[0]} == {t.ab_component, t.cd_component}


def test_validation_clean():
    for k in (-2, 0, 4):
        t = construct_half_twists(k, D100)
        report = validate(t.diagram)
        assert report.ok()
        assert {w.kind for w in report.warnings} <= ALLOWED


def test_invalid_parameters():
    with pytest.raises(ConstructionError, match="invalid spacing"):
        construct_half_twists(2, 0)
    with pytest.raises(ConstructionError, match="not an escape accordion"):
        construct_half_twists(2, D100, m=1)


def test_spacing_for_epsilon():
    eps = Fraction(1, 1000)
    for k in (0, 1, 5):
        d = spacing_for_epsilon(k, eps)
        excess = d * (2 * abs(k) - 1)
        assert excess <= Scalar.of(eps)
    with pytest.raises(ConstructionError):
        spacing_for_epsilon(1, 0)


def test_fold_back_end_distances():
    p = P(2, 3)
    for side in (1, -1):
        fb = fold_back_end(p, 0, side=side)
        assert distance(p, fb.q) == INV_SQRT3
        assert distance(p, fb.r) == scalar(HALF)
        assert distance(fb.q, fb.r) == INV_SQRT3 * scalar(HALF)
        assert fb.distances["d(P,Q)"] == INV_SQRT3
        assert fb.distances["d(P,R)"] == scalar(HALF)
        assert fb.distances["d(Q,R)"] == INV_SQRT3 * scalar(HALF)


@pytest.mark.parametrize(
    "theta,offset",
    [
        ("pi/3", scalar(0, Fraction(1, 6))),  # 1/(2 sqrt3)
        ("pi/2", scalar(HALF)),
        ("2pi/3", scalar(0, HALF)),  # sqrt3/2
    ],
)
def test_zero_fold_join_offsets(theta, offset):
    end1 = Segment(P(0, 0), P(2, 0))
    end2 = Segment(P(3, 0), P(1, 0))
    fold, got = zero_fold_join(end1, end2, theta)
    assert got == offset
    # The fold line is perpendicular to the strand, through Z at x = 2 - offset.
    assert fold.p.x == fold.q.x == scalar(2) - offset


def test_zero_fold_join_rejects_disjoint_ends():
    end1 = Segment(P(0, 0), P(1, 0))
    end2 = Segment(P(0, 1), P(1, 1))
    with pytest.raises(ConstructionError, match="ends not joinable"):
        zero_fold_join(end1, end2, "pi/3")


def test_explicit_m_and_width():
    m = min_folds_for_escape(D100, 1) + 5
    t = construct_half_twists(1, D100, m=m)
    assert t.m == m
    assert measure_twist_assembly(t) == symlen_eval(
        half_twist_length_formula(1), Scalar.of(D100)
    )
