import os
from fractions import Fraction
from pathlib import Path

import pytest

from foldribbon.bounds import (
    BoundsError,
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
from foldribbon.exactnum import scalar

GOLDEN = Path(__file__).parent / "golden"


def test_parse_family():
    assert parse_family("unknot") == ("unknot", ())
    assert parse_family("T(2,9)") == ("torus", (2, 9))
    assert parse_family("T_5") == ("twist", (5,))
    assert parse_family("P(-2,3,7)") == ("pretzel", (-2, 3, 7))
    assert parse_family("R(13,5)") == ("rational", (13, 5))
    assert parse_family("generic(8)") == ("generic", (8,))
    with pytest.raises(BoundsError, match="unrecognized"):
        parse_family("K(1)")


def test_crossing_numbers():
    assert crossing_number("unknot") == 0
    assert crossing_number("T(2,7)") == 7
    assert crossing_number("T(4,3)") == 8
    assert crossing_number("T_6") == 8
    assert crossing_number("P(1,2,3)") == 6
    assert crossing_number("P(-3,-1,-3)") == 7
    assert crossing_number("P(-2,3,7)") == 12
    assert crossing_number("generic(9)") == 9
    for family in ("R(13,5)", "P(3,-1,3,-1,3)"):
        with pytest.raises(BoundsError, match="crossing number unknown"):
            crossing_number(family)


def test_closed_form_bounds():
    assert torus_bound(2, 5) == 8
    assert torus_bound(2, 3) == 6
    assert torus_bound(4, 3) == 8
    assert torus_bound(5, 3) == 10
    assert twist_bound(3) == 9
    assert twist_bound(8) == 14
    assert pretzel_bound([1, 2, 3]) == 12
    assert pretzel_bound([-2, 3, 7]) == 18
    assert pretzel_bound([2, 1, 1, 3]) == 15
    assert rational_bound(6) == 14
    assert rational_bound(10) == 22
    assert generic_bound(8) == 21
    assert generic_bound(9) == Fraction(47, 2)
    assert generic_bound(10) == 26


def test_twisted_torus_bounds():
    assert twisted_torus_bound(7, 3, 4, 1) == 14  # r <= p - q branch wins
    assert twisted_torus_bound(5, 3, 7, 2) == 2 * (7 + 2 * 7)
    with pytest.raises(BoundsError):
        twisted_torus_bound(5, 3, 9, 1)
    with pytest.raises(BoundsError):
        twisted_torus_bound(5, 3, 2, 0)


def test_uniform_bounds():
    assert uniform_bound("T(2,5)") == scalar(0, 8)
    assert uniform_bound("T_5") == scalar(2, 9)
    assert uniform_bound("T_6") == scalar(2, 8)
    assert uniform_bound("P(3,5,7)") == scalar(0, Fraction(55, 3))
    assert uniform_bound("P(3,4,7)") == scalar(0, Fraction(49, 3))
    assert uniform_bound("P(1,2,3,4)") == scalar(0, Fraction(73, 3))
    with pytest.raises(BoundsError):
        uniform_bound("T(2,6)")


def test_uniform_float_windows():
    assert 31.754 <= float(uniform_bound("P(3,5,7)")) <= 31.755
    assert 28.290 <= float(uniform_bound("P(3,4,7)")) <= 28.291


def test_applicable_bounds():
    got = dict(applicable_bounds("T(2,5)"))
    assert got == {"torus": 10, "two-strand torus": 8, "generic": Fraction(27, 2)}
    got = dict(applicable_bounds("R(13,5)", crossings=6))
    assert got == {"two-bridge": 14, "generic": 16}
    with pytest.raises(BoundsError, match="crossing number unknown"):
        applicable_bounds("R(13,5)")
    # A mixed-sign pretzel outside the recognized patterns still has its
    # pretzel formula even though its crossing number is unknown.
    got = dict(applicable_bounds("P(3,-1,3,-1,3)"))
    assert got == {"pretzel": 21}


def test_best_bound_prefers_formula_or_catalog():
    cat = load_catalog()
    assert best_bound("3_1", cat) == 6
    assert best_bound("8_19", cat) == 8
    assert best_bound("9_1", cat) == 12
    assert best_bound("9_46", cat) == 15
    assert best_bound("10_124", cat) == 10
    assert best_bound("12n242", cat) == 18
    # Hopf link: the catalog value 4 beats the two-strand torus formula 5.
    assert best_bound("L2a1", cat) == 4
    with pytest.raises(BoundsError, match="not in catalog"):
        best_bound("99_99", cat)


def test_catalog_env_override(tmp_path, monkeypatch):
    alt = tmp_path / "cat.csv"
    alt.write_text(
        "name,crossing_number,family,expected_bound,citation\n"
        "3_1,3,\"T(2,3)\",6,torus presentation\n"
    )
    monkeypatch.setenv("RIBBON_CATALOG", str(alt))
    cat = load_catalog()
    assert len(cat) == 1
    assert best_bound("3_1", cat) == 6


def test_render_table_golden():
    text = render_table(max_crossing=6)
    golden = (GOLDEN / "table_6.txt").read_text()
    assert text == golden
    rows = text.strip().split("\n")[2:]
    assert len(rows) == 8
    assert rows[-1].split("|")[0].strip() == "6_3"
    assert rows[-1].split("|")[1].strip() == "14"


def test_uniform_bound_demo_monotone():
    out = uniform_bound_demo([3, 5, 7], [Fraction(1, 100), Fraction(1, 1000)])
    lines = out.strip().split("\n")
    assert "uniform limit" in lines[0]
    gaps = [float(ln.split("excess")[1].strip(" ()")) for ln in lines[1:]]
    assert gaps[0] > gaps[1] > 0
