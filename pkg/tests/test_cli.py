import json
from pathlib import Path

import pytest

from foldribbon.cli import run

GOLDEN = Path(__file__).parent / "golden"


def test_construct_measure_roundtrip(tmp_path, capsys):
    out = tmp_path / "twist.txt"
    assert run(["construct", "twist", "-k", "3", "-d", "1/100", "-o", str(out)]) == 0
    assert out.read_text().startswith("ribbon-geometry v1\n")

    assert run(["measure", str(out), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["exact"] is not None
    # Whole-diagram ribbonlength includes the anchoring stubs.
    assert data["value"] > 4 * 3**0.5


def test_measure_between_landmarks(tmp_path, capsys):
    out = tmp_path / "twist.txt"
    run(["construct", "twist", "-k", "0", "-d", "1/100", "-o", str(out)])
    assert run(["measure", str(out), "--between", "v_S", "v_E"]) == 0
    text = capsys.readouterr().out
    assert "4/3*sqrt3" in text
    assert "2.309401077" in text


def test_validate_ok_and_failure(tmp_path, capsys):
    out = tmp_path / "p.txt"
    run(["construct", "pretzel", "--params=1,2,1", "-d", "1/100", "-o", str(out)])
    assert run(["validate", str(out), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] is True
    assert set(data["warnings"]) <= {"collinear-stack", "endpoint-touch", "edge-retrace"}

    bad = tmp_path / "bad.txt"
    bad.write_text(
        "ribbon-geometry v1\n[width]\n1+0*sqrt3\n"
        "[component 0]\nclosed=0\n"
        "v 0+0*sqrt3 0+0*sqrt3 fold=none\n"
        "v 2+0*sqrt3 0+0*sqrt3 fold=none\n"
        "[component 1]\nclosed=0\n"
        "v 1+0*sqrt3 -1+0*sqrt3 fold=none\n"
        "v 1+0*sqrt3 1+0*sqrt3 fold=none\n"
        "[crossings]\n[landmarks]\n"
    )
    assert run(["validate", str(bad)]) == 1
    assert "undeclared-crossing" in capsys.readouterr().out


def test_bounds_name_and_family(capsys):
    assert run(["bounds", "8_19"]) == 0
    assert capsys.readouterr().out.strip() == "8_19: 8"
    assert run(["bounds", "--family", "P(-2,3,7)", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["pretzel"] == "18"
    assert run(["bounds", "nope"]) == 1


@pytest.mark.parametrize("table", ["6", "7-8", "9", "10", "other"])
def test_bounds_tables_golden(table, capsys):
    assert run(["bounds", "--table", table]) == 0
    got = capsys.readouterr().out
    assert got == (GOLDEN / f"table_{table}.txt").read_text()


def test_export_svg(tmp_path):
    geo = tmp_path / "t.txt"
    svg = tmp_path / "t.svg"
    run(["construct", "twist", "-k", "1", "-d", "1/100", "-o", str(geo)])
    assert run(["export", str(geo), "-o", str(svg)]) == 0
    assert svg.read_text().startswith("<svg")


def test_usage_errors(tmp_path, capsys):
    assert run(["measure", str(tmp_path / "missing.txt")]) == 2
    with pytest.raises(SystemExit) as exc:
        run(["construct", "twist", "-d", "zero"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_construction_failure_is_exit_1(capsys):
    assert run(["construct", "pretzel", "--params=1,1,1", "-d", "1/50"]) == 1
    assert "invalid spacing" in capsys.readouterr().err
