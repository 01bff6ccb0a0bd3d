from fractions import Fraction

import pytest

from foldribbon.accordion import ConstructionError
from foldribbon.exactnum import Scalar, scalar, symlen_eval
from foldribbon.pretzel import (
    construct_pretzel,
    construct_pretzel3_mixed,
    construct_pretzel3_same_parity,
    construct_pretzel_n,
    equalize_strands,
    pretzel_length_formula,
)
from foldribbon.ribbon import ribbonlength, validate

D100 = Fraction(1, 100)
ALLOWED = {"collinear-stack", "endpoint-touch", "edge-retrace"}


def total_of(assembly):
    return ribbonlength(assembly.diagram)


def test_formula_families():
    same, flag = pretzel_length_formula([3, 5, 7])
    assert flag == "exact"
    assert same.constant == scalar(0, Fraction(55, 3))
    assert same.d_coeff == Scalar.of(6 * 7 + 4)

    mixed, flag = pretzel_length_formula([3, 4, 7])
    assert flag == "exact"
    assert mixed.constant == scalar(0, Fraction(49, 3))
    assert mixed.d_coeff == Scalar.of(6 * 7 + 5)

    general, flag = pretzel_length_formula([1, 2, 3, 4])
    assert flag == "upper-bound"
    assert general.constant == scalar(0, Fraction(18 * 4 + 1, 3))
    assert general.d_coeff == Scalar.of(2 * 4 * 4 + 4 + 1)

    with pytest.raises(ConstructionError, match="too few strands"):
        pretzel_length_formula([5])


def test_equalize_strands():
    assert equalize_strands([3, 5, 7]) == [4, 2, 0]
    assert equalize_strands([2, 2, 6]) == [4, 4, 0]
    with pytest.raises(ConstructionError, match="parity"):
        equalize_strands([2, 3, 4])


@pytest.mark.parametrize("triple", [(1, 1, 1), (3, 5, 7), (-3, 5, -7), (2, 4, 8)])
def test_same_parity_exact(triple):
    assembly = construct_pretzel3_same_parity(*triple, D100)
    want = symlen_eval(assembly.formula, Scalar.of(D100))
    assert total_of(assembly) == want
    assert assembly.exactness == "exact"


def test_same_parity_rejects_mixed():
    with pytest.raises(ConstructionError, match="parity"):
        construct_pretzel3_same_parity(2, 3, 5, D100)


@pytest.mark.parametrize("triple", [(1, 2, 1), (3, 4, 7), (-5, 2, 9)])
def test_mixed_exact(triple):
    assembly = construct_pretzel3_mixed(*triple, D100)
    want = symlen_eval(assembly.formula, Scalar.of(D100))
    assert total_of(assembly) == want


def test_mixed_rejects_wrong_parity_pattern():
    with pytest.raises(ConstructionError, match="parity"):
        construct_pretzel3_mixed(3, 5, 7, D100)
    with pytest.raises(ConstructionError, match="parity"):
        construct_pretzel3_mixed(2, 4, 6, D100)


@pytest.mark.parametrize("params", [(1, 1), (2, 3, 4, 5), (1, 2, 3, 4, 5)])
def test_n_strand_upper_bound(params):
    assembly = construct_pretzel_n(params, D100)
    want = symlen_eval(assembly.formula, Scalar.of(D100))
    assert total_of(assembly) == want  # the assembly meets its bound exactly
    assert assembly.exactness == "upper-bound"


def test_n_strand_rejects_few_strands():
    with pytest.raises(ConstructionError, match="too few strands"):
        construct_pretzel_n([7], D100)


def test_dispatcher_picks_families():
    assert construct_pretzel([3, 5, 7], D100).exactness == "exact"
    assert construct_pretzel([3, 4, 7], D100).exactness == "exact"
    assert construct_pretzel([2, 3, 4], D100).exactness == "upper-bound"


def test_crossing_counts_and_components():
    assembly = construct_pretzel([3, 4, 7], D100)
    twist = [c for c in assembly.diagram.crossings if c.kind == "twist"]
    assert len(twist) == 3 + 4 + 7
    # Odd strand count closes into a single component; every component closed.
    assert len(assembly.diagram.components) == 1
    assert all(c.closed for c in assembly.diagram.components)
    even = construct_pretzel([1, 1, 1, 1], D100)
    assert len(even.diagram.components) == 2


def test_crossing_signs_follow_parameters():
    assembly = construct_pretzel([2, -3, 4], D100)
    twist = [c for c in assembly.diagram.crossings if c.kind == "twist"]
    assert sum(1 for c in twist if not c.over_first) == 3
    assert sum(1 for c in twist if c.over_first) == 6


def test_validation_clean():
    for params in ((3, 5, 7), (1, 2, 1), (2, 3, 4, 5)):
        assembly = construct_pretzel(params, D100)
        report = validate(assembly.diagram)
        assert report.ok()
        assert {w.kind for w in report.warnings} <= ALLOWED


def test_spacing_precondition():
    # The band stack pitch admits d = 1/100 but not d = 1/50.
    construct_pretzel([1, 1, 1], Fraction(1, 1000))
    with pytest.raises(ConstructionError, match="invalid spacing"):
        construct_pretzel([1, 1, 1], Fraction(1, 50))


def test_join_records_sum_to_formula():
    assembly = construct_pretzel([3, 5, 7], D100)
    total = None
    for jr in assembly.diagram.joins:
        part = jr.total()
        total = part if total is None else total + part
    assert total.constant == assembly.formula.constant
    assert total.d_coeff == assembly.formula.d_coeff
