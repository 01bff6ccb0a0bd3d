"""Assemble pretzel diagrams and account for every unit of ribbon.

Three closed forms cover the constructions:

  same-parity (p,q,r):   55/sqrt(3) + (6 max + 4) d      (exact)
  one even (p,q,r):      49/sqrt(3) + (6 max + 5) d      (exact)
  any (p_1, ..., p_n):   (18n+1)/sqrt(3) + (2n max + n + 1) d   (upper bound,
                         met exactly by this assembly)

The join records show where each term comes from; they sum to the formula.
Run:  python3 demos/pretzel_gallery.py
"""

from fractions import Fraction

from foldribbon import (
    construct_pretzel,
    export_svg,
    ribbonlength,
    scalar_to_float,
    symlen_eval,
    uniform_bound_demo,
    validate,
)
from foldribbon.exactnum import Scalar


def show(params, d=Fraction(1, 100)) -> None:
    assembly = construct_pretzel(params, d)
    total = ribbonlength(assembly.diagram)
    want = symlen_eval(assembly.formula, Scalar.of(d))
    match = "exact" if total == want else "MISMATCH"
    comps = len(assembly.diagram.components)
    twists = sum(1 for c in assembly.diagram.crossings if c.kind == "twist")
    print(f"P{tuple(params)}  [{assembly.exactness}]")
    print(f"  total = {total.text()}  ({scalar_to_float(total):.9f})  {match}")
    print(f"  components: {comps}   twist crossings: {twists}")
    budget = None
    for jr in assembly.diagram.joins:
        part = jr.total()
        budget = part if budget is None else budget + part
    print(f"  join budget sums to formula: {budget.constant == assembly.formula.constant and budget.d_coeff == assembly.formula.d_coeff}")
    report = validate(assembly.diagram)
    print(f"  validation: {len(report.errors)} errors, warnings by kind:",
          sorted({w.kind for w in report.warnings}))
    print()


def main() -> None:
    show([3, 5, 7])      # all odd: the (3,5,7)-pretzel knot
    show([-2, 3, 7])     # one even: P(-2,3,7), a famous 12-crossing knot
    show([1, 2, 1])      # smallest mixed case
    show([2, 3, 4, 5])   # four strands: general assembly

    print(uniform_bound_demo([3, 5, 7], [Fraction(1, 100), Fraction(1, 1000)]))

    assembly = construct_pretzel([-2, 3, 7], Fraction(1, 100))
    with open("pretzel_m237.svg", "w", encoding="utf-8") as fh:
        fh.write(export_svg(assembly.diagram))
    print("wrote pretzel_m237.svg")


if __name__ == "__main__":
    main()
