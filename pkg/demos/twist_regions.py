"""Build twist regions at several spacings and watch the exact lengths.

Every assembly measures exactly 12/sqrt(3) + (2|k|-1) d: the escape coil
contributes a fixed arc of 4/sqrt(3) per ribbon end regardless of how many
folds it needs, and each extra half twist costs exactly one spacing d.
Run:  python3 demos/twist_regions.py
"""

from fractions import Fraction

from foldribbon import (
    construct_half_twists,
    export_svg,
    half_twist_length_formula,
    measure_twist_assembly,
    scalar_to_float,
    spacing_for_epsilon,
    symlen_eval,
    validate,
)
from foldribbon.exactnum import Scalar


def main() -> None:
    print("exact twist-region lengths (total = 12/sqrt3 + (2|k|-1) d)")
    print()
    for d in (Fraction(1, 50), Fraction(1, 100), Fraction(1, 500)):
        for k in (0, 1, 3, -5):
            t = construct_half_twists(k, d)
            total = measure_twist_assembly(t)
            want = symlen_eval(half_twist_length_formula(k), Scalar.of(d))
            tag = "exact" if total == want else "MISMATCH"
            print(
                f"  k={k:+d}  d={str(d):>6}  m={t.m:4d}  "
                f"total={total.text():>22}  ({scalar_to_float(total):.9f})  {tag}"
            )
        print()

    # How small must d be for the overhead over 12/sqrt(3) to stay under 1e-3?
    eps = Fraction(1, 1000)
    d = spacing_for_epsilon(5, eps)
    print(f"spacing for k=5 and epsilon={eps}: d = {d.text()}")

    # The five-half-twist assembly drawn as SVG, with fold lines and ribbon
    # boundary; crossings in the twist ladder alternate over/under.
    t = construct_half_twists(5, Fraction(1, 100))
    report = validate(t.diagram)
    print(f"validation: {len(report.errors)} errors, {len(report.warnings)} warnings")
    with open("twist_k5.svg", "w", encoding="utf-8") as fh:
        fh.write(export_svg(t.diagram))
    print("wrote twist_k5.svg")


if __name__ == "__main__":
    main()
