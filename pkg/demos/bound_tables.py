"""Survey the ribbonlength bound catalog.

Prints the knot tables through ten crossings, then shows how the best
bound for each knot combines its family formula with the tabulated value.
Run:  python3 demos/bound_tables.py
"""

from foldribbon import (
    applicable_bounds,
    best_bound,
    load_catalog,
    render_table,
)


def main() -> None:
    catalog = load_catalog()
    print(render_table(max_crossing=6, catalog=catalog))
    print(render_table(max_crossing=8, min_crossing=7, catalog=catalog))

    print("formula vs catalog for a few highlights:")
    for name in ("3_1", "8_19", "9_46", "10_124", "12n242", "L2a1"):
        entry = next(e for e in catalog if e.name == name)
        pairs = applicable_bounds(entry.family, crossings=entry.crossing_number)
        formulas = ", ".join(f"{label}={float(v):g}" for label, v in pairs)
        print(
            f"  {name:>7}  family {entry.family:<12} catalog {float(entry.expected_bound):g}"
            f"  ({formulas})  best {float(best_bound(name, catalog)):g}"
        )


if __name__ == "__main__":
    main()
