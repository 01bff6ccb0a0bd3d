"""Ribbonlength upper bounds for knot and link families.

Closed-form bounds are keyed by a small family notation:

* ``unknot``            -- the trivial knot
* ``T(p,q)``            -- torus knot or link
* ``T_n``               -- twist knot with ``n`` half twists in the clasp
* ``P(p1,...,pn)``      -- pretzel knot or link
* ``R(p,q)``            -- two-bridge (rational) knot
* ``generic(c)``        -- a knot known only through its crossing number

A bundled catalog (``data/catalog.csv``) records one tabulated bound per
knot through nine crossings, plus a few larger examples and torus links.
Set the ``RIBBON_CATALOG`` environment variable to substitute another
catalog file with the same columns.
"""

from __future__ import annotations

import csv
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional, Sequence

from .exactnum import Scalar, scalar, symlen_eval
from .pretzel import pretzel_length_formula

__all__ = [
    "BoundsError",
    "CatalogEntry",
    "parse_family",
    "crossing_number",
    "torus_bound",
    "twist_bound",
    "pretzel_bound",
    "rational_bound",
    "generic_bound",
    "twisted_torus_bound",
    "uniform_bound",
    "applicable_bounds",
    "best_bound",
    "load_catalog",
    "render_table",
    "uniform_bound_demo",
]


class BoundsError(ValueError):
    """Raised for malformed family notation or missing data."""


# ---------------------------------------------------------------------------
# Family notation


_FAMILY_RE = re.compile(
    r"""^(?:
        (?P<unknot>unknot)
      | T\((?P<tp>\d+)\s*,\s*(?P<tq>\d+)\)
      | T_(?P<tw>\d+)
      | P\((?P<pp>-?\d+(?:\s*,\s*-?\d+)*)\)
      | R\((?P<rp>\d+)\s*,\s*(?P<rq>\d+)\)
      | generic\((?P<gc>\d+)\)
    )$""",
    re.VERBOSE,
)


def parse_family(text: str) -> tuple[str, tuple[int, ...]]:
    """Parse family notation into ``(kind, params)``.

    ``kind`` is one of ``"unknot"``, ``"torus"``, ``"twist"``,
    ``"pretzel"``, ``"rational"``, ``"generic"``.
    """
    m = _FAMILY_RE.match(text.strip())
    if m is None:
        raise BoundsError(f"unrecognized family notation: {text!r}")
    if m.group("unknot"):
        return "unknot", ()
    if m.group("tp"):
        return "torus", (int(m.group("tp")), int(m.group("tq")))
    if m.group("tw"):
        return "twist", (int(m.group("tw")),)
    if m.group("pp"):
        params = tuple(int(x) for x in m.group("pp").split(","))
        return "pretzel", params
    if m.group("rp"):
        return "rational", (int(m.group("rp")), int(m.group("rq")))
    return "generic", (int(m.group("gc")),)


def crossing_number(family: str) -> int:
    """Crossing number implied by a family presentation.

    Raises ``BoundsError("crossing number unknown")`` when the notation
    does not determine it (two-bridge presentations, pretzels with mixed
    signs outside the recognized patterns).
    """
    kind, params = parse_family(family)
    if kind == "unknot":
        return 0
    if kind == "torus":
        p, q = params
        if min(p, q) == 2:
            return max(p, q)
        return min(p * (q - 1), q * (p - 1))
    if kind == "twist":
        return params[0] + 2
    if kind == "generic":
        return params[0]
    if kind == "pretzel":
        if all(x > 0 for x in params) or all(x < 0 for x in params):
            return sum(abs(x) for x in params)
        if (
            len(params) == 3
            and params[0] < 0 < min(params[1], params[2])
            and min(abs(x) for x in params) >= 2
        ):
            return sum(abs(x) for x in params)
        raise BoundsError("crossing number unknown")
    raise BoundsError("crossing number unknown")


# ---------------------------------------------------------------------------
# Closed-form bounds


def torus_bound(p: int, q: int) -> Fraction:
    """Ribbonlength bound for the ``(p, q)`` torus knot or link."""
    if p < 2 or q < 2:
        raise BoundsError("torus parameters must be at least 2")
    bound = Fraction(2 * max(p, q))
    if min(p, q) == 2:
        bound = min(bound, Fraction(max(p, q) + 3))
    return bound


def twist_bound(n: int) -> Fraction:
    """Ribbonlength bound for the twist knot with ``n`` clasp half twists."""
    if n < 1:
        raise BoundsError("twist parameter must be positive")
    return Fraction(n + 6)


def pretzel_bound(params: Sequence[int]) -> Fraction:
    """Ribbonlength bound for the ``(p_1, ..., p_n)`` pretzel."""
    if len(params) < 2:
        raise BoundsError("too few strands")
    if any(x == 0 for x in params):
        raise BoundsError("pretzel parameters must be nonzero")
    return Fraction(sum(abs(x) for x in params) + 2 * len(params))


def rational_bound(crossings: int) -> Fraction:
    """Ribbonlength bound for a two-bridge knot by crossing number."""
    if crossings < 3:
        raise BoundsError("two-bridge knots need at least 3 crossings")
    return Fraction(2 * crossings + 2)


def generic_bound(crossings: int) -> Fraction:
    """Ribbonlength bound available to any knot by crossing number."""
    if crossings < 0:
        raise BoundsError("crossing number must be nonnegative")
    return Fraction(5, 2) * crossings + 1


def twisted_torus_bound(p: int, q: int, r: int, s: int) -> Fraction:
    """Ribbonlength bound for the twisted torus knot ``T(p, q; r, s)``."""
    if p < 2 or q < 2 or s == 0:
        raise BoundsError("twisted torus parameters out of range")
    candidates = []
    if 0 < r < p + q:
        candidates.append(Fraction(2 * (max(p, q, r) + abs(s) * r)))
    if 0 < r <= p - q:
        candidates.append(Fraction(2 * (p + (abs(s) - 1) * r)))
    if not candidates:
        raise BoundsError("twisted torus parameters out of range")
    return min(candidates)


def uniform_bound(family: str) -> Scalar:
    """Spacing-independent (limit) ribbonlength bound, exact in Q(sqrt 3).

    Available for two-strand torus knots, twist knots, and pretzels.
    """
    kind, params = parse_family(family)
    if kind == "torus":
        p, q = sorted(params)
        if p == 2 and q % 2 == 1:
            return scalar(0, 8)  # 8*sqrt(3)
        raise BoundsError("no uniform bound for this family")
    if kind == "twist":
        n = params[0]
        return scalar(2, 9) if n % 2 == 1 else scalar(2, 8)
    if kind == "pretzel":
        n = len(params)
        if n < 2:
            raise BoundsError("too few strands")
        parities = {abs(x) % 2 for x in params}
        if n == 3 and len(parities) == 2:
            return scalar(0, Fraction(49, 3))  # 49/sqrt(3)
        return scalar(0, Fraction(18 * n + 1, 3))  # (18n+1)/sqrt(3)
    raise BoundsError("no uniform bound for this family")


def applicable_bounds(
    family: str, crossings: Optional[int] = None
) -> list[tuple[str, Fraction]]:
    """All closed-form bounds that apply to a family presentation.

    Returns ``(label, value)`` pairs.  ``crossings`` supplies the crossing
    number when the notation alone does not determine it.
    """
    kind, params = parse_family(family)
    out: list[tuple[str, Fraction]] = []
    if kind == "unknot":
        return [("unknot", Fraction(0))]
    if kind == "torus":
        p, q = params
        out.append(("torus", Fraction(2 * max(p, q))))
        if min(p, q) == 2:
            out.append(("two-strand torus", Fraction(max(p, q) + 3)))
    elif kind == "twist":
        out.append(("twist", twist_bound(params[0])))
    elif kind == "pretzel":
        out.append(("pretzel", pretzel_bound(params)))
    if crossings is None:
        try:
            crossings = crossing_number(family)
        except BoundsError:
            if kind == "rational" or not out:
                raise BoundsError("crossing number unknown") from None
            return out
    if kind == "rational":
        out.append(("two-bridge", rational_bound(crossings)))
    out.append(("generic", generic_bound(crossings)))
    return out


# ---------------------------------------------------------------------------
# Catalog


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    crossing_number: int
    family: str
    expected_bound: Fraction
    citation: str


def _catalog_path() -> str:
    override = os.environ.get("RIBBON_CATALOG")
    if override:
        return override
    return str(resources.files("foldribbon").joinpath("data/catalog.csv"))


def load_catalog(path: Optional[str] = None) -> list[CatalogEntry]:
    """Read the bound catalog (bundled file unless overridden)."""
    where = path if path is not None else _catalog_path()
    entries = []
    with open(where, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            entries.append(
                CatalogEntry(
                    name=row["name"],
                    crossing_number=int(row["crossing_number"]),
                    family=row["family"],
                    expected_bound=Fraction(row["expected_bound"]),
                    citation=row["citation"],
                )
            )
    if not entries:
        raise BoundsError(f"empty catalog: {where}")
    return entries


def best_bound(
    name: str, catalog: Optional[list[CatalogEntry]] = None
) -> Fraction:
    """Smallest known ribbonlength bound for a cataloged knot or link."""
    if catalog is None:
        catalog = load_catalog()
    for entry in catalog:
        if entry.name == name:
            candidates = [entry.expected_bound]
            if entry.family:
                try:
                    formulas = applicable_bounds(
                        entry.family, crossings=entry.crossing_number
                    )
                except BoundsError:
                    formulas = []
                candidates.extend(value for _, value in formulas)
            return min(candidates)
    raise BoundsError(f"not in catalog: {name}")


# ---------------------------------------------------------------------------
# Tables


def _format_bound(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return str(float(value))


def _name_key(name: str) -> tuple:
    parts = re.split(r"(\d+)", name)
    return tuple(int(p) if p.isdigit() else p for p in parts)


def _render_rows(entries: list[CatalogEntry]) -> str:
    rows = [("Knot", "Bound", "Formula")]
    for e in sorted(entries, key=lambda e: (e.crossing_number, _name_key(e.name))):
        rows.append((e.name, _format_bound(e.expected_bound), e.family))
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    lines = [" | ".join(c.ljust(w) for c, w in zip(rows[0], widths)).rstrip()]
    lines.append("-+-".join("-" * w for w in widths))
    for row in rows[1:]:
        lines.append(" | ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_table(
    max_crossing: int = 6,
    catalog: Optional[list[CatalogEntry]] = None,
    min_crossing: int = 0,
    links: bool = False,
) -> str:
    """Render the knot bound table as aligned text.

    By default lists knots only; pass ``links=True`` for the link rows
    instead (crossing limits then apply to the links).
    """
    if catalog is None:
        catalog = load_catalog()
    chosen = [
        e
        for e in catalog
        if e.name.startswith("L") == links
        and min_crossing <= e.crossing_number <= max_crossing
    ]
    if not chosen:
        raise BoundsError("no catalog rows in the requested range")
    return _render_rows(chosen)


def uniform_bound_demo(
    params: Sequence[int],
    spacings: Sequence[Fraction] = (Fraction(1, 100), Fraction(1, 1000)),
) -> str:
    """Show pretzel construction lengths converging to the uniform limit.

    Lists the exact construction length at each spacing next to the
    spacing-free limit; the excess over the limit shrinks linearly
    with the spacing.
    """
    formula, _ = pretzel_length_formula(list(params))
    limit = uniform_bound("P(" + ",".join(str(x) for x in params) + ")")
    lines = [f"pretzel {tuple(params)}: uniform limit {float(limit):.9f}"]
    for d in spacings:
        total = symlen_eval(formula, Scalar.of(d))
        lines.append(
            f"  spacing {d}: length {float(total):.9f}"
            f"  (excess {float(total) - float(limit):.9f})"
        )
    return "\n".join(lines) + "\n"
