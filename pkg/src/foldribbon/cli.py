"""Command-line interface.

Subcommands::

    construct   build a twist or pretzel assembly, emit ribbon-geometry v1
    measure     report the ribbonlength of a geometry file
    validate    check a geometry file for physical consistency
    verify      run the built-in construction self-checks
    bounds      query the bound catalog and closed-form bounds
    export      render a geometry file as SVG

Exit codes: 0 success, 1 construction/validation/verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .bounds import (
    BoundsError,
    applicable_bounds,
    best_bound,
    load_catalog,
    render_table,
)
from .exactnum import Approx, Scalar, scalar_to_float
from .accordion import ConstructionError
from .pretzel import construct_pretzel
from .ribbon import (
    export_geometry,
    export_svg,
    measure_subpath,
    parse_geometry,
    ribbonlength,
    validate,
)
from .twists import construct_half_twists

__all__ = ["run", "main"]


def _spacing(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational spacing: {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r}")


def _render_length(value, fmt: str) -> str:
    if isinstance(value, Approx):
        exact, approx = None, value.value
    else:
        exact, approx = value.text(), scalar_to_float(value)
    if fmt == "json":
        return json.dumps({"exact": exact, "value": round(approx, 9)})
    if exact is None:
        return f"{approx:.9f} (approximate)"
    return f"{exact} = {approx:.9f}"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_construct(args) -> int:
    if args.kind == "twist":
        assembly = construct_half_twists(args.half_twists, args.spacing)
    else:
        if not args.params:
            print("construct pretzel requires --params", file=sys.stderr)
            return 2
        assembly = construct_pretzel(args.params, args.spacing)
    _write(args.output, export_geometry(assembly.diagram))
    return 0


def _cmd_measure(args) -> int:
    diagram = parse_geometry(_read(args.file))
    if args.between:
        value = measure_subpath(diagram, args.between[0], args.between[1])
        label = f"length[{args.between[0]}..{args.between[1]}]"
    else:
        value = ribbonlength(diagram)
        label = "ribbonlength"
    if args.format == "json":
        print(_render_length(value, "json"))
    else:
        print(f"{label} = {_render_length(value, 'text')}")
    return 0


def _cmd_validate(args) -> int:
    diagram = parse_geometry(_read(args.file))
    report = validate(diagram, mode=args.mode)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "ok": report.ok(),
                    "errors": [[i.kind, i.message] for i in report.errors],
                    "warnings": {
                        kind: sum(1 for i in report.warnings if i.kind == kind)
                        for kind in sorted({i.kind for i in report.warnings})
                    },
                }
            )
        )
    else:
        for issue in report.errors:
            print(f"error [{issue.kind}] {issue.message}")
        kinds: dict[str, int] = {}
        for issue in report.warnings:
            kinds[issue.kind] = kinds.get(issue.kind, 0) + 1
        for kind, count in sorted(kinds.items()):
            print(f"warning [{kind}] x{count}")
        if report.ok():
            print("ok" if not report.warnings else "ok (with warnings)")
    return 0 if report.ok() else 1


def _cmd_verify(args) -> int:
    from . import verify_all

    results = verify_all(
        d=args.spacing, kmax=args.max_half_twists, rmax=args.max_strand_param
    )
    failed = 0
    for name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        suffix = f": {detail}" if detail else ""
        print(f"{status} {name}{suffix}")
        failed += 0 if ok else 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


_TABLE_GROUPS = {
    "6": dict(min_crossing=0, max_crossing=6),
    "7-8": dict(min_crossing=7, max_crossing=8),
    "9": dict(min_crossing=9, max_crossing=9),
    "10": dict(min_crossing=10, max_crossing=10),
    "other": None,
}


def _cmd_bounds(args) -> int:
    catalog = load_catalog(args.catalog)
    if args.table:
        if args.table == "other":
            text = render_table(99, catalog, links=True)
            text += render_table(99, catalog, min_crossing=11)
        else:
            text = render_table(catalog=catalog, **_TABLE_GROUPS[args.table])
        sys.stdout.write(text)
        return 0
    if args.family:
        pairs = applicable_bounds(args.family, crossings=args.crossings)
        if args.format == "json":
            print(json.dumps({label: str(v) for label, v in pairs}))
        else:
            for label, value in pairs:
                print(f"{label}: {float(value):g}")
            print(f"best: {float(min(v for _, v in pairs)):g}")
        return 0
    if args.name:
        value = best_bound(args.name, catalog)
        if args.format == "json":
            print(json.dumps({"name": args.name, "bound": str(value)}))
        else:
            print(f"{args.name}: {float(value):g}")
        return 0
    print("bounds requires a knot name, --family, or --table", file=sys.stderr)
    return 2


def _cmd_export(args) -> int:
    diagram = parse_geometry(_read(args.file))
    _write(args.svg, export_svg(diagram))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foldribbon",
        description="Folded-ribbon knot constructions, measurement, and bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an assembly and emit geometry")
    p.add_argument("kind", choices=["twist", "pretzel"])
    p.add_argument(
        "--half-twists", "-k", type=int, default=0,
        help="signed half-twist count (twist assemblies)",
    )
    p.add_argument(
        "--params", type=_int_list,
        help="comma-separated strand parameters (pretzel assemblies)",
    )
    p.add_argument(
        "--spacing", "-d", type=_spacing, default=Fraction(1, 100),
        help="fold spacing as a rational, e.g. 1/100",
    )
    p.add_argument("--output", "-o", help="output file (default stdout)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("measure", help="measure a geometry file")
    p.add_argument("file")
    p.add_argument(
        "--between", nargs=2, metavar=("START", "END"),
        help="measure between two landmarks instead of the whole diagram",
    )
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("validate", help="validate a geometry file")
    p.add_argument("file")
    p.add_argument("--mode", choices=["default", "strict"], default="default")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("verify", help="run construction self-checks")
    p.add_argument("--spacing", "-d", type=_spacing, default=Fraction(1, 100))
    p.add_argument("--max-half-twists", type=int, default=4)
    p.add_argument("--max-strand-param", type=int, default=5)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bounds", help="query ribbonlength bounds")
    p.add_argument("name", nargs="?", help="catalog name, e.g. 8_19")
    p.add_argument("--family", help="family notation, e.g. 'P(-2,3,7)'")
    p.add_argument(
        "--crossings", type=int,
        help="crossing number when the family notation needs one",
    )
    p.add_argument("--table", choices=sorted(_TABLE_GROUPS))
    p.add_argument("--catalog", help="alternate catalog CSV path")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("export", help="render a geometry file as SVG")
    p.add_argument("file")
    p.add_argument("--svg", "-o", help="output file (default stdout)")
    p.set_defaults(func=_cmd_export)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point returning an exit code (0 ok, 1 failure, 2 usage)."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConstructionError, BoundsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
