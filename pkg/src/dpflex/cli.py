"""Command line interface: ``dpflex <subcommand> ...``.

Exit status is 0 on success, 1 when a ``check`` fails (the reports are still
printed) and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import scenarios as sc
from .cone import Cone, membership
from .curves import blowdowns, incidence_graph
from .errors import DpflexError
from .lattice import Surface, class_name, format_class, parse_class


def _divisor(text: str):
    try:
        return parse_class(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _selector(text: str) -> tuple[str, int | None]:
    if text in ("ample", "effective", "flex"):
        return text, None
    kind, _, num = text.partition(":")
    if kind in ("polar", "family") and num.lstrip("-").isdigit():
        return kind, int(num)
    raise argparse.ArgumentTypeError(f"unknown cone selector {text!r}; use ample, effective, flex, polar:<id> or family:<i>")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--orbit", choices=sc.ORBITS, default=sc.DEFAULT_ORBIT,
                        help="orbit of base curves C1..C5 for the degree-4 families")

    parser = argparse.ArgumentParser(prog="dpflex", description="Cone computations on del Pezzo surfaces of degree 4 and 5.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, degrees, help_ in (
        ("curves", range(3, 10), "list the (-1)-classes"),
        ("graph", range(3, 10), "incidence graph of (-1)-curves"),
        ("blowdowns", (4, 5), "maximal sets of disjoint (-1)-curves and their line classes"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--degree", type=int, choices=degrees, required=True)

    p = sub.add_parser("cone", parents=[common], help="rays and facets of a cone")
    p.add_argument("selector", type=_selector, help="ample | effective | flex | polar:<id> | family:<i>")
    p.add_argument("--degree", type=int, choices=(4, 5), required=True)

    p = sub.add_parser("cylinders", parents=[common], help="the 15 degree-5 cylinders")
    p.add_argument("--degree", type=int, choices=(5,), default=5)

    p = sub.add_parser("families", parents=[common], help="the 5 degree-4 cylinder families")
    p.add_argument("--degree", type=int, choices=(4,), default=4)

    p = sub.add_parser("member", parents=[common], help="classify a divisor against a cone")
    p.add_argument("--degree", type=int, choices=(4, 5), required=True)
    p.add_argument("--cone", dest="selector", type=_selector, required=True)
    p.add_argument("--divisor", type=_divisor, required=True, help="comma-separated coefficients a0,a1,...,ar")

    p = sub.add_parser("check", parents=[common], help="run reproduction checks")
    p.add_argument("which", choices=("polarity", "cover", "memberships", "paper"))
    p.add_argument("--degree", type=int, choices=(4, 5), default=None,
                   help="degree for the cover check (both if omitted)")
    return parser


def _resolve_cone(parser, selector, degree: int, orbit: str) -> Cone:
    kind, num = selector
    s = Surface(degree)
    if kind == "ample":
        return sc.nef_cone(s)
    if kind == "effective":
        return sc.effective_cone(s)
    if kind == "flex":
        if degree != 4:
            parser.error("the flex cone exists for degree 4 only")
        return sc.flexibility_cone_deg4(orbit)
    if kind == "polar":
        if degree != 5 or not 1 <= num <= 15:
            parser.error("polar:<id> needs --degree 5 and an id in 1..15")
        return sc.polarity_cone(sc.cylinders_deg5()[num - 1].complement)
    if degree != 4 or not 1 <= num <= 5:
        parser.error("family:<i> needs --degree 4 and i in 1..5")
    fam = sc.families_deg4(s, orbit)[num - 1]
    return sc.cone_from_generators(fam.ample_generators, s.rank)


def _cone_text(cone: Cone) -> list[str]:
    lines = [f"ambient dim {cone.ambient_dim}, span dim {cone.dim}, pointed {str(cone.pointed).lower()}",
             f"rays ({len(cone.rays)}):"]
    lines += [f"  {format_class(r)}" for r in cone.rays]
    lines.append(f"facets ({len(cone.facets)}):")
    lines += [f"  {format_class(f)}" for f in cone.facets]
    if cone.lineality:
        lines.append("lineality:")
        lines += [f"  {format_class(v)}" for v in cone.lineality]
    if cone.equations:
        lines.append("equations:")
        lines += [f"  {format_class(v)}" for v in cone.equations]
    return lines


def _report_text(reports) -> list[str]:
    return [f"{'PASS' if r.passed else 'FAIL'}  {r.name}" for r in reports]


def _summary_table(reports) -> list[str]:
    width = max(len(r.name) for r in reports)
    lines = [f"{'report'.ljust(width)}  result  reproduces"]
    for r in reports:
        lines.append(f"{r.name.ljust(width)}  {'PASS' if r.passed else 'FAIL':6}  {sc.REPORT_SOURCES.get(r.name, '')}")
    return lines


def _execute(parser, args) -> tuple[object, list[str], int]:
    """Return ``(json_result, text_lines, exit_code)``."""
    cmd = args.command
    if cmd == "curves":
        cs = sc.curves(Surface(args.degree))
        return [list(c) for c in cs], [f"{format_class(c)}  {class_name(c)}" for c in cs], 0
    if cmd == "graph":
        g = incidence_graph(sc.curves(Surface(args.degree)))
        d = g.to_dict()
        lines = [f"{len(g.curves)} vertices, {len(g.edges)} edges"]
        lines += [f"v{i}  {format_class(c)}  {class_name(c)}" for i, c in enumerate(g.curves.classes)]
        lines += [f"e  {a} {b}" for a, b in g.edges]
        return {"vertices": d["vertices"], "edges": d["edges"]}, lines, 0
    if cmd == "blowdowns":
        bds = blowdowns(sc.curves(Surface(args.degree)))
        res = [{"contracted": [list(f) for f in b.contracted], "line_class": list(b.line_class)} for b in bds]
        lines = [f"{i}: line {class_name(b.line_class)}; contracts " + ", ".join(class_name(f) for f in b.contracted)
                 for i, b in enumerate(bds, start=1)]
        return res, lines, 0
    if cmd == "cone":
        cone = _resolve_cone(parser, args.selector, args.degree, args.orbit)
        return cone.to_dict(), _cone_text(cone), 0
    if cmd == "cylinders":
        cyls = sc.cylinders_deg5()
        res = [{"id": c.id, "contracted": [list(f) for f in c.blowdown.contracted],
                "line_class": list(c.blowdown.line_class),
                "pair_partition": [[list(f) for f in pair] for pair in c.pair_partition],
                "complement": [list(f) for f in c.complement]} for c in cyls]
        lines = [f"U{c.id}: " + ", ".join(class_name(f) for f in c.complement) for c in cyls]
        return res, lines, 0
    if cmd == "families":
        fams = sc.families_deg4(Surface(4), args.orbit)
        res = {"orbit": args.orbit, "families": [
            {"base_curve": list(f.base_curve), "contracted": [list(x) for x in f.contracted],
             "line_class": list(f.line_class), "residual": [list(x) for x in f.residual]} for f in fams]}
        lines = [f"orbit {args.orbit}"]
        lines += [f"C{i}: {class_name(f.base_curve)}; line {class_name(f.line_class)}; contracts "
                  + ", ".join(class_name(x) for x in f.contracted) for i, f in enumerate(fams, start=1)]
        return res, lines, 0
    if cmd == "member":
        s = Surface(args.degree)
        if len(args.divisor) != s.rank:
            parser.error(f"--divisor needs {s.rank} coefficients for degree {args.degree}, got {len(args.divisor)}")
        cone = _resolve_cone(parser, args.selector, args.degree, args.orbit)
        verdict = str(membership(args.divisor, cone))
        return {"divisor": list(args.divisor), "membership": verdict}, [verdict], 0

    # check
    if args.which == "polarity":
        reports = [sc.check_polarity_deg5()]
    elif args.which == "memberships":
        reports = [sc.check_memberships_deg4(args.orbit)]
    elif args.which == "cover":
        reports = []
        if args.degree in (None, 5):
            reports.append(sc.check_cover_deg5())
        if args.degree in (None, 4):
            reports.append(sc.check_cover_deg4(args.orbit))
    else:
        reports = sc.reproduction_suite(args.orbit)
    lines = _summary_table(reports) if args.which == "paper" else _report_text(reports)
    code = 0 if all(r.passed for r in reports) else 1
    return [r.to_dict() for r in reports], lines, code


def _json_degree(args) -> int:
    if args.degree is not None:
        return args.degree
    # check runs without a single degree: polarity is degree 5, memberships degree 4, 0 means "all"
    return {"polarity": 5, "memberships": 4}.get(getattr(args, "which", None), 0)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result, lines, code = _execute(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except DpflexError as exc:
        print(f"dpflex: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps({"command": args.command, "degree": _json_degree(args), "result": result}))
    else:
        print("\n".join(lines))
    return code


def run() -> None:
    sys.exit(main())
