"""Command line interface.

Exit codes: 0 on success, 1 on input or usage errors, 2 when a verified
property fails to hold (method disagreement or a violated bound).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import (
    compare_exit_structures,
    exit_graph_crossings,
    search_min_exit_edges,
    stats_report,
)
from .dual import exit_edges_dual
from .geometry import GeometryError, PointSet
from .morph import first_collinearity_morph
from .oracle import exit_edges_bruteforce, exit_edges_via_holes
from .pointfile import parse_point_list, parse_points, serialize_points
from .report import build_report, render_json
from .svg import render_svg

OK, INPUT_ERROR, PROPERTY_VIOLATION = 0, 1, 2


def _load(path: str) -> PointSet:
    return parse_points(Path(path).read_text(encoding="utf-8"))


def _format_edges(edges) -> str:
    body = "; ".join(str(e) for e in edges)
    plural = "s" if len(edges) != 1 else ""
    return f"{len(edges)} exit edge{plural}: {body}"


def _cmd_compute(args) -> int:
    ps = _load(args.file)
    edges = exit_edges_dual(ps)
    if args.json:
        print(render_json(build_report(ps, edges)), end="")
    else:
        print(_format_edges(edges))
    return OK


def _cmd_check(args) -> int:
    ps = _load(args.file)
    dual = exit_edges_dual(ps)
    brute = exit_edges_bruteforce(ps)
    hole_pairs = exit_edges_via_holes(ps)
    dual_matches = dual == brute
    holes_match = frozenset(e.endpoints for e in brute) == hole_pairs
    print(f"dual method:        {_format_edges(dual)}")
    print(f"brute force agrees: {'yes' if dual_matches else 'NO'}")
    print(f"4-hole test agrees: {'yes' if holes_match else 'NO'}")
    return OK if dual_matches and holes_match else PROPERTY_VIOLATION


def _cmd_stats(args) -> int:
    ps = _load(args.file)
    rep = stats_report(ps)
    if args.json:
        print(render_json(build_report(ps, exit_edges_dual(ps), rep)), end="")
    else:
        print(f"n = {rep.n}")
        print(f"triangular cells = {rep.triangles} "
              f"(unmarked {rep.triangles_unmarked}), hourglasses = {rep.hourglass_count}")
        print(f"exit edges = {rep.exit_edge_count} "
              f"(bounds: {rep.lower_bound} .. {rep.upper_bound})")
        print(f"sum of per-line x = {rep.sum_x}")
        for name, ok in rep.verdicts.items():
            print(f"  {name}: {'pass' if ok else 'FAIL'}")
    return OK if rep.all_bounds_hold else PROPERTY_VIOLATION


def _cmd_render(args) -> int:
    ps = _load(args.file)
    mode = "dual" if args.dual else "primal"
    Path(args.out).write_text(render_svg(ps, mode), encoding="utf-8")
    print(f"wrote {mode} figure to {args.out}")
    return OK


def _cmd_morph(args) -> int:
    ps0 = _load(args.file_a)
    target = parse_point_list(Path(args.file_b).read_text(encoding="utf-8"))
    event = first_collinearity_morph(ps0, target)
    if event is None:
        print("no collinearity event in (0, 1]")
        return OK
    a, b, c = event.triple
    print(f"first collinearity at t = {event.time} (~{float(event.time):.6g})")
    print(f"triple ({a}, {b}, {c}); {c} strictly inside segment "
          f"{a}-{b}: {'yes' if event.between else 'no'}")
    if event.between:
        edges = {e.endpoints: e.witnesses for e in exit_edges_bruteforce(ps0)}
        holds = (a, b) in edges and c in edges[(a, b)]
        print(f"edge {{{a},{b}}} is an exit edge of the start set with "
              f"witness {c}: {'yes' if holds else 'NO'}")
        if not holds:
            return PROPERTY_VIOLATION
    return OK


def _cmd_compare(args) -> int:
    ps_a = _load(args.file_a)
    ps_b = _load(args.file_b)
    rep = compare_exit_structures(ps_a, ps_b)
    print(f"exit structures match: {'yes' if rep.same_exit_structure else 'no'}")
    print(f"order types match:     {'yes' if rep.same_order_type else 'no'}")
    if rep.edges_only_in_first:
        print(f"edges only in first:  {sorted(rep.edges_only_in_first)}")
    if rep.edges_only_in_second:
        print(f"edges only in second: {sorted(rep.edges_only_in_second)}")
    for pair, wa, wb in rep.witness_mismatches:
        print(f"witnesses differ on {pair}: {sorted(wa)} vs {sorted(wb)}")
    if rep.first_orientation_mismatch:
        print(f"first differing triple: {rep.first_orientation_mismatch}")
    return OK


def _cmd_search(args) -> int:
    best_ps, best_count = search_min_exit_edges(args.n, args.trials, args.seed)
    lower = -(-(3 * args.n - 7) // 5)
    print(f"minimum over {args.trials} trials: {best_count} exit edges "
          f"(proved lower bound {lower})")
    print(serialize_points(best_ps), end="")
    return OK if best_count >= lower else PROPERTY_VIOLATION


def _cmd_crossings(args) -> int:
    ps = _load(args.file)
    print(f"{exit_graph_crossings(ps)} proper crossings among exit edges")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exitgraph",
        description="Exit edges of planar point sets in general position.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exit edges and witnesses (dual path)")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("check", help="cross-check all three methods")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("stats", help="triangle/hourglass statistics and bounds")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("render", help="write an SVG figure")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.add_argument("--dual", action="store_true")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("morph", help="first collinearity of a linear morph")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=_cmd_morph)

    p = sub.add_parser("compare", help="compare exit structures and order types")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("search", help="random search for few exit edges")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("crossings", help="count crossings in the exit graph")
    p.add_argument("file")
    p.set_defaults(func=_cmd_crossings)

    return parser


def cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except (GeometryError, OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return INPUT_ERROR


def main() -> None:
    sys.exit(cli(sys.argv[1:]))
