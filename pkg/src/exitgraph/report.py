"""Structured JSON reports.

The schema field is versioned so downstream consumers survive additive
changes; all numbers are exact, with rationals written "p/q".
"""

from __future__ import annotations

import json
from fractions import Fraction

from .analysis import StatsReport
from .geometry import PointSet
from .oracle import ExitEdge
from .pointfile import format_coordinate

SCHEMA_VERSION = 1


def _frac(value: Fraction) -> str:
    return format_coordinate(Fraction(value))


def build_report(ps: PointSet, edges: tuple[ExitEdge, ...],
                 stats: StatsReport | None = None) -> dict:
    doc = {
        "schema": SCHEMA_VERSION,
        "n": len(ps),
        "points": [[_frac(p.x), _frac(p.y)] for p in ps.points],
        "exit_edges": [
            {"endpoints": list(e.endpoints), "witnesses": sorted(e.witnesses)}
            for e in edges
        ],
    }
    if stats is not None:
        doc["stats"] = {
            "triangles": stats.triangles,
            "triangles_unmarked": stats.triangles_unmarked,
            "hourglasses": stats.hourglass_count,
            "exit_edges": stats.exit_edge_count,
            "lower_bound": _frac(stats.lower_bound),
            "upper_bound": _frac(stats.upper_bound),
            "sum_x": _frac(stats.sum_x),
            "per_line": [
                {"line": ls.source, "t": ls.t, "h": ls.h, "x": _frac(ls.x)}
                for ls in stats.per_line
            ],
        }
        doc["verdicts"] = dict(stats.verdicts)
    return doc


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
