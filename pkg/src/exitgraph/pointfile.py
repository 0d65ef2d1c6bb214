"""The point file format: one "x y" pair per line.

Coordinates are integers or lowest-terms rationals written "p/q"; "#"
starts a comment and blank lines are skipped.  Serialization emits the
canonical form, so parse(serialize(ps)) round-trips exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import GeometryError, Point, PointSet, certify_general_position


class PointSyntaxError(GeometryError):
    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def parse_point_list(text: str) -> list[Point]:
    """Parse coordinates only; no certification (morph targets may be
    arbitrary positions)."""
    pts: list[Point] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PointSyntaxError(lineno, f"expected 'x y', got {raw.strip()!r}")
        try:
            x, y = Fraction(parts[0]), Fraction(parts[1])
        except (ValueError, ZeroDivisionError) as err:
            raise PointSyntaxError(lineno, str(err)) from None
        pts.append(Point(x, y))
    return pts


def parse_points(text: str) -> PointSet:
    """Parse and certify a point file; syntax errors carry line numbers."""
    return certify_general_position(parse_point_list(text))


def format_coordinate(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def serialize_points(ps: PointSet) -> str:
    """Canonical text form: lowest-terms coordinates, single spaces."""
    return "".join(
        f"{format_coordinate(p.x)} {format_coordinate(p.y)}\n" for p in ps.points)
