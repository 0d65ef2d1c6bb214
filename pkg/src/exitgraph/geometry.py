"""Exact planar geometry primitives over rational coordinates.

Every predicate in this module (and everything built on top of it) is
decided by arbitrary-precision integer arithmetic.  Floating point is
never consulted for a geometric decision; sign computations on almost
collinear triples therefore never go wrong.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Sequence, Union

Coordinate = Union[int, str, Fraction]


class GeometryError(Exception):
    """Base class for all domain errors raised by this package."""


class DuplicatePointError(GeometryError):
    def __init__(self, i: int, j: int):
        super().__init__(f"points {i} and {j} coincide")
        self.labels = (i, j)


class CollinearTripleError(GeometryError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"points {i}, {j}, {k} are collinear")
        self.labels = (i, j, k)


class TooFewPointsError(GeometryError):
    pass


class DegenerateLineError(GeometryError):
    pass


class OnLineError(GeometryError):
    pass


class SharedEndpointError(GeometryError):
    pass


class SizeMismatchError(GeometryError):
    pass


class Orientation(Enum):
    """Turn direction of an ordered point triple."""

    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def _frac(value: Coordinate) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True, order=True)
class Point:
    """A point with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _frac(self.x))
        object.__setattr__(self, "y", _frac(self.y))

    def __iter__(self) -> Iterator[Fraction]:
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


def point(x: Coordinate, y: Coordinate) -> Point:
    return Point(_frac(x), _frac(y))


def _as_point(obj) -> Point:
    if isinstance(obj, Point):
        return obj
    x, y = obj
    return Point(_frac(x), _frac(y))


@dataclass(frozen=True)
class PointSet:
    """An immutable labeled point set; labels are positions 0..n-1.

    ``int_coords`` holds the points rescaled by the common denominator of
    all coordinates.  Scaling by a positive rational preserves every
    orientation, so all predicates may (and do) run on these integers.
    """

    points: tuple[Point, ...]
    int_coords: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pts = tuple(_as_point(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        scale = lcm(1, *(d for p in pts for d in (p.x.denominator, p.y.denominator)))
        grid = tuple(
            (int(p.x.numerator * (scale // p.x.denominator)),
             int(p.y.numerator * (scale // p.y.denominator)))
            for p in pts
        )
        object.__setattr__(self, "int_coords", grid)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, label: int) -> Point:
        return self.points[label]

    def labels(self) -> range:
        return range(len(self.points))


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Exact turn direction of (p, q, r): sign of det(q - p, r - p)."""
    cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if cross > 0:
        return Orientation.COUNTERCLOCKWISE
    if cross < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def _first_duplicate(points: Sequence[Point]) -> tuple[int, int] | None:
    seen: dict[tuple[Fraction, Fraction], list[int]] = {}
    for i, p in enumerate(points):
        seen.setdefault((p.x, p.y), []).append(i)
    pairs = [(g[0], g[1]) for g in seen.values() if len(g) > 1]
    return min(pairs) if pairs else None


def certify_general_position(points: Iterable) -> PointSet:
    """Validate distinctness and the no-three-collinear condition.

    Raises DuplicatePointError or CollinearTripleError naming the first
    offending pair/triple in lexicographic label order.
    """
    pts = [_as_point(p) for p in points]
    dup = _first_duplicate(pts)
    if dup is not None:
        raise DuplicatePointError(*dup)
    ps = PointSet(tuple(pts))
    grid = ps.int_coords
    n = len(grid)
    for i in range(n):
        xi, yi = grid[i]
        for j in range(i + 1, n):
            dx1 = grid[j][0] - xi
            dy1 = grid[j][1] - yi
            for k in range(j + 1, n):
                if dx1 * (grid[k][1] - yi) == dy1 * (grid[k][0] - xi):
                    raise CollinearTripleError(i, j, k)
    return ps


def trusted_point_set(points: Iterable) -> PointSet:
    """Build a PointSet checking only distinctness, not collinearity.

    Meant for inputs already known to be in general position (shears of
    certified sets, large benchmark inputs whose degeneracies are caught
    downstream by the arrangement builder).
    """
    pts = [_as_point(p) for p in points]
    dup = _first_duplicate(pts)
    if dup is not None:
        raise DuplicatePointError(*dup)
    return PointSet(tuple(pts))


def convex_hull(ps: PointSet) -> list[int]:
    """Labels of extremal points, counterclockwise, starting from the
    lexicographically smallest point."""
    n = len(ps)
    if n < 3:
        raise TooFewPointsError(f"convex hull needs at least 3 points, got {n}")
    grid = ps.int_coords
    order = sorted(range(n), key=lambda i: grid[i])

    def turn(i: int, j: int, k: int) -> int:
        (xi, yi), (xj, yj), (xk, yk) = grid[i], grid[j], grid[k]
        v = (xj - xi) * (yk - yi) - (yj - yi) * (xk - xi)
        return (v > 0) - (v < 0)

    lower: list[int] = []
    for i in order:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(order):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


def line_separates(p: Point, q: Point, a: Point, b: Point) -> bool:
    """True iff a and b lie strictly on opposite sides of line(p, q)."""
    if p == q:
        raise DegenerateLineError("p and q coincide, no supporting line")
    oa = orientation(p, q, a)
    ob = orientation(p, q, b)
    if oa is Orientation.COLLINEAR or ob is Orientation.COLLINEAR:
        raise OnLineError("query point lies on the separating line")
    return oa is not ob


def _shear_candidates() -> Iterator[Fraction]:
    yield Fraction(0)
    k = 1
    while True:
        yield Fraction(1, k)
        yield Fraction(-1, k)
        k += 1


def shear_to_generic(ps: PointSet) -> tuple[PointSet, Fraction]:
    """Apply the shear (x, y) -> (x + lam*y, y) making all x coordinates
    distinct.

    lam is the first admissible value of 0, 1, -1, 1/2, -1/2, 1/3, ...
    A shear has determinant 1, so every triple orientation is preserved.
    """
    n = len(ps)
    grid = ps.int_coords
    for lam in _shear_candidates():
        p, q = lam.numerator, lam.denominator
        keys = {q * x + p * y for x, y in grid}
        if len(keys) == n:
            if lam == 0:
                return ps, lam
            sheared = tuple(Point(pt.x + lam * pt.y, pt.y) for pt in ps.points)
            return PointSet(sheared), lam
    raise AssertionError("unreachable: only finitely many shears are forbidden")


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the open segments ab and cd share a point.

    Segments sharing an endpoint are rejected with SharedEndpointError;
    with the endpoints in general position the remaining test is a strict
    sign condition.
    """
    if a in (c, d) or b in (c, d):
        raise SharedEndpointError("segments share an endpoint")
    o1 = orientation(a, b, c).value
    o2 = orientation(a, b, d).value
    o3 = orientation(c, d, a).value
    o4 = orientation(c, d, b).value
    if o1 == o2 == o3 == o4 == 0:
        # all four collinear: open overlap iff the intervals intersect
        lo1, hi1 = sorted((a, b))
        lo2, hi2 = sorted((c, d))
        return max(lo1, lo2) < min(hi1, hi2)
    return o1 * o2 < 0 and o3 * o4 < 0
