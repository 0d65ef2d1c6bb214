"""First collinearity along a straight-line morph, in exact arithmetic.

Moving every point on the segment from its start to its target position,
each triple's orientation determinant is a quadratic polynomial in the
time t.  Event times are therefore roots of integer quadratics; they are
represented exactly as (p + q*sqrt(d))/r and compared by nested sign
computations, never by floating point, so near-simultaneous events are
ordered correctly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm, sqrt
from typing import Sequence

from .geometry import GeometryError, Point, PointSet, SizeMismatchError, _as_point


class ImmediateDegeneracyError(GeometryError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"triple ({i}, {j}, {k}) is collinear at t = 0")
        self.labels = (i, j, k)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_with_surd(a: int, b: int, m: int) -> int:
    """Sign of a + b*sqrt(m) for integers with m >= 0."""
    if b == 0 or m == 0:
        return _sign(a)
    sb = _sign(b)
    sa = _sign(a)
    if sa == 0 or sa == sb:
        return sb
    t = _sign(a * a - b * b * m)
    return sa if t > 0 else (sb if t < 0 else 0)


def _sign_with_two_surds(a: int, b: int, m: int, c: int, k: int) -> int:
    """Sign of a + b*sqrt(m) + c*sqrt(k) for integers with m, k >= 0."""
    if b == 0 or m == 0:
        return _sign_with_surd(a, c, k)
    if c == 0 or k == 0:
        return _sign_with_surd(a, b, m)
    t1 = _sign_with_surd(a, b, m)
    t2 = _sign(c)
    if t1 == 0:
        return t2
    if t1 == t2:
        return t1
    u = _sign_with_surd(a * a + b * b * m - c * c * k, 2 * a * b, m)
    return t1 if u > 0 else (t2 if u < 0 else 0)


@dataclass(frozen=True)
class QuadraticRoot:
    """The exact value (p + q*sqrt(d)) / r, normalized: r > 0, d >= 0
    square-free-folded (a perfect-square d collapses to a rational), and
    gcd(p, q, r) = 1."""

    p: int
    q: int
    d: int
    r: int

    @staticmethod
    def make(p: int, q: int, d: int, r: int) -> "QuadraticRoot":
        if r == 0:
            raise ZeroDivisionError("root denominator is zero")
        if d < 0:
            raise ValueError("negative discriminant")
        if r < 0:
            p, q, r = -p, -q, -r
        if q == 0:
            d = 0
        elif d == 0:
            q = 0
        else:
            s = isqrt(d)
            if s * s == d:
                p, q, d = p + q * s, 0, 0
        g = gcd(gcd(abs(p), abs(q)), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        return QuadraticRoot(p, q, d, r)

    @staticmethod
    def from_fraction(f: Fraction) -> "QuadraticRoot":
        return QuadraticRoot.make(f.numerator, 0, 0, f.denominator)

    def as_fraction(self) -> Fraction | None:
        return Fraction(self.p, self.r) if self.q == 0 else None

    def is_rational(self) -> bool:
        return self.q == 0

    def __float__(self) -> float:
        return (self.p + self.q * sqrt(self.d)) / self.r

    def _cmp(self, other) -> int:
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, Fraction):
            return _sign_with_surd(
                self.p * other.denominator - other.numerator * self.r,
                self.q * other.denominator, self.d)
        if isinstance(other, QuadraticRoot):
            return _sign_with_two_surds(
                self.p * other.r - other.p * self.r,
                self.q * other.r, self.d,
                -other.q * self.r, other.d)
        return NotImplemented

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def equals(self, other) -> bool:
        return self._cmp(other) == 0

    def __str__(self) -> str:
        if self.q == 0:
            return str(Fraction(self.p, self.r))
        return f"({self.p} + {self.q}*sqrt({self.d})) / {self.r}"


def _sign_linear_at(alpha: int, beta: int, root: QuadraticRoot) -> int:
    """Sign of alpha + beta * root."""
    return _sign_with_surd(alpha * root.r + beta * root.p, beta * root.q, root.d)


def _quadratic_roots_in_unit_interval(c2: int, c1: int, c0: int) -> list[QuadraticRoot]:
    """Real roots of c2 t^2 + c1 t + c0 lying in (0, 1]."""
    roots: list[QuadraticRoot] = []
    if c2 == 0:
        if c1 != 0:
            roots.append(QuadraticRoot.make(-c0, 0, 0, c1))
    else:
        disc = c1 * c1 - 4 * c2 * c0
        if disc < 0:
            return []
        roots.append(QuadraticRoot.make(-c1, 1, disc, 2 * c2))
        if disc > 0:
            roots.append(QuadraticRoot.make(-c1, -1, disc, 2 * c2))
    zero, one = Fraction(0), Fraction(1)
    return [t for t in roots if t._cmp(zero) > 0 and t._cmp(one) <= 0]


@dataclass(frozen=True)
class MorphEvent:
    """The first collinearity event of a linear morph.

    ``triple`` is (a, b, c); when ``between`` is true, c lies strictly
    inside segment ab at the event time.
    """

    time: QuadraticRoot
    triple: tuple[int, int, int]
    between: bool


def _scaled_coords(start: Sequence[Point], target: Sequence[Point]):
    scale = lcm(1, *(d for p in (*start, *target)
                     for d in (p.x.denominator, p.y.denominator)))

    def grid(pts):
        return [(int(p.x * scale), int(p.y * scale)) for p in pts]

    return grid(start), grid(target)


def first_collinearity_morph(ps0: PointSet, target: Sequence) -> MorphEvent | None:
    """Earliest time in (0, 1] at which any triple becomes collinear when
    every point moves linearly from ps0 to its target position.

    Returns None when no triple degenerates.  Sign evaluations at the
    event time run in the quadratic extension containing the root.
    """
    tgt = [_as_point(p) for p in target]
    if len(tgt) != len(ps0):
        raise SizeMismatchError(f"sizes differ: {len(ps0)} vs {len(tgt)}")
    g0, g1 = _scaled_coords(ps0.points, tgt)
    n = len(g0)

    best: QuadraticRoot | None = None
    best_triple: tuple[int, int, int] | None = None
    best_coeffs: tuple[int, int, int] | None = None
    for i in range(n):
        x0i, y0i = g0[i]
        dxi, dyi = g1[i][0] - x0i, g1[i][1] - y0i
        for j in range(i + 1, n):
            ax = g0[j][0] - x0i
            ay = g0[j][1] - y0i
            dax = (g1[j][0] - g0[j][0]) - dxi
            day = (g1[j][1] - g0[j][1]) - dyi
            for k in range(j + 1, n):
                bx = g0[k][0] - x0i
                by = g0[k][1] - y0i
                dbx = (g1[k][0] - g0[k][0]) - dxi
                dby = (g1[k][1] - g0[k][1]) - dyi
                c0 = ax * by - ay * bx
                if c0 == 0:
                    raise ImmediateDegeneracyError(i, j, k)
                c1 = ax * dby - ay * dbx + dax * by - day * bx
                c2 = dax * dby - day * dbx
                for root in _quadratic_roots_in_unit_interval(c2, c1, c0):
                    if best is None or root._cmp(best) < 0:
                        best = root
                        best_triple = (i, j, k)
                        best_coeffs = (c2, c1, c0)
    if best is None:
        return None
    return _classify_event(g0, g1, best, best_triple, best_coeffs)


def _eval_quadratic_sign(e2: int, e1: int, e0: int, root: QuadraticRoot,
                         coeffs: tuple[int, int, int]) -> int:
    """Sign of e2 t^2 + e1 t + e0 at the root of c2 t^2 + c1 t + c0.

    The root's own relation substitutes t^2 = -(c1 t + c0)/c2, reducing
    the evaluation to a linear sign computation in the extension field.
    """
    c2, c1, c0 = coeffs
    if root.is_rational():
        t = root.as_fraction()
        return _sign(e2 * t * t + e1 * t + e0)
    alpha = e0 * c2 - e2 * c0
    beta = e1 * c2 - e2 * c1
    return _sign_linear_at(alpha, beta, root) * _sign(c2)


def _classify_event(g0, g1, root: QuadraticRoot, triple: tuple[int, int, int],
                    coeffs: tuple[int, int, int]) -> MorphEvent:
    """Pick the canonical (a, b, c): c is the strict middle point at the
    event time when one exists; otherwise the triple stays ascending and
    ``between`` is false."""
    def coord_polys(i: int):
        (x0, y0), (x1, y1) = g0[i], g1[i]
        return (x0, x1 - x0), (y0, y1 - y0)  # (const, slope) per axis

    for mid in triple:
        u, v = (t for t in triple if t != mid)
        (mx, mdx), (my, mdy) = coord_polys(mid)
        (ux, udx), (uy, udy) = coord_polys(u)
        (vx, vdx), (vy, vdy) = coord_polys(v)
        # dot((P_u - P_m), (P_v - P_m)) as a quadratic in t
        a0, a1 = ux - mx, udx - mdx
        b0, b1 = vx - mx, vdx - mdx
        c0x, c1x, c2x = a0 * b0, a0 * b1 + a1 * b0, a1 * b1
        a0, a1 = uy - my, udy - mdy
        b0, b1 = vy - my, vdy - mdy
        e0 = c0x + a0 * b0
        e1 = c1x + a0 * b1 + a1 * b0
        e2 = c2x + a1 * b1
        if _eval_quadratic_sign(e2, e1, e0, root, coeffs) < 0:
            a, b = sorted(t for t in triple if t != mid)
            return MorphEvent(root, (a, b, mid), True)
    return MorphEvent(root, triple, False)
