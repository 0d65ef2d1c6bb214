from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exitgraph import (
    CollinearTripleError,
    DegenerateLineError,
    DuplicatePointError,
    OnLineError,
    Orientation,
    SharedEndpointError,
    TooFewPointsError,
    certify_general_position,
    convex_hull,
    line_separates,
    orientation,
    point,
    segments_cross,
    shear_to_generic,
)
from conftest import random_sets

P = point


def test_orientation_basis_cases():
    assert orientation(P(0, 0), P(1, 0), P(0, 1)) is Orientation.COUNTERCLOCKWISE
    assert orientation(P(0, 0), P(0, 1), P(1, 0)) is Orientation.CLOCKWISE
    assert orientation(P(0, 0), P(1, 1), P(2, 2)) is Orientation.COLLINEAR


coords = st.integers(min_value=-1000, max_value=1000)
points = st.builds(lambda x, y: P(x, y), coords, coords)


@given(points, points, points)
def test_orientation_antisymmetric_under_swaps(p, q, r):
    o = orientation(p, q, r)
    for swapped in ((q, p, r), (p, r, q), (r, q, p)):
        assert orientation(*swapped).value == -o.value


@given(points, points, points, coords, coords,
       st.integers(min_value=1, max_value=50),
       st.fractions(min_value=-3, max_value=3, max_denominator=7))
def test_orientation_invariant_under_affine_maps(p, q, r, tx, ty, scale, lam):
    o = orientation(p, q, r)

    def translate(pt):
        return P(pt.x + tx, pt.y + ty)

    def rescale(pt):
        return P(pt.x * scale, pt.y * scale)

    def shear(pt):
        return P(pt.x + lam * pt.y, pt.y)

    for f in (translate, rescale, shear):
        assert orientation(f(p), f(q), f(r)) is o


def test_certify_square_and_six_point_set(six_points):
    certify_general_position([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert len(six_points) == 6  # the fixture certifies on construction


def test_certify_reports_first_collinear_triple():
    with pytest.raises(CollinearTripleError) as err:
        certify_general_position([(0, 0), (1, 1), (2, 2), (5, 0)])
    assert err.value.labels == (0, 1, 2)


def test_certify_reports_first_duplicate():
    with pytest.raises(DuplicatePointError) as err:
        certify_general_position([(0, 0), (1, 2), (0, 0), (1, 2)])
    assert err.value.labels == (0, 2)


def test_hull_square_and_triangle(unit_square, triangle):
    assert convex_hull(unit_square) == [0, 1, 2, 3]
    assert convex_hull(triangle) == [0, 1, 2]


def test_hull_six_point_set(six_points):
    hull = convex_hull(six_points)
    assert hull == [2, 3, 1, 0]  # CCW from the lexicographically smallest
    assert set(range(6)) - set(hull) == {4, 5}


def test_hull_requires_three_points():
    with pytest.raises(TooFewPointsError):
        convex_hull(certify_general_position([(0, 0), (1, 0)]))


def test_hull_is_convex_and_contains_interior_points():
    for ps in random_sets(25, 4, 11, seed=101):
        hull = convex_hull(ps)
        h = len(hull)
        for t in range(h):
            a, b, c = hull[t], hull[(t + 1) % h], hull[(t + 2) % h]
            assert orientation(ps[a], ps[b], ps[c]) is Orientation.COUNTERCLOCKWISE
        inner = set(ps.labels()) - set(hull)
        for i in inner:
            for t in range(h):
                a, b = hull[t], hull[(t + 1) % h]
                assert orientation(ps[a], ps[b], ps[i]) is Orientation.COUNTERCLOCKWISE


def test_line_separates_cases():
    assert line_separates(P(0, 0), P(1, 0), P(0, 1), P(0, -1)) is True
    assert line_separates(P(0, 0), P(1, 0), P(0, 1), P(2, 1)) is False
    with pytest.raises(OnLineError):
        line_separates(P(0, 0), P(1, 0), P(2, 0), P(0, 1))
    with pytest.raises(DegenerateLineError):
        line_separates(P(1, 1), P(1, 1), P(0, 0), P(2, 2))


def test_shear_leaves_distinct_x_untouched(triangle):
    sheared, lam = shear_to_generic(triangle)
    assert lam == 0
    assert sheared.points == triangle.points


def test_shear_square_picks_one_half(unit_square):
    sheared, lam = shear_to_generic(unit_square)
    assert lam == Fraction(1, 2)
    assert [tuple(p) for p in sheared.points] == [
        (0, 0), (1, 0), (Fraction(3, 2), 1), (Fraction(1, 2), 1)]


def test_shear_preserves_all_triple_orientations():
    for ps in random_sets(20, 3, 10, seed=202):
        sheared, _ = shear_to_generic(ps)
        certify_general_position(sheared.points)
        n = len(ps)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    assert orientation(ps[i], ps[j], ps[k]) is orientation(
                        sheared[i], sheared[j], sheared[k])
        xs = {p.x for p in sheared.points}
        assert len(xs) == n


def test_segments_cross_cases():
    assert segments_cross(P(0, 0), P(1, 1), P(1, 0), P(0, 1)) is True
    assert segments_cross(P(0, 0), P(1, 0), P(0, 1), P(1, 1)) is False
    assert segments_cross(P(0, 0), P(2, 0), P(1, 1), P(1, 2)) is False
    with pytest.raises(SharedEndpointError):
        segments_cross(P(0, 0), P(1, 1), P(0, 0), P(1, 0))
