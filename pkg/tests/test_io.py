import json
import re
from fractions import Fraction

import pytest

from exitgraph import (
    CollinearTripleError,
    PointSyntaxError,
    build_report,
    certify_general_position,
    exit_edges_dual,
    parse_point_list,
    parse_points,
    point,
    render_json,
    render_svg,
    serialize_points,
    stats_report,
)
from exitgraph.svg import format_number
from conftest import random_sets


def test_parse_triangle():
    ps = parse_points("0 0\n4 0\n2 4\n")
    assert [tuple(p) for p in ps.points] == [(0, 0), (4, 0), (2, 4)]


def test_parse_rationals_comments_blanks():
    text = "# header\n-3/5 2/7\n\n1 1  # trailing note\n0 3\n"
    ps = parse_points(text)
    assert ps[0] == point(Fraction(-3, 5), Fraction(2, 7))
    assert len(ps) == 3


def test_parse_syntax_error_carries_line_number():
    with pytest.raises(PointSyntaxError) as err:
        parse_points("0 0\n1 1 1\n")
    assert err.value.line_number == 2


def test_parse_certification_failure():
    with pytest.raises(CollinearTripleError) as err:
        parse_points("0 0\n1 1\n2 2\n9 0\n")
    assert err.value.labels == (0, 1, 2)


def test_parse_point_list_allows_degenerate():
    pts = parse_point_list("0 0\n1 1\n2 2\n")
    assert len(pts) == 3


def test_round_trip_identity(six_points):
    assert parse_points(serialize_points(six_points)) == six_points
    for ps in random_sets(10, 3, 9, seed=1616):
        text = serialize_points(ps)
        assert parse_points(text) == ps
        assert serialize_points(parse_points(text)) == text


def test_round_trip_rational_coordinates(six_points):
    ps = certify_general_position(
        [(Fraction(-3, 5), Fraction(2, 7)), (1, 1), (0, 3)])
    assert parse_points(serialize_points(ps)) == ps
    assert serialize_points(ps) == "-3/5 2/7\n1 1\n0 3\n"
    from exitgraph import shear_to_generic

    sheared, lam = shear_to_generic(six_points)
    assert lam == Fraction(1, 2)  # x collisions force a non-integer shear
    assert parse_points(serialize_points(sheared)) == sheared


def test_format_number_significant_digits():
    assert format_number(Fraction(1, 3)) == "0.33333333333333333333"
    assert format_number(Fraction(-1, 2)) == "-0.5"
    assert format_number(Fraction(0)) == "0"
    assert format_number(Fraction(10, 2)) == "5"


def test_render_is_deterministic(unit_square, six_points):
    for ps in (unit_square, six_points):
        for mode in ("primal", "dual"):
            assert render_svg(ps, mode) == render_svg(ps, mode)


def test_render_rejects_unknown_mode(unit_square):
    with pytest.raises(ValueError):
        render_svg(unit_square, "isometric")


def test_primal_square_has_two_black_segments(unit_square):
    svg = render_svg(unit_square, "primal")
    assert svg.count('class="exit-edge"') == 2
    assert svg.count('class="point"') == 4
    assert svg.count('class="hull"') == 4
    assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg" version="1.1"')


def test_primal_triangle_has_three_segments(triangle):
    svg = render_svg(triangle, "primal")
    assert svg.count('class="exit-edge"') == 3
    assert svg.count('class="label"') == 3


def test_dual_square_shading(unit_square):
    svg = render_svg(unit_square, "dual")
    cells = set(re.findall(r'data-cell="([^"]+)"', svg))
    assert len(cells) == 4
    assert svg.count('class="exit-vertex"') == 2
    assert svg.count('class="dual-line"') == 4


def test_dual_shading_polygons_respect_the_arrangement():
    # every rendered piece must be a subset of one cell: no dual line may
    # strictly separate its vertices, and each piece stays inside its
    # cell's three bounding halfplanes
    from exitgraph import dualize, shear_to_generic
    from exitgraph.svg import dual_cell_polygons

    for ps in random_sets(10, 4, 9, seed=1717):
        sheared, _ = shear_to_generic(ps)
        lines = {l.source: l for l in dualize(sheared)}
        _, _, pieces = dual_cell_polygons(ps)
        tris = {id(t) for t, _, _ in pieces}
        assert len(pieces) >= len(tris)
        for tri, _tag, poly in pieces:
            assert len(poly) >= 3
            for src, line in lines.items():
                signs = {(v[1] - line.y_at(v[0]) > 0) - (v[1] - line.y_at(v[0]) < 0)
                         for v in poly}
                assert not signs >= {-1, 1}, (
                    f"line {src} cuts a rendered piece of cell {tri.lines}")


def test_report_document(unit_square):
    edges = exit_edges_dual(unit_square)
    doc = build_report(unit_square, edges, stats_report(unit_square))
    assert doc["schema"] == 1
    assert doc["n"] == 4
    assert doc["points"][0] == ["0", "0"]
    assert doc["exit_edges"] == [
        {"endpoints": [0, 2], "witnesses": [1, 3]},
        {"endpoints": [1, 3], "witnesses": [0, 2]},
    ]
    assert doc["stats"]["hourglasses"] == 2
    assert doc["stats"]["lower_bound"] == "1"
    assert all(doc["verdicts"].values())
    parsed = json.loads(render_json(doc))
    assert parsed == doc


def test_report_without_stats(triangle):
    doc = build_report(triangle, exit_edges_dual(triangle))
    assert "stats" not in doc and "verdicts" not in doc
    assert len(doc["exit_edges"]) == 3
