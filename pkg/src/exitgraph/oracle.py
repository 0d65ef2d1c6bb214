"""Primal-side exit-edge oracles.

Two independent reference computations of the exit-edge set:

* the double-wedge definition, applied triple by triple (O(n^4)), and
* the empty-quadrilateral characterization on 4-holes.

Both are deliberately simple; they serve as ground truth for the
quadratic dual-arrangement path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import GeometryError, PointSet, TooFewPointsError, convex_hull


class LabelOutOfRangeError(GeometryError):
    pass


class NonDistinctLabelsError(GeometryError):
    pass


@dataclass(frozen=True, order=True)
class ExitEdge:
    """An exit edge: endpoint labels plus its one or two witnesses."""

    endpoints: tuple[int, int]
    witnesses: frozenset[int]

    def __post_init__(self):
        a, b = self.endpoints
        if a >= b:
            raise ValueError("endpoints must be sorted ascending")
        if not 1 <= len(self.witnesses) <= 2:
            raise ValueError("an exit edge has one or two witnesses")
        if a in self.witnesses or b in self.witnesses:
            raise ValueError("witnesses must be disjoint from endpoints")

    def __str__(self) -> str:
        a, b = self.endpoints
        ws = ",".join(str(w) for w in sorted(self.witnesses))
        return f"{{{a},{b}}} witnesses {{{ws}}}"


@dataclass(frozen=True)
class FourHole:
    """An empty simple quadrilateral, vertices in counterclockwise order."""

    vertices: tuple[int, int, int, int]
    convex: bool
    reflex_vertex: int | None

    def has_side(self, a: int, b: int) -> bool:
        v = self.vertices
        for i in range(4):
            if {v[i], v[(i + 1) % 4]} == {a, b}:
                return True
        return False

    def directed_sides(self) -> list[tuple[int, int]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % 4]) for i in range(4)]


def _check_labels(ps: PointSet, labels: tuple[int, ...]):
    n = len(ps)
    for lab in labels:
        if not 0 <= lab < n:
            raise LabelOutOfRangeError(f"label {lab} outside 0..{n - 1}")
    if len(set(labels)) != len(labels):
        raise NonDistinctLabelsError(f"labels {labels} are not pairwise distinct")


def is_exit_edge_with_witness(ps: PointSet, a: int, b: int, c: int) -> bool:
    """Double-wedge test: no point of S sees the segment ab shielded from c.

    True iff for every other p, neither line(a, p) separates b from c nor
    line(b, p) separates a from c.
    """
    _check_labels(ps, (a, b, c))
    grid = ps.int_coords
    (xa, ya), (xb, yb), (xc, yc) = grid[a], grid[b], grid[c]
    for p in range(len(grid)):
        if p == a or p == b or p == c:
            continue
        xp, yp = grid[p]
        # line through a and p against {b, c}
        dx, dy = xp - xa, yp - ya
        sb = dx * (yb - ya) - dy * (xb - xa)
        sc = dx * (yc - ya) - dy * (xc - xa)
        if (sb > 0 > sc) or (sb < 0 < sc):
            return False
        # line through b and p against {a, c}
        dx, dy = xp - xb, yp - yb
        sa = dx * (ya - yb) - dy * (xa - xb)
        sc = dx * (yc - yb) - dy * (xc - xb)
        if (sa > 0 > sc) or (sa < 0 < sc):
            return False
    return True


def exit_edges_bruteforce(ps: PointSet) -> tuple[ExitEdge, ...]:
    """All exit edges with their witness sets, by exhausting Definition
    triples.  Deterministic: sorted by endpoint pair."""
    n = len(ps)
    if n < 3:
        raise TooFewPointsError("exit edges need at least 3 points")
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            witnesses = [
                c for c in range(n)
                if c != a and c != b and is_exit_edge_with_witness(ps, a, b, c)
            ]
            if witnesses:
                edges.append(ExitEdge((a, b), frozenset(witnesses)))
    return tuple(edges)


def witness_side(ps: PointSet, a: int, b: int, c: int) -> int:
    """+1 if witness c lies left of the directed edge a->b, -1 if right."""
    _check_labels(ps, (a, b, c))
    (xa, ya), (xb, yb), (xc, yc) = (ps.int_coords[i] for i in (a, b, c))
    s = (xb - xa) * (yc - ya) - (yb - ya) * (xc - xa)
    if s == 0:
        raise NonDistinctLabelsError("witness collinear with endpoints")
    return 1 if s > 0 else -1


def _empty_triangles(ps: PointSet) -> set[tuple[int, int, int]]:
    grid = ps.int_coords
    n = len(grid)
    empty = set()
    for i in range(n):
        xi, yi = grid[i]
        for j in range(i + 1, n):
            xj, yj = grid[j]
            dx1, dy1 = xj - xi, yj - yi
            for k in range(j + 1, n):
                xk, yk = grid[k]
                dx2, dy2 = xk - xi, yk - yi
                ok = True
                for p in range(n):
                    if p == i or p == j or p == k:
                        continue
                    xp, yp = grid[p]
                    s1 = dx1 * (yp - yi) - dy1 * (xp - xi)
                    s2 = (xk - xj) * (yp - yj) - (yk - yj) * (xp - xj)
                    s3 = -dx2 * (yp - yi) + dy2 * (xp - xi)
                    if (s1 > 0 and s2 > 0 and s3 > 0) or (s1 < 0 and s2 < 0 and s3 < 0):
                        ok = False
                        break
                if ok:
                    empty.add((i, j, k))
    return empty


def _quad_cycle(ps: PointSet, cycle: tuple[int, int, int, int],
                empty: set[tuple[int, int, int]]) -> FourHole | None:
    """FourHole for the cycle if it is a simple empty quadrilateral.

    A 4-cycle is simple and empty iff one of its diagonals splits it into
    two empty triangles with the remaining vertices on opposite sides.
    """
    grid = ps.int_coords
    p0, p1, p2, p3 = cycle

    def ori(i, j, k):
        (xi, yi), (xj, yj), (xk, yk) = grid[i], grid[j], grid[k]
        v = (xj - xi) * (yk - yi) - (yj - yi) * (xk - xi)
        return (v > 0) - (v < 0)

    def split_ok(d0, d1, u, v):
        if ori(d0, d1, u) * ori(d0, d1, v) >= 0:
            return False
        t1 = tuple(sorted((d0, d1, u)))
        t2 = tuple(sorted((d0, d1, v)))
        return t1 in empty and t2 in empty

    if not (split_ok(p0, p2, p1, p3) or split_ok(p1, p3, p0, p2)):
        return None
    turns = [ori(cycle[i - 1], cycle[i], cycle[(i + 1) % 4]) for i in range(4)]
    area2 = 0
    for i in range(4):
        (x1, y1), (x2, y2) = grid[cycle[i]], grid[cycle[(i + 1) % 4]]
        area2 += x1 * y2 - x2 * y1
    verts = cycle
    if area2 < 0:
        verts = (cycle[0], cycle[3], cycle[2], cycle[1])
        turns = [-t for t in turns]
        turns = [turns[0], turns[3], turns[2], turns[1]]
    reflex = [verts[i] for i in range(4) if turns[i] < 0]
    start = verts.index(min(verts))
    verts = verts[start:] + verts[:start]
    return FourHole(verts, convex=not reflex, reflex_vertex=reflex[0] if reflex else None)


def enumerate_four_holes(ps: PointSet) -> list[FourHole]:
    """Every 4-hole of the point set, each reported once (counterclockwise,
    rotated to start at its smallest label)."""
    n = len(ps)
    empty = _empty_triangles(ps)
    holes = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    for cycle in ((i, j, k, l), (i, k, j, l), (i, j, l, k)):
                        hole = _quad_cycle(ps, cycle, empty)
                        if hole is not None:
                            holes.append(hole)
    holes.sort(key=lambda h: h.vertices)
    return holes


def four_holes_at_edge(ps: PointSet, a: int, b: int) -> list[FourHole]:
    """All 4-holes having segment ab as a side."""
    _check_labels(ps, (a, b))
    return [h for h in enumerate_four_holes(ps) if h.has_side(a, b)]


def _hull_edge_set(ps: PointSet) -> set[tuple[int, int]]:
    hull = convex_hull(ps)
    return {
        tuple(sorted((hull[i], hull[(i + 1) % len(hull)])))
        for i in range(len(hull))
    }


def exit_edges_via_holes(ps: PointSet) -> frozenset[tuple[int, int]]:
    """Endpoint pairs of exit edges via the 4-hole characterization.

    A pair is *not* an exit edge iff: extremal case, it is a side of some
    convex 4-hole; internal case, there are 4-holes on both of its sides
    whose reflex angles (if any) touch the pair.  Witnesses are not
    produced by this method.
    """
    n = len(ps)
    if n < 3:
        raise TooFewPointsError("exit edges need at least 3 points")
    hull_edges = _hull_edge_set(ps)
    holes = enumerate_four_holes(ps)

    convex_sides: set[tuple[int, int]] = set()
    good_directed: set[tuple[int, int]] = set()
    for h in holes:
        for (u, v) in h.directed_sides():
            if h.convex:
                convex_sides.add((u, v) if u < v else (v, u))
                good_directed.add((u, v))
            elif h.reflex_vertex in (u, v):
                good_directed.add((u, v))

    pairs = []
    for a in range(n):
        for b in range(a + 1, n):
            if (a, b) in hull_edges:
                excluded = (a, b) in convex_sides
            else:
                excluded = (a, b) in good_directed and (b, a) in good_directed
            if not excluded:
                pairs.append((a, b))
    return frozenset(pairs)


def internal_edge_has_two_sided_support(ps: PointSet, edge: ExitEdge) -> bool:
    """Diagnostic for an internal exit edge: it has a witness on each side,
    or it is incident to a 4-hole on at least one side."""
    a, b = edge.endpoints
    if tuple(sorted((a, b))) in _hull_edge_set(ps):
        raise ValueError("diagnostic applies to internal edges only")
    sides = {witness_side(ps, a, b, c) for c in edge.witnesses}
    if sides == {-1, 1}:
        return True
    return bool(four_holes_at_edge(ps, a, b))
