"""Brute-force oracles, independent of the algorithms they check.

The visibility-area oracle classifies every cell of the arrangement of
the polygon's edges and the source-to-vertex sight lines: within a cell
the blocked/visible status is constant, so one closed-visibility test of
the cell midpoint decides the whole cell. Everything is exact rational
arithmetic; nothing here shares code with the angular sweep it verifies.
"""

from __future__ import annotations

from fractions import Fraction

from mirrorgallery.geom import Point, PointLocation, SimplePolygon, sees


def _line_through_box(a: Point, b: Point, box) -> tuple[Point, Point] | None:
    """Clip the infinite line a-b to an enclosing box, returning a long segment."""
    xmin, ymin, xmax, ymax = box
    d = b - a
    ts = []
    if d.x != 0:
        ts.extend([(xmin - a.x) / d.x, (xmax - a.x) / d.x])
    if d.y != 0:
        ts.extend([(ymin - a.y) / d.y, (ymax - a.y) / d.y])
    if not ts:
        return None
    lo, hi = min(ts), max(ts)
    return (a + d * lo, a + d * hi)


def visibility_area_oracle(P: SimplePolygon, q: Point) -> Fraction:
    """Exact area visible from q, via cell-by-cell classification."""
    xmin, ymin, xmax, ymax = P.bbox
    box = (xmin - 1, ymin - 1, xmax + 1, ymax + 1)
    segments: list[tuple[Point, Point]] = [(e.a, e.b) for e in P.edges()]
    for v in P.vertices:
        if v == q:
            continue
        clipped = _line_through_box(q, v, box)
        if clipped is not None:
            segments.append(clipped)

    xs = set()
    for a, b in segments:
        xs.add(a.x)
        xs.add(b.x)
    for i in range(len(segments)):
        a1, b1 = segments[i]
        d1 = b1 - a1
        for j in range(i + 1, len(segments)):
            a2, b2 = segments[j]
            d2 = b2 - a2
            denom = d1.cross(d2)
            if denom == 0:
                continue
            w = a2 - a1
            t = w.cross(d2) / denom
            u = w.cross(d1) / denom
            if 0 <= t <= 1 and 0 <= u <= 1:
                xs.add(a1.x + t * d1.x)
    xs = sorted(xs)

    area = Fraction(0)
    for xl, xr in zip(xs, xs[1:]):
        if xl == xr:
            continue
        xm = (xl + xr) / 2
        ys = []
        for a, b in segments:
            if a.x == b.x:
                continue
            lo, hi = (a.x, b.x) if a.x <= b.x else (b.x, a.x)
            if lo <= xl and hi >= xr:
                ys.append(a.y + (xm - a.x) * (b.y - a.y) / (b.x - a.x))
        ys.sort()
        for y0, y1 in zip(ys, ys[1:]):
            if y0 == y1:
                continue
            c = Point(xm, (y0 + y1) / 2)
            if P.contains(c) is not PointLocation.INTERIOR:
                continue
            if sees(P, q, c):
                area += (xr - xl) * (y1 - y0)
    return area
