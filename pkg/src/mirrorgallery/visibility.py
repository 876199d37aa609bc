"""Direct (reflection-free) visibility inside a simple polygon.

The visibility polygon is computed with an exact angular wedge sweep:
directions from the source to every vertex split the view circle into
wedges, each wedge has a single nearest edge, and the output ring is the
fan of wedge hits. Weak visibility from a segment is assembled from the
visibility polygons of the segment endpoints plus, for every reflex
vertex, the cone of sight lines that pivot through it from the visible
part of the segment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd

from .errors import QueryOutsidePolygon, SegmentOutsidePolygon
from .geom import (
    Orientation,
    Point,
    PointLocation,
    Region,
    Segment,
    SimplePolygon,
    merge_intervals,
    orientation,
    region_clip_halfplane,
    region_union_all,
    segment_parts_inside,
    sees,
)


@dataclass(frozen=True)
class VisibilityPolygon:
    polygon: SimplePolygon
    windows: tuple[Segment, ...]
    source: Point


_VP_CACHE: dict[tuple[SimplePolygon, Point], VisibilityPolygon] = {}


def _primitive_direction(d: Point) -> tuple[int, int]:
    """Reduce a rational direction vector to a canonical integer vector."""
    nx, dx = d.x.numerator, d.x.denominator
    ny, dy = d.y.numerator, d.y.denominator
    ax = nx * dy
    ay = ny * dx
    g = gcd(abs(ax), abs(ay))
    return (ax // g, ay // g)


def _dir_half(d: tuple[int, int]) -> int:
    x, y = d
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _dir_cmp(d1: tuple[int, int], d2: tuple[int, int]) -> int:
    h1, h2 = _dir_half(d1), _dir_half(d2)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    cr = d1[0] * d2[1] - d1[1] * d2[0]
    if cr > 0:
        return -1
    if cr < 0:
        return 1
    return 0


def _first_hit(P: SimplePolygon, origin: Point, direction: Point):
    """Nearest boundary crossing of the open ray origin + t*direction, t > 0.

    Only called with rays that pass through no vertex, so every hit is a
    proper crossing of a single edge. Returns (t, edge_index) or None.
    """
    best_t = None
    best_i = None
    for i in range(P.n):
        a = P.vertices[i]
        b = P.vertices[(i + 1) % P.n]
        e = b - a
        denom = direction.cross(e)
        if denom == 0:
            continue
        w = a - origin
        t = w.cross(e) / denom
        if t <= 0:
            continue
        s = w.cross(direction) / denom
        if s < 0 or s > 1:
            continue
        if best_t is None or t < best_t:
            best_t = t
            best_i = i
    if best_t is None:
        return None
    return best_t, best_i


def _ray_edge_point(origin: Point, direction: Point, a: Point, b: Point) -> Point:
    e = b - a
    denom = direction.cross(e)
    t = (a - origin).cross(e) / denom
    return origin + direction * t


def visibility_polygon(P: SimplePolygon, q: Point) -> VisibilityPolygon:
    """All points of the closed polygon visible from q, as a star-shaped ring."""
    cached = _VP_CACHE.get((P, q))
    if cached is not None:
        return cached
    if P.contains(q) is PointLocation.EXTERIOR:
        raise QueryOutsidePolygon(f"{q!r} is outside the polygon")

    dirs = sorted(
        {_primitive_direction(v - q) for v in P.vertices if v != q},
        key=cmp_to_key(_dir_cmp),
    )
    k = len(dirs)
    arcs = []
    for i in range(k):
        da = dirs[i]
        db = dirs[(i + 1) % k]
        cr = da[0] * db[1] - da[1] * db[0]
        if cr > 0:
            mid = (da[0] + db[0], da[1] + db[1])
        elif cr < 0:
            # wedge spans more than a half turn; the sum points into the
            # complementary cone, so its negation is interior to the wedge
            mid = (-da[0] - db[0], -da[1] - db[1])
        else:
            mid = (-da[1], da[0])  # opposite directions: bisect with a quarter turn
        mid_p = Point(Fraction(mid[0]), Fraction(mid[1]))
        hit = _first_hit(P, q, mid_p)
        if hit is None:
            arcs.append(None)
            continue
        t_hit, ei = hit
        # the wedge is lit only when the sight segment runs through the
        # interior; from a boundary source a wedge can point outside and
        # the ray re-enters through a far wall
        probe = q + mid_p * (t_hit / 2)
        if P.contains(probe) is PointLocation.EXTERIOR:
            arcs.append(None)
            continue
        a = P.vertices[ei]
        b = P.vertices[(ei + 1) % P.n]
        pa = _ray_edge_point(q, Point(Fraction(da[0]), Fraction(da[1])), a, b)
        pb = _ray_edge_point(q, Point(Fraction(db[0]), Fraction(db[1])), a, b)
        arcs.append((pa, pb))

    ring: list[Point] = []

    def push(p: Point):
        if not ring or ring[-1] != p:
            ring.append(p)

    for i in range(k):
        arc = arcs[i]
        if arc is None:
            push(q)
        else:
            push(arc[0])
            push(arc[1])
    if len(ring) > 1 and ring[0] == ring[-1]:
        ring.pop()
    poly = SimplePolygon.unchecked(ring)
    vp = VisibilityPolygon(poly, tuple(_windows(poly, P)), q)
    _VP_CACHE[(P, q)] = vp
    return vp


def _windows(vp_poly: SimplePolygon, P: SimplePolygon) -> list[Segment]:
    """Boundary pieces of the visibility polygon not lying on the host boundary."""
    wins: list[Segment] = []
    p_edges = P.edges()
    for ve in vp_poly.edges():
        covered: list[tuple[Fraction, Fraction]] = []
        for pe in p_edges:
            if (
                orientation(pe.a, pe.b, ve.a) is Orientation.COLLINEAR
                and orientation(pe.a, pe.b, ve.b) is Orientation.COLLINEAR
            ):
                t0 = ve.param_of(pe.a)
                t1 = ve.param_of(pe.b)
                lo, hi = (t0, t1) if t0 <= t1 else (t1, t0)
                lo = max(lo, Fraction(0))
                hi = min(hi, Fraction(1))
                if lo < hi:
                    covered.append((lo, hi))
        covered = merge_intervals(covered)
        t = Fraction(0)
        for lo, hi in covered:
            if t < lo:
                wins.append(Segment(ve.point_at(t), ve.point_at(lo)))
            t = max(t, hi)
        if t < 1:
            wins.append(Segment(ve.point_at(t), ve.point_at(1)))
    return wins


def windows_of(vp: VisibilityPolygon, P: SimplePolygon) -> list[Segment]:
    """Recompute the window list of a visibility polygon against its host."""
    return _windows(vp.polygon, P)


def weak_visibility_polygon(P: SimplePolygon, s: Segment) -> Region:
    """Closed region of points seeing at least one point of the segment.

    Composed of the endpoint visibility polygons plus the pivot cones of
    every reflex vertex over its visible subsegments of s; the union is a
    single simple polygon for well-behaved inputs.
    """
    if not sees(P, s.a, s.b):
        raise SegmentOutsidePolygon(f"{s!r} is not contained in the polygon")
    pieces = [
        Region.of(visibility_polygon(P, s.a).polygon),
        Region.of(visibility_polygon(P, s.b).polygon),
    ]
    for i in range(P.n):
        if not P.is_reflex(i):
            continue
        v = P.vertices[i]
        if orientation(s.a, s.b, v) is Orientation.COLLINEAR:
            continue
        vp = visibility_polygon(P, v)
        for sigma in segment_parts_inside(s, [vp.polygon]):
            d1 = v - sigma.a
            d2 = v - sigma.b
            sign = d1.cross(d2)
            if sign == 0:
                continue
            piece = Region.of(vp.polygon)
            if sign > 0:
                piece = region_clip_halfplane(piece, v, v + d1)
                piece = region_clip_halfplane(piece, v + d2, v)
            else:
                piece = region_clip_halfplane(piece, v + d1, v)
                piece = region_clip_halfplane(piece, v, v + d2)
            if not piece.is_empty:
                pieces.append(piece)
    return region_union_all(pieces)
