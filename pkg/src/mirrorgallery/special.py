"""Constant-size solvers for funnels and edge-weakly-visible polygons.

A funnel has exactly three convex corners: the two chord endpoints and
the apex; both boundary chains between them are strictly reflex. For a
query point inside a funnel, the candidate reflecting edges that matter
are the ones touched by the four tangent contacts, so mirror selection
enumerates at most a handful of edge subsets. For polygons weakly
visible from a chord, the chord is certified as the best single
reflector, and chord - adjacent edge - chord is the three-bounce cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import CertificationFailed, NotAFunnel, NotWeaklyVisible, QueryOutside
from .geom import (
    Point,
    PointLocation,
    Region,
    Segment,
    SimplePolygon,
    region_interior_points,
    region_union_all,
    sees,
)
from .reflect import ReflectionKind, ReflectionSpec, diffuse_extend
from .visibility import visibility_polygon, weak_visibility_polygon


@dataclass(frozen=True)
class Funnel:
    polygon: SimplePolygon
    chord: int  # edge index (u -> v)
    apex: int  # vertex index
    left_chain: tuple[int, ...]  # u back to apex, clockwise walk
    right_chain: tuple[int, ...]  # v forward to apex

    @property
    def u(self) -> int:
        return self.chord

    @property
    def v(self) -> int:
        return (self.chord + 1) % self.polygon.n


@dataclass(frozen=True)
class TangentContact:
    point: Point
    chain: str  # "left" | "right"
    edges: tuple[int, ...]  # polygon edges containing the contact


@dataclass(frozen=True)
class TangentQuadruple:
    p1: TangentContact  # upper tangent contact on the left chain
    p2: TangentContact  # landing of that tangent on the right chain
    p3: TangentContact  # lower tangent contact on the right chain
    p4: TangentContact  # lower tangent contact on the left chain

    def contacts(self) -> tuple[TangentContact, ...]:
        return (self.p1, self.p2, self.p3, self.p4)


@dataclass(frozen=True)
class MirrorChoice:
    edges: frozenset[int]
    added: Fraction
    covers_all: bool


def detect_funnel(P: SimplePolygon) -> Funnel:
    """Recognize a funnel: chord edge, apex, and two strictly reflex chains."""
    convex = [i for i in range(P.n) if not P.is_reflex(i)]
    if len(convex) != 3:
        bad = convex[3] if len(convex) > 3 else None
        raise NotAFunnel(
            f"expected exactly 3 convex corners, found {len(convex)}", violating_vertex=bad
        )
    convex_set = set(convex)
    for c in convex:
        if (c + 1) % P.n in convex_set:
            u = c
            v = (c + 1) % P.n
            apex = next(i for i in convex if i not in {u, v})
            left = [u]
            i = (u - 1) % P.n
            while i != apex:
                left.append(i)
                i = (i - 1) % P.n
            left.append(apex)
            right = [v]
            i = (v + 1) % P.n
            while i != apex:
                right.append(i)
                i = (i + 1) % P.n
            right.append(apex)
            return Funnel(P, u, apex, tuple(left), tuple(right))
    raise NotAFunnel("no two convex corners are adjacent; chord side is not a single edge")


def _ray_landing(P: SimplePolygon, q: Point, through: Point) -> Point:
    """Where the sight ray from q grazing `through` stops being inside P."""
    d = through - q
    ts = {Fraction(1)}
    ray = Segment(q, through)
    for e in P.edges():
        de = e.b - e.a
        denom = d.cross(de)
        w = e.a - q
        if denom == 0:
            if d.cross(w) == 0:
                ts.add(ray.param_of(e.a))
                ts.add(ray.param_of(e.b))
            continue
        t = w.cross(de) / denom
        s = w.cross(d) / denom
        if t >= 1 and 0 <= s <= 1:
            ts.add(t)
    ts = sorted(t for t in ts if t >= 1)
    landing = through
    for t0, t1 in zip(ts, ts[1:]):
        mid = q + d * ((t0 + t1) / 2)
        if P.contains(mid) is PointLocation.EXTERIOR:
            break
        landing = q + d * t1
    return landing


def _edges_containing(P: SimplePolygon, p: Point) -> tuple[int, ...]:
    out = []
    for i in range(P.n):
        if P.edge(i).contains_point(p):
            out.append(i)
    return tuple(out)


def funnel_tangents(F: Funnel, q: Point) -> TangentQuadruple:
    P = F.polygon
    if P.contains(q) is not PointLocation.INTERIOR:
        raise QueryOutside(f"{q!r} is not interior to the funnel")
    left = F.left_chain
    right = F.right_chain

    def visible(idxs):
        return [i for i in idxs if sees(P, q, P.vertices[i])]

    vis_left = visible(left)
    vis_right = visible(right)
    # chains are ordered chord-end first, apex last
    p1_idx = max(vis_left, key=lambda i: left.index(i))
    p4_idx = min(vis_left, key=lambda i: left.index(i))
    p3_idx = min(vis_right, key=lambda i: right.index(i))
    p1 = P.vertices[p1_idx]
    p2_pt = _ray_landing(P, q, p1)
    p1c = TangentContact(p1, "left", _edges_containing(P, p1))
    p2c = TangentContact(p2_pt, "right", _edges_containing(P, p2_pt))
    p3c = TangentContact(P.vertices[p3_idx], "right", _edges_containing(P, P.vertices[p3_idx]))
    p4c = TangentContact(P.vertices[p4_idx], "left", _edges_containing(P, P.vertices[p4_idx]))
    return TangentQuadruple(p1c, p2c, p3c, p4c)


def _single_bounce_added(P: SimplePolygon, q: Point, e: int) -> Region:
    spec = ReflectionSpec(frozenset({e}), ReflectionKind.DIFFUSE, 1)
    return diffuse_extend(P, q, spec).added


def funnel_best_mirrors(F: Funnel, q: Point, *, include_chord: bool = False) -> MirrorChoice:
    """Smallest candidate-edge subset whose one-bounce extensions finish the funnel.

    Candidates are the edges containing the tangent contacts (the chord only
    when explicitly allowed). When no subset reaches full coverage the
    maximal-coverage subset of minimum size is returned instead.
    """
    P = F.polygon
    quad = funnel_tangents(F, q)
    candidates: list[int] = []
    for contact in quad.contacts():
        for e in contact.edges:
            if e == F.chord and not include_chord:
                continue
            if e not in candidates:
                candidates.append(e)
    if include_chord and F.chord not in candidates:
        candidates.append(F.chord)
    assert len(candidates) <= 8, "tangent candidate set exceeded its cap"
    candidates.sort()

    vp_region = Region.of(visibility_polygon(P, q).polygon)
    added = {e: _single_bounce_added(P, q, e) for e in candidates}
    target = P.area

    def covered_area(subset) -> Fraction:
        return region_union_all([vp_region] + [added[e] for e in subset]).area

    if vp_region.area == target:
        return MirrorChoice(frozenset(), Fraction(0), True)
    for size in range(1, len(candidates) + 1):
        for subset in combinations(candidates, size):
            if covered_area(subset) == target:
                extra = region_union_all([added[e] for e in subset]).area
                return MirrorChoice(frozenset(subset), extra, True)
    best_subset = tuple(candidates)
    best_area = covered_area(best_subset)
    for size in range(1, len(candidates) + 1):
        for subset in combinations(candidates, size):
            if covered_area(subset) == best_area:
                extra = region_union_all([added[e] for e in subset]).area
                return MirrorChoice(frozenset(subset), extra, False)
    return MirrorChoice(frozenset(), Fraction(0), False)


def _check_weakly_visible(P: SimplePolygon, chord: int):
    w = weak_visibility_polygon(P, P.edge(chord))
    if w.area != P.area:
        raise NotWeaklyVisible(f"chord edge {chord} does not weakly cover the polygon")


def wvp_best_single_edge(P: SimplePolygon, chord: int, q: Point) -> int:
    """Certify that the chord is the best one-bounce reflector for q."""
    _check_weakly_visible(P, chord)
    chord_added = _single_bounce_added(P, q, chord).area
    for e in range(P.n):
        if e == chord:
            continue
        other = _single_bounce_added(P, q, e).area
        if other > chord_added:
            raise CertificationFailed(
                f"edge {e} adds {other} which exceeds the chord's {chord_added}"
            )
    return chord


def wvp_three_reflection_cover(
    P: SimplePolygon, chord: int, *, samples: int = 20
) -> list[int]:
    """Bounce sequence chord -> adjacent edge -> chord covering the polygon.

    Certified by exact area equality of the three-bounce extension for a
    deterministic set of interior query points.
    """
    _check_weakly_visible(P, chord)
    n = P.n
    edge_au = (chord - 1) % n
    sequence = [chord, edge_au, chord]
    spec = ReflectionSpec(frozenset({chord, edge_au}), ReflectionKind.DIFFUSE, 3)
    for q in region_interior_points(Region.of(P), samples):
        ev = diffuse_extend(P, q, spec)
        if ev.direct.polygon.area + ev.added.area != P.area:
            raise CertificationFailed(
                f"three-bounce cover misses area for query point {q!r}"
            )
    return sequence
