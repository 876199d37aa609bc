"""Reflection-aware vertex guarding of simple polygons.

The decomposition refines the polygon by the windows of all vertex
visibility polygons (plus, for positive bounce budgets, chords joining
co-visible boundary points contributed by extended visibility), yielding
convex cells on which vertex visibility is combinatorially constant.
Guarding is then exact set cover over the cells: greedy with
deterministic tie-breaking, brute-force optimal for small instances, and
a spanning-tree class reduction whose output is certified by an explicit
reflection-coverage check instead of being trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .errors import (
    BudgetExceeded,
    CoverageCertificationFailed,
    GraphDisconnected,
    TooLarge,
)
from .geom import (
    Point,
    PointLocation,
    Region,
    Segment,
    SimplePolygon,
    merge_region,
    overlay,
    region_union,
    sees,
)
from .reflect import extend_all_edges
from .visibility import visibility_polygon


class GuardKind(Enum):
    DIFFUSE = "diffuse"
    SPECULAR = "specular"


@dataclass(frozen=True)
class CellDecomposition:
    level: int
    cells: tuple[SimplePolygon, ...]
    generating_segments: tuple[Segment, ...]

    def sample_points(self, i: int) -> tuple[Point, Point, Point]:
        """Centroid plus two points along the centroid-to-vertex median."""
        cell = self.cells[i]
        verts = cell.vertices
        cx = sum((v.x for v in verts), Fraction(0)) / len(verts)
        cy = sum((v.y for v in verts), Fraction(0)) / len(verts)
        c = Point(cx, cy)
        v0 = verts[0]
        quarter = Point(c.x + (v0.x - c.x) / 4, c.y + (v0.y - c.y) / 4)
        three_q = Point(c.x + 3 * (v0.x - c.x) / 4, c.y + 3 * (v0.y - c.y) / 4)
        return (c, quarter, three_q)


@dataclass(frozen=True)
class GuardSolution:
    guards: tuple[int, ...]
    r: int
    kind: GuardKind
    coverage_certificate: tuple[int, ...]  # per-cell index into `guards`


@dataclass(frozen=True)
class GuardGraph:
    nodes: tuple[int, ...]
    edges: frozenset[tuple[int, int]]


_EXTENDED_CACHE: dict[tuple[SimplePolygon, Point, int], Region] = {}


def extended_region(P: SimplePolygon, p: Point, r: int) -> Region:
    """Closed region reachable from p with up to r diffuse bounces, all edges reflective."""
    key = (P, p, r)
    cached = _EXTENDED_CACHE.get(key)
    if cached is not None:
        return cached
    if r == 0:
        region = Region.of(visibility_polygon(P, p).polygon)
    else:
        ev = extend_all_edges(P, p, r)
        region = region_union(Region.of(ev.direct.polygon), ev.added)
    _EXTENDED_CACHE[key] = region
    return region


def _boundary_points_of_region(P: SimplePolygon, region: Region) -> set[Point]:
    pts = set()
    for part in region.parts:
        for v in part.vertices:
            if P.contains(v) is PointLocation.BOUNDARY:
                pts.add(v)
    return pts


def decompose(P: SimplePolygon, r: int, *, budget: int = 10**6) -> CellDecomposition:
    """Convex cells on which vertex visibility under r bounces is constant."""
    gen: list[Segment] = []
    seen = set()

    def push(seg: Segment):
        key = (seg.a, seg.b) if (seg.a.x, seg.a.y) <= (seg.b.x, seg.b.y) else (seg.b, seg.a)
        if key not in seen:
            seen.add(key)
            gen.append(Segment(*key))

    for v in P.vertices:
        for w in visibility_polygon(P, v).windows:
            push(w)

    qpoints: set[Point] = set(P.vertices)
    for seg in list(gen):
        qpoints.add(seg.a)
        qpoints.add(seg.b)

    for level in range(1, r + 1):
        for v in P.vertices:
            region = extended_region(P, v, level)
            merged = merge_region(region)
            qpoints |= _boundary_points_of_region(P, merged)
        qlist = sorted(qpoints, key=lambda p: (p.x, p.y))
        if len(qlist) ** 2 + len(gen) > budget:
            raise BudgetExceeded(
                f"projected {len(qlist) ** 2} join segments exceed budget {budget}"
            )
        for a, b in combinations(qlist, 2):
            if sees(P, a, b):
                push(Segment(a, b))
        if len(gen) > budget:
            raise BudgetExceeded(f"{len(gen)} generating segments exceed budget {budget}")

    raw = overlay(
        [Region.of(P)],
        lambda c: c[0] > 0,
        splitters=gen,
        merge_runs=False,
    )
    cells = _merge_faces(list(raw.parts), P, gen)
    return CellDecomposition(level=r, cells=tuple(cells), generating_segments=tuple(gen))


def _cell_profile(cell: SimplePolygon):
    xs = sorted({v.x for v in cell.vertices})
    xl, xr = xs[0], xs[-1]
    left = [v.y for v in cell.vertices if v.x == xl]
    right = [v.y for v in cell.vertices if v.x == xr]
    return xl, xr, (min(left), max(left)), (min(right), max(right))


def _merge_faces(cells: list[SimplePolygon], P: SimplePolygon, gen: list[Segment]):
    """Union-find sweep cells into arrangement faces across slab walls."""
    vertical: dict[Fraction, list[tuple[Fraction, Fraction]]] = {}
    for seg in list(P.edges()) + list(gen):
        if seg.a.x == seg.b.x:
            lo, hi = sorted((seg.a.y, seg.b.y))
            vertical.setdefault(seg.a.x, []).append((lo, hi))

    parent = list(range(len(cells)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri

    profiles = [_cell_profile(c) for c in cells]
    by_left: dict[Fraction, list[int]] = {}
    for i, (xl, _, _, _) in enumerate(profiles):
        by_left.setdefault(xl, []).append(i)
    for i, (_, xr, _, right) in enumerate(profiles):
        for j in by_left.get(xr, ()):
            left_j = profiles[j][2]
            lo = max(right[0], left_j[0])
            hi = min(right[1], left_j[1])
            if lo >= hi:
                continue
            walls = vertical.get(xr, ())
            free = [(lo, hi)]
            for wlo, whi in walls:
                nxt = []
                for flo, fhi in free:
                    if whi <= flo or wlo >= fhi:
                        nxt.append((flo, fhi))
                        continue
                    if wlo > flo:
                        nxt.append((flo, wlo))
                    if whi < fhi:
                        nxt.append((whi, fhi))
                free = nxt
                if not free:
                    break
            if any(fhi > flo for flo, fhi in free):
                union(i, j)

    groups: dict[int, list[SimplePolygon]] = {}
    for i, cell in enumerate(cells):
        groups.setdefault(find(i), []).append(cell)
    out: list[SimplePolygon] = []
    for group in groups.values():
        if len(group) == 1:
            out.append(group[0])
            continue
        merged = merge_region(Region(group))
        if len(merged.parts) == 1 and _is_convex(merged.parts[0]):
            out.append(merged.parts[0])
        else:
            out.extend(group)
    out.sort(key=lambda c: (c.bbox[0], c.bbox[1], c.bbox[2], c.bbox[3]))
    return out


def _is_convex(poly: SimplePolygon) -> bool:
    n = poly.n
    for i in range(n):
        a = poly.vertices[i]
        b = poly.vertices[(i + 1) % n]
        c = poly.vertices[(i + 2) % n]
        if (b - a).cross(c - b) <= 0:
            return False
    return True


def coverage_sets(
    P: SimplePolygon, decomposition: CellDecomposition, guard_points: list[Point], r: int
) -> list[set[int]]:
    """For each guard point, the set of cell indices it covers under r bounces."""
    out = []
    for p in guard_points:
        region = extended_region(P, p, r)
        covered = set()
        for ci in range(len(decomposition.cells)):
            if all(region.covers(s) for s in decomposition.sample_points(ci)):
                covered.add(ci)
        out.append(covered)
    return out


def greedy_cover(
    P: SimplePolygon, r: int, kind: GuardKind = GuardKind.DIFFUSE
) -> GuardSolution:
    """Greedy set cover over decomposition cells; lowest vertex index wins ties."""
    decomposition = decompose(P, r)
    points = list(P.vertices)
    sets = coverage_sets(P, decomposition, points, r)
    ncells = len(decomposition.cells)
    uncovered = set(range(ncells))
    chosen: list[int] = []
    while uncovered:
        best = None
        best_gain = -1
        for vi in range(len(points)):
            gain = len(sets[vi] & uncovered)
            if gain > best_gain:
                best = vi
                best_gain = gain
        if best_gain <= 0:
            raise CoverageCertificationFailed("some cell is covered by no vertex")
        chosen.append(best)
        uncovered -= sets[best]
    certificate = _certificate(ncells, chosen, sets)
    return GuardSolution(tuple(chosen), r, kind, certificate)


def _certificate(ncells: int, chosen: list[int], sets: list[set[int]]) -> tuple[int, ...]:
    cert = []
    for ci in range(ncells):
        for gi, vi in enumerate(chosen):
            if ci in sets[vi]:
                cert.append(gi)
                break
        else:
            raise CoverageCertificationFailed(f"cell {ci} uncovered")
    return tuple(cert)


def optimal_cover_bruteforce(
    P: SimplePolygon, r: int, kind: GuardKind = GuardKind.DIFFUSE
) -> GuardSolution:
    """Minimum-cardinality vertex guard set by subset enumeration (n <= 16)."""
    if P.n > 16:
        raise TooLarge(f"{P.n} vertices exceeds the brute-force limit of 16")
    decomposition = decompose(P, r)
    points = list(P.vertices)
    sets = coverage_sets(P, decomposition, points, r)
    ncells = len(decomposition.cells)
    universe = set(range(ncells))
    for size in range(1, P.n + 1):
        for combo in combinations(range(P.n), size):
            covered = set()
            for vi in combo:
                covered |= sets[vi]
            if covered == universe:
                certificate = _certificate(ncells, list(combo), sets)
                return GuardSolution(tuple(combo), r, kind, certificate)
    raise CoverageCertificationFailed("no vertex subset covers all cells")


def _mutual_one_bounce(P: SimplePolygon, a: Point, b: Point) -> bool:
    return extended_region(P, a, 1).covers(b)


def graph_from_points(P: SimplePolygon, points: list[Point]) -> frozenset[tuple[int, int]]:
    edges = set()
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if _mutual_one_bounce(P, points[i], points[j]):
                edges.add((i, j))
    return frozenset(edges)


def build_guard_graph(P: SimplePolygon, S) -> GuardGraph:
    """Graph on guards with edges for direct or one-diffuse-bounce mutual sight."""
    guards = tuple(S.guards) if isinstance(S, GuardSolution) else tuple(S)
    points = [P.vertices[g] for g in guards]
    local = graph_from_points(P, points)
    edges = frozenset((guards[i], guards[j]) for i, j in local)
    return GuardGraph(guards, edges)


def _bfs_levels(nodes: list[int], edges: frozenset[tuple[int, int]], root: int):
    adj: dict[int, list[int]] = {v: [] for v in nodes}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    for v in adj:
        adj[v].sort()
    level = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in level:
                    level[w] = level[v] + 1
                    nxt.append(w)
        frontier = nxt
    return level


def reduce_guard_points(
    P: SimplePolygon, points: list[Point], r: int, *, certify_cells: CellDecomposition | None = None
) -> tuple[list[int], tuple[int, ...]]:
    """Spanning-tree class reduction over arbitrary guard positions.

    Returns indices (into `points`) of the kept class plus a per-cell
    certificate, after explicitly checking that the kept guards cover the
    polygon with r diffuse bounces over all edges.
    """
    idx = list(range(len(points)))
    edges = graph_from_points(P, points)
    root = 0
    levels = _bfs_levels(idx, edges, root)
    if len(levels) != len(points):
        raise GraphDisconnected("guard graph is not connected")
    k = 1 + r // 4
    classes: dict[int, list[int]] = {c: [] for c in range(k)}
    for v, lv in levels.items():
        classes[lv % k].append(v)
    best_class = min(range(k), key=lambda c: (len(classes[c]) if classes[c] else len(points) + 1, c))
    kept = sorted(classes[best_class])
    if not kept:
        kept = [root]
    bound = -(-len(points) // k)  # ceil
    assert len(kept) <= bound, "pigeonhole bound violated"

    cells = certify_cells if certify_cells is not None else decompose(P, 0)
    sets = coverage_sets(P, cells, [points[i] for i in kept], r)
    cert = []
    for ci in range(len(cells.cells)):
        for gi in range(len(kept)):
            if ci in sets[gi]:
                cert.append(gi)
                break
        else:
            raise CoverageCertificationFailed(
                f"reduced guard set fails {r}-bounce coverage at cell {ci}"
            )
    return kept, tuple(cert)


def spanning_tree_reduce(P: SimplePolygon, S: GuardSolution, r: int) -> GuardSolution:
    """Keep one residue class of spanning-tree levels; certify r-bounce coverage."""
    guards = list(S.guards)
    points = [P.vertices[g] for g in guards]
    kept_local, cert = reduce_guard_points(P, points, r)
    kept = tuple(guards[i] for i in kept_local)
    return GuardSolution(kept, r, GuardKind.DIFFUSE, cert)
