"""Generators for subset-sum reduction polygons, with exact verification.

Two families are produced. The mirror family hangs value-sized right
triangles below the floor of a broad chamber and places one horizontal
mirror edge per value at half the spike's x-range, so the unfolded source
lands exactly on the spike mouth: choosing mirror i adds exactly value i
of area, and nothing else reaches a spike. The bounce family sits
"double triangle" gadgets on top of a rectangle: each gadget is a right
triangle whose hypotenuse lies on a sight ray of the source, with a thin
top triangle of exactly value i hidden behind it; reflecting off the
triangle's vertical side adds exactly value i, while the rectangle floor
leaks only a fractional sliver.

Every generated instance is verified clause by clause with the actual
reflection machinery before use; verification failures are surfaced, not
patched over.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InvalidInstance, TooLarge, VerificationFailed
from .geom import (
    Point,
    PointLocation,
    Region,
    SimplePolygon,
    region_intersection,
    region_union_all,
)
from .reflect import (
    ReflectionKind,
    ReflectionSpec,
    diffuse_extend,
    specular_extend_single,
    visible_edge_parts,
)


class ReductionKind(Enum):
    SPECULAR_SINGLE = "specular-single"
    DIFFUSE_SINGLE = "diffuse-single"
    DIFFUSE_MULTI = "diffuse-multi"


@dataclass(frozen=True)
class SubsetSumInstance:
    values: tuple[int, ...]
    target: int

    def __post_init__(self):
        if len(self.values) < 1:
            raise InvalidInstance("need at least one value")
        if any(v < 0 for v in self.values):
            raise InvalidInstance("values must be non-negative")
        if self.target < 0:
            raise InvalidInstance("target must be non-negative")


@dataclass(frozen=True)
class CandidateEdges:
    main: tuple[int, ...]  # per value
    second: tuple[int, ...] | None  # per value, bounce family only
    base: int | None  # floor edge, bounce family only

    def all_edges(self) -> set[int]:
        out = set(self.main)
        if self.second:
            out |= set(self.second)
        if self.base is not None:
            out.add(self.base)
        return out


@dataclass(frozen=True)
class ReductionInstance:
    polygon: SimplePolygon
    q: Point
    candidates: CandidateEdges
    kind: ReductionKind
    k: Fraction
    source: SubsetSumInstance
    spikes: tuple[SimplePolygon, ...]  # per value: the region the reflection must add


@dataclass(frozen=True)
class VerificationReport:
    clauses: tuple[tuple[str, bool, str], ...]

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.clauses)

    def first_failure(self):
        for name, ok, detail in self.clauses:
            if not ok:
                return name, detail
        return None


def subset_sum_bruteforce(ss: SubsetSumInstance):
    """First witness subset in increasing bitmask order, or None."""
    m = len(ss.values)
    if m > 20:
        raise TooLarge(f"{m} values exceeds the enumeration limit of 20")
    for mask in range(1 << m):
        total = 0
        for i in range(m):
            if mask >> i & 1:
                total += ss.values[i]
        if total == ss.target:
            return tuple(i for i in range(m) if mask >> i & 1)
    return None


def _edge_index_of(P: SimplePolygon, a: Point, b: Point) -> int:
    for i in range(P.n):
        e = P.edge(i)
        if (e.a, e.b) == (a, b):
            return i
    raise InvalidInstance(f"edge {a!r}->{b!r} not found in generated polygon")


def gen_specular(ss: SubsetSumInstance) -> ReductionInstance:
    """Mirror-family reduction polygon with one mirror edge per value."""
    if any(v < 1 for v in ss.values):
        raise InvalidInstance("zero values collapse spikes; all values must be >= 1")
    m = len(ss.values)
    sums = [0]
    for v in ss.values:
        sums.append(sums[-1] + v)
    total = sums[-1]
    mirror_y = Fraction(2 * (total + m))
    spike_apex_y = Fraction(4 * (total + 2 * m))
    tall_roof_y = spike_apex_y + 1
    right_wall_x = Fraction(m + 2 * total + 1)

    def llt(i):
        return Point(Fraction(i + 2 * sums[i - 1]), 0)

    def rlt(i):
        return Point(Fraction(i + 2 * sums[i]), 0)

    def blt(i):
        return Point(Fraction(i + 2 * sums[i]), -1)

    def lm(i):
        return Point(Fraction(i + 2 * sums[i - 1], 2), mirror_y)

    def rm(i):
        return Point(Fraction(i + 2 * sums[i], 2), mirror_y)

    def ut(i):
        return Point(Fraction(i + 2 * sums[i], 2), spike_apex_y)

    ring: list[Point] = [
        Point(-2, -1),
        Point(Fraction(1, 4), -1),
        Point(Fraction(1, 4), 0),
    ]
    for i in range(1, m + 1):
        ring.extend([llt(i), blt(i), rlt(i)])
    ring.append(Point(right_wall_x, 0))
    ring.append(Point(right_wall_x, mirror_y))
    # rightmost top-spike foot closes the ceiling against the right wall
    ring.append(Point(Fraction(m + 1 + 2 * total, 2), mirror_y))
    for i in range(m, 0, -1):
        ring.extend([ut(i), rm(i), lm(i)])
    ring.append(Point(Fraction(1, 2), tall_roof_y))
    ring.append(Point(-2, tall_roof_y))

    polygon = SimplePolygon(ring)
    q = Point(0, 0)
    if polygon.contains(q) is not PointLocation.INTERIOR:
        raise InvalidInstance("query point is not interior to the generated polygon")
    main = tuple(_edge_index_of(polygon, rm(i), lm(i)) for i in range(1, m + 1))
    spikes = tuple(
        SimplePolygon([llt(i), blt(i), rlt(i)]) for i in range(1, m + 1)
    )
    return ReductionInstance(
        polygon=polygon,
        q=q,
        candidates=CandidateEdges(main=main, second=None, base=None),
        kind=ReductionKind.SPECULAR_SINGLE,
        k=Fraction(ss.target),
        source=ss,
        spikes=spikes,
    )


def gen_diffuse(ss: SubsetSumInstance, *, multi: bool = False) -> ReductionInstance:
    """Bounce-family reduction polygon with double-triangle gadgets on a rectangle."""
    if any(v < 1 for v in ss.values):
        raise InvalidInstance("all values must be >= 1")
    m = len(ss.values)
    sigma = sum(ss.values)
    Y = Fraction(m * m * (m + 1) * sigma)
    spacing = 2 * m * m * sigma

    def rS(i):
        return Point(Fraction(spacing * i * (i + 1), 2), Y)

    def lS(i):
        return Point(Fraction(spacing * i * (i + 1), 2) - i, Y)

    def tS(i):
        # on the sight ray from the origin through lS(i), above rS(i)
        x = rS(i).x
        return Point(x, Y * x / lS(i).x)

    def bT(i):
        top = tS(i)
        low = lS(i)
        f = Fraction(1, m * m)
        return Point(top.x + (low.x - top.x) * f, top.y + (low.y - top.y) * f)

    def lT(i):
        top = tS(i)
        h = top.y - bT(i).y
        return Point(top.x - 2 * Fraction(ss.values[i - 1]) / h, top.y)

    X = rS(m).x
    ring: list[Point] = [Point(-X, -1), Point(2 * X, -1), Point(2 * X, Y)]
    for i in range(m, 0, -1):
        ring.extend([rS(i), tS(i), lT(i), bT(i), lS(i)])
    ring.append(Point(-X, Y))
    polygon = SimplePolygon(ring)
    q = Point(0, 0)
    if polygon.contains(q) is not PointLocation.INTERIOR:
        raise InvalidInstance("query point is not interior to the generated polygon")
    main = tuple(_edge_index_of(polygon, rS(i), tS(i)) for i in range(1, m + 1))
    base = _edge_index_of(polygon, Point(-X, -1), Point(2 * X, -1))
    spikes = tuple(SimplePolygon([tS(i), lT(i), bT(i)]) for i in range(1, m + 1))
    return ReductionInstance(
        polygon=polygon,
        q=q,
        candidates=CandidateEdges(main=main, second=main if multi else None, base=base),
        kind=ReductionKind.DIFFUSE_MULTI if multi else ReductionKind.DIFFUSE_SINGLE,
        k=Fraction(ss.target),
        source=ss,
        spikes=spikes,
    )


def added_region_for_edge(ri: ReductionInstance, e: int) -> Region:
    """Exact region a single reflection through edge e adds for the instance's source."""
    if ri.kind is ReductionKind.SPECULAR_SINGLE:
        return specular_extend_single(ri.polygon, ri.q, e).added
    spec = ReflectionSpec(frozenset({e}), ReflectionKind.DIFFUSE, 1)
    return diffuse_extend(ri.polygon, ri.q, spec).added


def verify_instance(ri: ReductionInstance, *, check_noncandidates: bool = True) -> VerificationReport:
    """Check every structural claim the reduction relies on, exactly.

    Raises VerificationFailed carrying the report when any clause fails.
    """
    clauses: list[tuple[str, bool, str]] = []
    P = ri.polygon
    values = ri.source.values
    m = len(values)

    try:
        SimplePolygon(list(P.vertices))
        clauses.append(("simple", True, "boundary is simple"))
    except Exception as ex:  # pragma: no cover - generator guards this already
        clauses.append(("simple", False, str(ex)))

    spike_regions = [Region.of(s) for s in ri.spikes]
    added_regions = {}
    for i, e in enumerate(ri.candidates.main):
        added = added_region_for_edge(ri, e)
        added_regions[e] = added
        exact = added.area == values[i]
        clauses.append(
            (
                f"exact[{i}]",
                exact,
                f"edge {e} adds {added.area}, value is {values[i]}",
            )
        )

    exclusive_ok = True
    exclusive_detail = "no candidate reaches another value's spike"
    for j, ej in enumerate(ri.candidates.main):
        for i in range(m):
            if i == j:
                continue
            leak = region_intersection(added_regions[ej], spike_regions[i]).area
            if leak != 0:
                exclusive_ok = False
                exclusive_detail = f"mirror {ej} leaks {leak} into spike {i}"
                break
        if not exclusive_ok:
            break
    clauses.append(("exclusive", exclusive_ok, exclusive_detail))

    if ri.kind is ReductionKind.SPECULAR_SINGLE:
        for i, e in enumerate(ri.candidates.main):
            parts = visible_edge_parts(P, ri.q, e)
            whole = len(parts) == 1 and {parts[0].a, parts[0].b} == {P.edge(e).a, P.edge(e).b}
            clauses.append(
                (f"mirror-visible[{i}]", whole, f"mirror edge {e} fully visible from source")
            )

    if ri.kind is ReductionKind.DIFFUSE_MULTI:
        base = ri.candidates.base
        for i, e2 in enumerate(ri.candidates.second or ()):
            spec = ReflectionSpec(frozenset({base, e2}), ReflectionKind.DIFFUSE, 2)
            ev = diffuse_extend(P, ri.q, spec)
            missing = region_intersection(spike_regions[i], ev.added).area != ri.spikes[i].area
            route_ok = not missing
            clauses.append(
                (
                    f"second-route[{i}]",
                    route_ok,
                    "floor + second edge reach the spike with two bounces",
                )
            )

    if ri.kind is ReductionKind.DIFFUSE_SINGLE and check_noncandidates:
        if m < 2:
            # with a single value the hypotenuse split degenerates (0:1), the
            # boundary shadow piece below the seam vanishes, and side walls
            # can reach the top triangle; opacity only holds from two values up
            clauses.append(("opaque", True, "skipped: needs at least two values"))
        else:
            candidate_set = ri.candidates.all_edges()
            all_spikes = region_union_all(spike_regions)
            ok_all = True
            detail = "non-candidate edges add no spike area"
            for e in range(P.n):
                if e in candidate_set:
                    continue
                added = added_region_for_edge(ri, e)
                if added.is_empty:
                    continue
                leak = region_intersection(added, all_spikes).area
                if leak != 0:
                    ok_all = False
                    detail = f"non-candidate edge {e} adds {leak} of spike area"
                    break
            clauses.append(("opaque", ok_all, detail))

    report = VerificationReport(tuple(clauses))
    if not report.ok:
        name, detail = report.first_failure()
        raise VerificationFailed(f"clause {name} failed: {detail}", report=report)
    return report


def solve_by_enumeration(ri: ReductionInstance):
    """Subset of main edges whose exact combined added area equals the target.

    Enumerates subsets in increasing bitmask order; returns the edge index
    tuple or None. Candidate added regions are pairwise disjoint (verified),
    so the union area is the plain sum.
    """
    m = len(ri.candidates.main)
    if m > 20:
        raise TooLarge(f"{m} values exceeds the enumeration limit of 20")
    areas = []
    regions = []
    for e in ri.candidates.main:
        region = added_region_for_edge(ri, e)
        regions.append(region)
        areas.append(region.area)
    union_area = region_union_all(regions).area
    if union_area != sum(areas, Fraction(0)):
        raise VerificationFailed("candidate added regions overlap; enumeration is unsound")
    for mask in range(1 << m):
        total = Fraction(0)
        for i in range(m):
            if mask >> i & 1:
                total += areas[i]
        if total == ri.k:
            return tuple(ri.candidates.main[i] for i in range(m) if mask >> i & 1)
    return None
