"""Exact rational visibility, reflection extensions, and gallery guarding."""

from .geom import (
    Orientation,
    Point,
    PointLocation,
    Rational,
    Region,
    Segment,
    SimplePolygon,
    orientation,
    point_in_polygon,
    polygon_area,
    region_difference,
    region_intersection,
    region_union,
    sees,
    segment_intersection,
)
from .guard import (
    CellDecomposition,
    GuardGraph,
    GuardKind,
    GuardSolution,
    build_guard_graph,
    decompose,
    greedy_cover,
    optimal_cover_bruteforce,
    spanning_tree_reduce,
)
from .redgen import (
    CandidateEdges,
    ReductionInstance,
    ReductionKind,
    SubsetSumInstance,
    gen_diffuse,
    gen_specular,
    solve_by_enumeration,
    subset_sum_bruteforce,
    verify_instance,
)
from .reflect import (
    ExtendedVisibility,
    IlluminatedEdgePart,
    ReflectionKind,
    ReflectionSpec,
    added_area,
    diffuse_extend,
    specular_extend_single,
    visible_edge_parts,
)
from .special import (
    Funnel,
    MirrorChoice,
    TangentQuadruple,
    detect_funnel,
    funnel_best_mirrors,
    funnel_tangents,
    wvp_best_single_edge,
    wvp_three_reflection_cover,
)
from .visibility import (
    VisibilityPolygon,
    visibility_polygon,
    weak_visibility_polygon,
    windows_of,
)

__all__ = [
    "CandidateEdges",
    "CellDecomposition",
    "ExtendedVisibility",
    "Funnel",
    "GuardGraph",
    "GuardKind",
    "GuardSolution",
    "IlluminatedEdgePart",
    "MirrorChoice",
    "Orientation",
    "Point",
    "PointLocation",
    "Rational",
    "ReductionInstance",
    "ReductionKind",
    "ReflectionKind",
    "ReflectionSpec",
    "Region",
    "Segment",
    "SimplePolygon",
    "SubsetSumInstance",
    "TangentQuadruple",
    "VisibilityPolygon",
    "added_area",
    "build_guard_graph",
    "decompose",
    "detect_funnel",
    "diffuse_extend",
    "funnel_best_mirrors",
    "funnel_tangents",
    "gen_diffuse",
    "gen_specular",
    "greedy_cover",
    "optimal_cover_bruteforce",
    "orientation",
    "point_in_polygon",
    "polygon_area",
    "region_difference",
    "region_intersection",
    "region_union",
    "sees",
    "segment_intersection",
    "solve_by_enumeration",
    "spanning_tree_reduce",
    "specular_extend_single",
    "subset_sum_bruteforce",
    "verify_instance",
    "visibility_polygon",
    "visible_edge_parts",
    "weak_visibility_polygon",
    "windows_of",
]
