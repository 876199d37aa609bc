"""Command-line surface: ``mg vp | extend | guard | reduce-gen | render``.

Exit codes: 0 success, 1 unexpected error, 2 parse/input error,
3 query outside polygon, 4 reflection spec mismatch, 5 coordinate bit
blow-up, 6 instance verification failure (the file is still written,
annotated with the failure, so it can be inspected).
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .errors import (
    BitBlowup,
    MirrorGalleryError,
    ParseError,
    QueryOutsidePolygon,
    SpecMismatch,
    VerificationFailed,
)
from .fileio import (
    InstanceFile,
    format_instance,
    format_rational,
    instance_to_file,
    parse_instance,
    parse_rational,
)
from .geom import Point, Region
from .guard import (
    build_guard_graph,
    greedy_cover,
    optimal_cover_bruteforce,
    spanning_tree_reduce,
)
from .redgen import (
    SubsetSumInstance,
    gen_diffuse,
    gen_specular,
    solve_by_enumeration,
    verify_instance,
)
from .reflect import (
    ReflectionKind,
    ReflectionSpec,
    diffuse_extend,
    specular_extend_single,
)
from .svg import render_scene
from .visibility import visibility_polygon

_EXIT_CODES = [
    (ParseError, 2),
    (QueryOutsidePolygon, 3),
    (SpecMismatch, 4),
    (BitBlowup, 5),
    (VerificationFailed, 6),
]


def _load(path: str) -> InstanceFile:
    try:
        text = Path(path).read_text()
    except OSError as ex:
        raise ParseError(f"cannot read {path}: {ex}") from ex
    return parse_instance(text)


def _query_from(args, inst: InstanceFile) -> Point:
    if args.query:
        try:
            qx, qy = args.query.split(",")
        except ValueError as ex:
            raise ParseError("expected --query X,Y") from ex
        return Point(parse_rational(qx), parse_rational(qy))
    if inst.query is not None:
        return inst.query
    raise ParseError("no query point: pass --query or add one to the file")


def _write(path: str | None, text: str):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_vp(args) -> int:
    inst = _load(args.input)
    q = _query_from(args, inst)
    vp = visibility_polygon(inst.polygon, q)
    lines = [f"area: {format_rational(vp.polygon.area)}", "vertices:"]
    lines += [f"{format_rational(v.x)} {format_rational(v.y)}" for v in vp.polygon.vertices]
    lines.append("windows:")
    lines += [
        f"{format_rational(w.a.x)} {format_rational(w.a.y)} "
        f"{format_rational(w.b.x)} {format_rational(w.b.y)}"
        for w in vp.windows
    ]
    _write(args.out, "\n".join(lines) + "\n")
    if args.svg:
        scene = render_scene(
            inst.polygon,
            query=q,
            regions=[(Region.of(vp.polygon), "#1f77b4")],
            extra_segments=list(vp.windows),
        )
        Path(args.svg).write_text(scene)
    return 0


def _parse_edges(spec: str) -> list[int]:
    try:
        return [int(tok) for tok in spec.split(",") if tok != ""]
    except ValueError as ex:
        raise ParseError(f"bad --edges list {spec!r}") from ex


def cmd_extend(args) -> int:
    inst = _load(args.input)
    q = _query_from(args, inst)
    edges = _parse_edges(args.edges)
    if args.kind == "specular":
        if args.bounces > 1:
            raise SpecMismatch("specular reflection supports at most one bounce")
        if len(edges) != 1:
            raise SpecMismatch("specular extension takes exactly one mirror edge")
        ev = specular_extend_single(inst.polygon, q, edges[0])
    else:
        spec = ReflectionSpec(frozenset(edges), ReflectionKind.DIFFUSE, args.bounces)
        ev = diffuse_extend(inst.polygon, q, spec)
    lines = [
        f"direct-area: {format_rational(ev.direct.polygon.area)}",
        f"added-area: {format_rational(ev.added.area)}",
        "illumination:",
    ]
    for rec in ev.per_edge_illumination:
        for seg in rec.subsegments:
            lines.append(
                f"edge {rec.edge} depth {rec.bounce_depth} "
                f"{format_rational(seg.a.x)} {format_rational(seg.a.y)} "
                f"{format_rational(seg.b.x)} {format_rational(seg.b.y)}"
            )
    _write(args.out, "\n".join(lines) + "\n")
    if args.svg:
        scene = render_scene(
            inst.polygon,
            query=q,
            regions=[(Region.of(ev.direct.polygon), "#1f77b4"), (ev.added, "#2ca02c")],
            highlight_edges=edges,
        )
        Path(args.svg).write_text(scene)
    return 0


def cmd_guard(args) -> int:
    inst = _load(args.input)
    P = inst.polygon
    if args.mode == "greedy":
        sol = greedy_cover(P, args.bounces)
    elif args.mode == "optimal":
        sol = optimal_cover_bruteforce(P, args.bounces)
    else:
        base = optimal_cover_bruteforce(P, 0) if P.n <= 16 else greedy_cover(P, 0)
        graph = build_guard_graph(P, base)
        sol = spanning_tree_reduce(P, base, args.bounces)
        k = 1 + args.bounces // 4
        bound = -(-len(base.guards) // k)
        print(f"base-guards: {' '.join(str(g) for g in base.guards)}")
        print(f"graph-edges: {len(graph.edges)}")
        print(f"bound: {bound}")
    print(f"guards: {' '.join(str(g) for g in sol.guards)}")
    print(f"count: {len(sol.guards)}")
    print(f"cells: {len(sol.coverage_certificate)}")
    return 0


def cmd_reduce_gen(args) -> int:
    if args.random is not None:
        rng = random.Random(args.seed)
        values = tuple(rng.randint(1, args.max_value) for _ in range(args.random))
        chosen = [v for v in values if rng.random() < 0.5]
        target = sum(chosen) if chosen else 0
    else:
        if not args.values:
            raise ParseError("pass --values or --random")
        try:
            values = tuple(int(tok) for tok in args.values.split(","))
        except ValueError as ex:
            raise ParseError(f"bad --values {args.values!r}") from ex
        target = args.target
    ss = SubsetSumInstance(values, target)
    if args.kind == "specular":
        ri = gen_specular(ss)
    else:
        ri = gen_diffuse(ss, multi=args.kind == "diffuse-multi")
    expect = {"k": format_rational(ri.k)}
    code = 0
    try:
        report = verify_instance(ri)
        for name, ok, _ in report.clauses:
            expect[f"verify-{name}"] = "pass" if ok else "fail"
    except VerificationFailed as ex:
        report = ex.report
        for name, ok, _ in (report.clauses if report else ()):
            expect[f"verify-{name}"] = "pass" if ok else "fail"
        expect["verify"] = "failed"
        code = 6
    text = format_instance(instance_to_file(ri, expect))
    _write(args.out, text)
    if args.solve:
        witness = solve_by_enumeration(ri)
        print(f"witness: {'none' if witness is None else ' '.join(map(str, witness))}")
    return code


def cmd_render(args) -> int:
    inst = _load(args.input)
    layers = [tok for tok in args.layers.split(",") if tok] if args.layers else []
    query = None
    regions = []
    highlight = []
    if "query" in layers and inst.query is not None:
        query = inst.query
    if "vp" in layers:
        if inst.query is None:
            raise ParseError("vp layer needs a query point in the file")
        vp = visibility_polygon(inst.polygon, inst.query)
        regions.append((Region.of(vp.polygon), "#1f77b4"))
    if "candidates" in layers and inst.candidates is not None:
        highlight = sorted(inst.candidates.all_edges())
    scene = render_scene(inst.polygon, query=query, regions=regions, highlight_edges=highlight)
    _write(args.out, scene)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vp", help="visibility polygon of a query point")
    p.add_argument("input")
    p.add_argument("--query", help="X,Y rationals; defaults to the file's query")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--svg", help="also write an SVG rendering")
    p.set_defaults(func=cmd_vp)

    p = sub.add_parser("extend", help="visibility extension through reflecting edges")
    p.add_argument("input")
    p.add_argument("--query")
    p.add_argument("--edges", required=True, help="comma-separated edge indices")
    p.add_argument("--kind", choices=["diffuse", "specular"], default="diffuse")
    p.add_argument("--bounces", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("guard", help="vertex guarding with reflection")
    p.add_argument("input")
    p.add_argument("--bounces", type=int, default=0)
    p.add_argument("--mode", choices=["greedy", "optimal", "reduce"], default="greedy")
    p.set_defaults(func=cmd_guard)

    p = sub.add_parser("reduce-gen", help="generate a subset-sum reduction polygon")
    p.add_argument("--kind", choices=["specular", "diffuse", "diffuse-multi"], required=True)
    p.add_argument("--values", help="comma-separated positive integers")
    p.add_argument("--target", type=int, default=0)
    p.add_argument("--random", type=int, help="draw this many random values instead")
    p.add_argument("--max-value", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--solve", action="store_true", help="also run the enumeration solver")
    p.add_argument("--out", help="write the instance file here instead of stdout")
    p.set_defaults(func=cmd_reduce_gen)

    p = sub.add_parser("render", help="render an instance file to SVG")
    p.add_argument("input")
    p.add_argument("--layers", help="comma list from: query,vp,candidates (empty: outline only)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MirrorGalleryError as ex:
        for cls, code in _EXIT_CODES:
            if isinstance(ex, cls):
                print(f"error: {ex}", file=sys.stderr)
                return code
        print(f"error: {ex}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
