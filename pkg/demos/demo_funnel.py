"""Funnels: tangents, constant-size mirror selection, one-bounce cover.

Inside a funnel the only reflecting edges that ever matter are the ones
touched by four tangent sight lines, so the best mirror subset is found
by checking a handful of combinations. The chord alone always finishes
the job when it is allowed.
"""

from fractions import Fraction as F
from pathlib import Path

from mirrorgallery.geom import Point, Region, SimplePolygon
from mirrorgallery.reflect import ReflectionKind, ReflectionSpec, diffuse_extend
from mirrorgallery.special import detect_funnel, funnel_best_mirrors, funnel_tangents
from mirrorgallery.svg import render_scene

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

funnel_poly = SimplePolygon([(0, 0), (10, 0), (6, 1), (5, 4), (4, 1)])
funnel = detect_funnel(funnel_poly)
viewer = Point(5, F(7, 2))
print(f"funnel with chord edge {funnel.chord}, apex vertex {funnel.apex}")

quad = funnel_tangents(funnel, viewer)
for name, c in zip(("p1", "p2", "p3", "p4"), quad.contacts()):
    print(f"  {name}: ({c.point.x},{c.point.y}) on the {c.chain} chain, edges {c.edges}")

choice = funnel_best_mirrors(funnel, viewer)
print(f"best mirrors without the chord: edges {sorted(choice.edges)}, "
      f"added {choice.added}, full coverage: {choice.covers_all}")

with_chord = funnel_best_mirrors(funnel, viewer, include_chord=True)
print(f"with the chord allowed: edges {sorted(with_chord.edges)}")

spec = ReflectionSpec(frozenset({funnel.chord}), ReflectionKind.DIFFUSE, 1)
ev = diffuse_extend(funnel_poly, viewer, spec)
print(f"chord bounce: {ev.direct.polygon.area} direct + {ev.added.area} added "
      f"= {ev.direct.polygon.area + ev.added.area} (funnel is {funnel_poly.area})")

svg = render_scene(
    funnel_poly,
    query=viewer,
    regions=[(Region.of(ev.direct.polygon), "#1f77b4"), (ev.added, "#2ca02c")],
    highlight_edges=[funnel.chord],
)
path = OUT / "funnel_chord_bounce.svg"
path.write_text(svg)
print(f"wrote {path}")
