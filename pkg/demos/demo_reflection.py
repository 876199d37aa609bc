"""Diffuse vs specular reflection off the same wall.

A viewer in the right leg of the L-gallery cannot see the far triangle
behind the reflex corner. Turning the left wall into a reflector reveals
it; the diffuse bounce and the mirror bounce both add exactly half a
unit here, and the exact areas come out as rationals.
"""

from fractions import Fraction as F
from pathlib import Path

from mirrorgallery.geom import Point, Region, SimplePolygon
from mirrorgallery.reflect import (
    ReflectionKind,
    ReflectionSpec,
    diffuse_extend,
    specular_extend_single,
)
from mirrorgallery.svg import render_scene

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

gallery = SimplePolygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
viewer = Point(F(3, 2), F(1, 2))
left_wall = 5

spec = ReflectionSpec(frozenset({left_wall}), ReflectionKind.DIFFUSE, 1)
diff = diffuse_extend(gallery, viewer, spec)
print(f"direct visibility: {diff.direct.polygon.area}")
print(f"diffuse bounce off the left wall adds: {diff.added.area}")

mirror = specular_extend_single(gallery, viewer, left_wall)
print(f"specular bounce off the same wall adds: {mirror.added.area}")

for name, ev in [("diffuse", diff), ("specular", mirror)]:
    svg = render_scene(
        gallery,
        query=viewer,
        regions=[(Region.of(ev.direct.polygon), "#1f77b4"), (ev.added, "#2ca02c")],
        highlight_edges=[left_wall],
    )
    path = OUT / f"reflection_{name}.svg"
    path.write_text(svg)
    print(f"wrote {path}")
