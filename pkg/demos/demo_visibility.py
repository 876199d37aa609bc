"""Visibility polygons in an L-shaped gallery.

Computes the region a viewer sees, shows how the reflex corner cuts it
off, and lists the windows (boundary pieces that are not walls).
"""

from fractions import Fraction as F
from pathlib import Path

from mirrorgallery.geom import Point, Region, SimplePolygon
from mirrorgallery.svg import render_scene
from mirrorgallery.visibility import visibility_polygon

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

gallery = SimplePolygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
print(f"gallery area: {gallery.area}")

for label, q in [("corner", Point(F(1, 4), F(1, 4))), ("right-leg", Point(F(3, 2), F(1, 2)))]:
    vp = visibility_polygon(gallery, q)
    print(f"viewer at {label} {q.x},{q.y}: sees {vp.polygon.area} of {gallery.area}; "
          f"{len(vp.windows)} window(s)")
    for w in vp.windows:
        print(f"  window from ({w.a.x},{w.a.y}) to ({w.b.x},{w.b.y})")
    svg = render_scene(gallery, query=q,
                       regions=[(Region.of(vp.polygon), "#1f77b4")],
                       extra_segments=list(vp.windows))
    path = OUT / f"visibility_{label}.svg"
    path.write_text(svg)
    print(f"  wrote {path}")
