"""Discrete and algebraic spirals."""
import math
from pathlib import Path

import numpy as np

from fairspiral import PolarSpiral, SpiralKind, golden_spiral, polar_sample, spirangle, theodorus
from fairspiral.algebraic import polar_curvature
from fairspiral.svg import arc_chain_svg, polyline_svg

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# spiral of Theodorus: hypotenuses sqrt(2), sqrt(3), ...
t = theodorus(16)
print("Theodorus |P_16| =", np.hypot(*t.vertices[-1]), "sqrt(17) =", math.sqrt(17))
(out / "theodorus.svg").write_text(polyline_svg(t.vertices, 600))

# spirangles: turning 2 pi / k at each vertex, lengths growing by `step` per cycle
s = spirangle(5, 6, 0.5)
print("pentagonal spirangle:", len(s), "vertices, last segment", s.segment_lengths()[-1])
(out / "spirangle.svg").write_text(polyline_svg(s.vertices, 600))

# golden spiral: quarter arcs with radii growing by phi
g = golden_spiral(8)
print("golden radii:", [round(a.radius, 4) for a in g.arcs])
(out / "golden.svg").write_text(arc_chain_svg(g, 600))

for kind in SpiralKind:
    sp = PolarSpiral(kind)
    lo, hi = sp.phi_domain
    mid = 0.5 * (lo + hi)
    print(f"{kind.value:12s} phi in [{lo:.2f}, {hi:.2f}]  curvature at {mid:.2f}: {polar_curvature(sp, mid):.6f}")
    (out / f"polar_{kind.value}.svg").write_text(polyline_svg(polar_sample(sp, 500).vertices, 600))
