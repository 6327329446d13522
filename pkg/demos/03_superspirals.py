"""Superspirals: rho(psi) = 2F1(a, b; c; -psi) in the tangent angle.

The radius of curvature starts at 1 and decreases, so the curve winds in.
"""
import math
from pathlib import Path

from fairspiral import SuperspiralParams, hyp2f1, make_superspiral, position_at, sample
from fairspiral.fairfam import superspiral_radius
from fairspiral.svg import polyline_svg

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

p = SuperspiralParams(1.0, 1.0, 2.0)
# 2F1(1, 1; 2; -psi) = log(1 + psi) / psi
for psi in (0.5, 1.0, 4.0):
    print(f"rho({psi}) = {superspiral_radius(p, psi):.15f}  log form {math.log1p(psi) / psi:.15f}")

# Pfaff's transformation takes over for large psi
print("2F1(0.2, 1; 1.5; -3) =", hyp2f1(0.2, 1, 1.5, -3).value)

for abc in [(1.0, 1.0, 2.0), (0.5, 1.0, 1.5), (2.0, 0.5, 1.0)]:
    curve = make_superspiral(SuperspiralParams(*abc), (0.0, 6 * math.pi))
    table = sample(curve, 600)
    print(abc, "arc length", round(float(table.s[-1]), 6), "end", position_at(curve, 6 * math.pi))
    (out / "superspiral_{}_{}_{}.svg".format(*abc)).write_text(polyline_svg(table.points, 600))

# a -> 0 collapses the family onto the unit circle
tiny = make_superspiral(SuperspiralParams(1e-12, 1.0, 2.0), (0.0, math.pi))
print("a = 1e-12, quarter turn:", position_at(tiny, math.pi / 2))
