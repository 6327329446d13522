"""Pseudospirals: kappa = s**(-m) / alpha.

Walks through the named members of the family, compares the hypergeometric
closed form against quadrature, and writes one SVG per curve.
"""
import math
from pathlib import Path

from fairspiral import PseudospiralParams, make_pseudospiral, position_at, pseudospiral_closed_form, sample
from fairspiral.fairfam import classify_pseudospiral
from fairspiral.svg import polyline_svg

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# m picks the member, alpha only scales it
for m, domain in [(-1.0, (0.0, 4.0)), (0.0, (0.0, 2 * math.pi)), (0.5, (0.0, 20.0)), (1.0, (0.05, 30.0))]:
    p = PseudospiralParams(1.0, m)
    curve = make_pseudospiral(p, domain)
    table = sample(curve, 400)
    name = classify_pseudospiral(m)
    print(f"m = {m:4}: {name:20s} end point ({table.x[-1]: .6f}, {table.y[-1]: .6f})")
    (out / f"pseudospiral_m{m:+}.svg").write_text(polyline_svg(table.points, 600))

# the Cornu spiral ends of the closed form and of quadrature agree to round-off
p = PseudospiralParams(1.0, -1.0)
cornu = make_pseudospiral(p, (0.0, 5.0))
for s in (1.0, 2.5, 5.0):
    a = pseudospiral_closed_form(p, s)
    b = position_at(cornu, s)
    print(f"s = {s}: closed form {a[0]: .12f} {a[1]: .12f}, |diff| = {math.dist(a, b):.1e}")

# the limiting points of the Cornu spiral are (+-sqrt(pi)/2, +-sqrt(pi)/2)
print("Cornu limit point:", math.sqrt(math.pi) / 2)
