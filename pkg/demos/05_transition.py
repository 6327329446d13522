"""Line-to-circle G2 transitions.

The line is the negative x-axis, ending at the origin. A fair segment takes
the curvature from 0 up to the circle's, and the circle is placed tangent to
the segment end.
"""
from fairspiral import TransitionSpec, fit_line_to_circle, sample, verify_g2
from fairspiral.analysis import check_monotone_curvature

r = fit_line_to_circle(TransitionSpec("pseudospiral", 1.0, 2.0, m=-1.0))
print("clothoid k0:", r.coefficient)
print("join", r.join_point, "tangent", r.join_tangent)
print("circle centre", r.circle_center, "radius", r.circle_radius)
print("diagnostics", r.diagnostics)
print("G2:", verify_g2(r, 1e-8), " fair:", check_monotone_curvature(sample(r.segment, 200)).monotone)

# steeper curvature ramps from other negative m
for m in (-2.0, -3.0):
    r = fit_line_to_circle(TransitionSpec("pseudospiral", 1.0, 2.0, m=m))
    print(f"m = {m}: k0 = {r.coefficient:.6f}, end tangent {r.join_tangent:.6f}, G2 {verify_g2(r)}")

# superspirals meet the circle, but start with curvature 1/scale, not 0
r = fit_line_to_circle(TransitionSpec("superspiral", 2.0, 1.0, abc=(1.0, 1.0, 2.0)))
print("superspiral scale:", r.coefficient, "circle join gaps:", r.diagnostics)
print("G2 with the line:", verify_g2(r, 1e-8))
