"""Log-aesthetic curves and the logarithmic curvature graph.

For a LAC the graph is a straight line whose slope is alpha; shifting the
radius or curvature (a GLAC) bends it.
"""
from fairspiral import GlacParams, LacParams, compute_lcg, fit_lcg_line, make_glac, make_lac

stretch = (0.1, 4.0)

print("alpha   slope      max residual")
for alpha, c0, c1 in [(-1.0, 1.0, 1.0), (1.0, 1.0, 1.0), (2.0, 2.0, 0.0), (3.0, 1.0, 0.5)]:
    fit = fit_lcg_line(compute_lcg(make_lac(LacParams(alpha, c0, c1), stretch), 100))
    print(f"{alpha:5}  {fit.slope: .9f}  {fit.max_residual:.1e}")

# alpha = 0 is the exponential branch: rho = c0 exp(c1 s)
fit = fit_lcg_line(compute_lcg(make_lac(LacParams(0.0, 1.0, 0.5), stretch), 100))
print("exponential branch slope:", round(fit.slope, 12))

# GLACs: the shifted families
for kind, alpha in [("radius", 2.0), ("curvature", 1.0)]:
    curve = make_glac(GlacParams(alpha, 1.0, 1.0, 0.5, kind), stretch)
    fit = fit_lcg_line(compute_lcg(curve, 100))
    print(f"GLAC {kind:9s} alpha={alpha}: slope {fit.slope:.4f}, max residual {fit.max_residual:.3e}")

# a radius shift with alpha = 1 keeps rho linear in s, so the curve is still a LAC
fit = fit_lcg_line(compute_lcg(make_glac(GlacParams(1.0, 1.0, 1.0, 0.5), stretch), 100))
print("GLAC radius alpha=1 residual:", fit.max_residual)
