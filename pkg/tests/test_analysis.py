import math

import numpy as np
import pytest

from family_grid import all_curves
from fairspiral.analysis import (Direction, LcgPoint, check_monotone_curvature, compute_lcg,
                                 fit_lcg_line, is_lac_like, lcg_from_samples)
from fairspiral.core import CurveSamples, sample
from fairspiral.errors import DegenerateAbscissa, DegenerateRho, InsufficientSamples
from fairspiral.fairfam import (GlacParams, LacParams, PseudospiralParams, make_glac, make_lac,
                                make_pseudospiral)


def table(s, kappa):
    s = np.asarray(s, dtype=float)
    z = np.zeros_like(s)
    return CurveSamples(s, z, z, z, np.asarray(kappa, dtype=float))


def test_circle_is_constant():
    circle = make_pseudospiral(PseudospiralParams(1.0, 0.0), (0.0, 6.0))
    report = check_monotone_curvature(sample(circle, 50))
    assert report.monotone and report.direction is Direction.CONSTANT
    assert report.first_violation_s is None


def test_cornu_is_increasing():
    cornu = make_pseudospiral(PseudospiralParams(1.0, -1.0), (0.0, 2.0))
    report = check_monotone_curvature(sample(cornu, 21))
    assert report.monotone and report.direction is Direction.INCREASING


def test_sine_perturbed_first_violation():
    s = np.linspace(0.0, 10.0, 401)
    kappa = s + 1.5 * np.sin(s)
    # brute force: first index where kappa descends
    first = next(i for i in range(1, len(s)) if kappa[i] < kappa[i - 1])
    report = check_monotone_curvature(table(s, kappa))
    assert not report.monotone and report.direction is Direction.NONE
    assert report.first_violation_s == s[first]
    assert report.max_violation > 0


def test_noise_below_tol_is_ignored():
    s = np.linspace(0, 1, 10)
    kappa = np.full(10, 2.0)
    kappa[4] += 1e-14
    assert check_monotone_curvature(table(s, kappa)).direction is Direction.CONSTANT


def test_too_few_rows():
    with pytest.raises(InsufficientSamples):
        check_monotone_curvature(table([0, 1], [1, 2]))


@pytest.mark.parametrize("label,curve", all_curves(), ids=lambda v: v if isinstance(v, str) else "")
def test_every_family_instance_is_monotone(label, curve):
    report = check_monotone_curvature(sample(curve, 200), 1e-12)
    assert report.monotone, label


@pytest.mark.parametrize("alpha,c0,c1", [(-1.0, 1.0, 1.0), (1.0, 1.0, 1.0), (2.0, 2.0, 0.0), (3.0, 1.0, 0.5)])
def test_lac_lcg_linear_with_slope_alpha(alpha, c0, c1):
    fit = fit_lcg_line(compute_lcg(make_lac(LacParams(alpha, c0, c1), (0.1, 4.0)), 100))
    assert fit.max_residual < 1e-6
    assert abs(fit.slope - alpha) < 1e-3
    assert is_lac_like(fit)


def test_lac_alpha_two_collinear():
    fit = fit_lcg_line(compute_lcg(make_lac(LacParams(2.0, 2.0, 0.0), (0.1, 4.0)), 100))
    assert fit.max_residual < 1e-9
    assert fit.r_squared == pytest.approx(1.0)


@pytest.mark.parametrize("m", [-1.0, 0.5, 2.0])
def test_pseudospiral_slope_is_inverse_m(m):
    fit = fit_lcg_line(compute_lcg(make_pseudospiral(PseudospiralParams(1.0, m), (0.1, 4.0)), 100))
    assert abs(fit.slope - 1.0 / m) < 1e-3


def test_log_spiral_routes_agree():
    a = fit_lcg_line(compute_lcg(make_pseudospiral(PseudospiralParams(0.8, 1.0), (0.1, 4.0)), 50))
    b = fit_lcg_line(compute_lcg(make_lac(LacParams(1.0, 0.8, 0.0), (0.1, 4.0)), 50))
    assert abs(a.slope - 1) < 1e-3 and abs(b.slope - 1) < 1e-3


def test_circle_has_no_lcg():
    with pytest.raises(DegenerateRho):
        compute_lcg(make_pseudospiral(PseudospiralParams(1.0, 0.0), (0.0, 3.0)), 20)


def test_two_point_fit_is_exact():
    fit = fit_lcg_line([LcgPoint(0.0, 1.0), LcgPoint(2.0, 5.0)])
    assert (fit.slope, fit.intercept, fit.max_residual) == (2.0, 1.0, 0.0)


def test_coincident_abscissae():
    with pytest.raises(DegenerateAbscissa):
        fit_lcg_line([LcgPoint(1.0, 0.0), LcgPoint(1.0, 2.0), LcgPoint(1.0, 3.0)])


def test_glac_curvature_shift_breaks_linearity():
    curve = make_glac(GlacParams(1.0, 1.0, 1.0, 0.5, "curvature"), (0.1, 4.0))
    fit = fit_lcg_line(compute_lcg(curve, 100))
    assert fit.max_residual > 1e-6
    assert not is_lac_like(fit)


def test_glac_radius_shift_breaks_linearity_for_alpha_two():
    curve = make_glac(GlacParams(2.0, 1.0, 1.0, 0.5, "radius"), (0.1, 4.0))
    assert fit_lcg_line(compute_lcg(curve, 100)).max_residual > 1e-6


def test_glac_radius_shift_alpha_one_stays_a_lac():
    # rho = (s + 1) + 0.5 is still linear in s, so the graph is exactly a line
    curve = make_glac(GlacParams(1.0, 1.0, 1.0, 0.5, "radius"), (0.1, 4.0))
    fit = fit_lcg_line(compute_lcg(curve, 100))
    assert fit.max_residual < 1e-12 and fit.slope == pytest.approx(1.0, abs=1e-12)


def test_lcg_from_samples_close_to_analytic():
    curve = make_lac(LacParams(2.0, 2.0, 0.0), (0.1, 4.0))
    fit = fit_lcg_line(lcg_from_samples(sample(curve, 2000)))
    assert abs(fit.slope - 2.0) < 1e-2


def test_superspiral_lcg_uses_tangent_angle():
    from fairspiral.fairfam import SuperspiralParams, make_superspiral
    curve = make_superspiral(SuperspiralParams(1.0, 1.0, 2.0), (0.1, 3.0))
    pts = compute_lcg(curve, 30)
    assert len(pts) == 30 and all(math.isfinite(p.log_rho_ds_drho) for p in pts)
