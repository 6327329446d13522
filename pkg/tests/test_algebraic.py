import math

import numpy as np
import pytest

from fairspiral.algebraic import (CATALOG, PolarSpiral, SpiralKind, polar_curvature,
                                  polar_derivatives, polar_rho, polar_sample)
from fairspiral.errors import InvalidParameter, OutOfDomain, ValidationError


def test_substitution_examples():
    assert polar_rho(PolarSpiral("archimedean", {"a": 2.0}), math.pi) == pytest.approx(2 * math.pi)
    assert polar_rho(PolarSpiral("fermat", {"a": 1.0}), 4.0) == 2.0
    assert abs(polar_rho(PolarSpiral("cochleoid", {"a": 1.0}), math.pi)) < 1e-15


def test_remaining_kinds():
    assert polar_rho(PolarSpiral("hyperbolic", {"a": 3.0}), 2.0) == 1.5
    assert polar_rho(PolarSpiral("lituus", {"a": 3.0}), 4.0) == 1.5
    assert polar_rho(PolarSpiral("galilean", {"a": 3.0, "b": 0.5}), 2.0) == 1.0
    # parabolic with b = 0 is the nonnegative branch of rho^2 = a^2 phi
    assert polar_rho(PolarSpiral("parabolic", {"a": 2.0}), 9.0) == 6.0
    assert polar_rho(PolarSpiral("parabolic", {"a": 2.0, "b": 1.0}), 9.0) == 7.0


@pytest.mark.parametrize("kind", ["hyperbolic", "lituus"])
def test_pole_at_zero(kind):
    spiral = PolarSpiral(kind)
    with pytest.raises(OutOfDomain):
        polar_rho(spiral, 0.0)
    with pytest.raises(ValidationError):
        PolarSpiral(kind, {}, (0.0, 1.0))


def test_negative_angle_rejected():
    with pytest.raises(OutOfDomain):
        polar_rho(PolarSpiral("fermat"), -1.0)


def test_archimedean_sample_points():
    a = 0.5
    pts = polar_sample(PolarSpiral("archimedean", {"a": a}, (0.0, 2 * math.pi)), 3).vertices
    assert np.allclose(pts, [(0, 0), (-a * math.pi, 0), (2 * a * math.pi, 0)], atol=1e-15)


def test_hyperbolic_sample_decreasing():
    pts = polar_sample(PolarSpiral("hyperbolic", {"a": 1.0}, (1.0, 10.0)), 10).vertices
    r = np.hypot(pts[:, 0], pts[:, 1])
    assert np.all(np.diff(r) < 0)


def test_fermat_sample_increasing():
    pts = polar_sample(PolarSpiral("fermat", {"a": 1.0}, (0.01, 9.0)), 100).vertices
    r = np.hypot(pts[:, 0], pts[:, 1])
    brute = [math.sqrt(p) for p in np.linspace(0.01, 9.0, 100)]
    assert all(b > a for a, b in zip(brute, brute[1:]))
    assert np.all(np.diff(r) > 0)


@pytest.mark.parametrize("kind", list(SpiralKind))
def test_sampled_radius_matches_rho(kind):
    spiral = PolarSpiral(kind, {"a": 1.3})
    phi = np.linspace(*spiral.phi_domain, 50)
    pts = polar_sample(spiral, 50).vertices
    rho = np.array([abs(polar_rho(spiral, float(t))) for t in phi])
    assert np.max(np.abs(np.hypot(pts[:, 0], pts[:, 1]) - rho)) < 1e-12


@pytest.mark.parametrize("kind", list(SpiralKind))
def test_documented_monotone_direction(kind):
    spiral = PolarSpiral(kind)
    lo, hi = CATALOG[kind][0]
    rho = np.array([polar_rho(spiral, float(t)) for t in np.linspace(lo, hi, 200)])
    d = np.diff(rho)
    if CATALOG[kind][1] == "increasing":
        assert np.all(d > 0)
    else:
        assert np.all(d < 0)


@pytest.mark.parametrize("kind", list(SpiralKind))
def test_derivatives_against_finite_differences(kind):
    spiral = PolarSpiral(kind, {"a": 1.7})
    lo, hi = spiral.phi_domain
    h = 1e-5
    for t in np.linspace(lo + 0.3, hi - 0.3, 5):
        t = float(t)
        r, d1, d2 = polar_derivatives(spiral, t)
        fd1 = (polar_rho(spiral, t + h) - polar_rho(spiral, t - h)) / (2 * h)
        fd2 = (polar_rho(spiral, t + h) - 2 * r + polar_rho(spiral, t - h)) / h ** 2
        assert d1 == pytest.approx(fd1, rel=1e-7, abs=1e-8)
        assert d2 == pytest.approx(fd2, rel=1e-4, abs=1e-4)


def test_archimedean_curvature_formula():
    # kappa = (phi^2 + 2) / (a (phi^2 + 1)^1.5)
    spiral = PolarSpiral("archimedean", {"a": 2.0})
    for t in (0.5, 3.0, 10.0):
        assert polar_curvature(spiral, t) == pytest.approx((t * t + 2) / (2.0 * (t * t + 1) ** 1.5), rel=1e-13)


def test_bad_coefficients():
    with pytest.raises(InvalidParameter):
        PolarSpiral("fermat", {"a": -1.0})
    with pytest.raises(InvalidParameter):
        PolarSpiral("fermat", {"q": 1.0})
    with pytest.raises(ValueError):
        PolarSpiral("atom")
