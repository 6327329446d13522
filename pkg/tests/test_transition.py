import dataclasses
import math

import pytest

from fairspiral.analysis import check_monotone_curvature
from fairspiral.core import curvature_at, position_at, sample
from fairspiral.errors import InfeasibleSpec, InvalidParameter
from fairspiral.transition import TransitionSpec, fit_line_to_circle, verify_g2


def clothoid(kappa=1.0, arc=2.0):
    return fit_line_to_circle(TransitionSpec("pseudospiral", kappa, arc, m=-1.0))


def test_clothoid_coefficient_and_end_angle():
    r = clothoid()
    assert abs(r.coefficient - 0.5) < 1e-15
    assert r.join_tangent == pytest.approx(1.0, abs=1e-12)
    assert r.circle_radius == 1.0


def test_clothoid_diagnostics_and_verification():
    r = clothoid()
    d = r.diagnostics
    assert d.curvature_gap < 1e-9 and d.tangent_gap < 1e-9 and d.position_gap < 1e-12
    assert verify_g2(r, 1e-9)
    assert verify_g2(r, 1e-8)


def test_circle_on_the_left():
    r = clothoid()
    nx, ny = -math.sin(r.join_tangent), math.cos(r.join_tangent)
    cx = r.join_point[0] + r.circle_radius * nx
    cy = r.join_point[1] + r.circle_radius * ny
    assert r.circle_center == pytest.approx((cx, cy), abs=1e-15)


def test_displaced_center_fails():
    r = clothoid()
    moved = dataclasses.replace(r, circle_center=(r.circle_center[0] + 1e-3, r.circle_center[1]))
    assert not verify_g2(moved, 1e-6)


def test_mirrored_center_fails():
    r = clothoid()
    jx, jy = r.join_point
    cx, cy = r.circle_center
    assert not verify_g2(dataclasses.replace(r, circle_center=(2 * jx - cx, 2 * jy - cy)), 1e-6)


def test_superspiral_scale():
    r = fit_line_to_circle(TransitionSpec("superspiral", 2.0, 1.0, abc=(1.0, 1.0, 2.0)))
    assert abs(r.coefficient - 1 / (2 * math.log(2))) < 1e-10
    assert r.join_tangent == 1.0
    assert r.diagnostics.curvature_gap < 1e-9
    assert r.diagnostics.tangent_gap < 1e-9


def test_superspiral_start_curvature_is_not_zero():
    # rho(0) = scale > 0, so the segment does not start with zero curvature
    r = fit_line_to_circle(TransitionSpec("superspiral", 2.0, 1.0, abc=(1.0, 1.0, 2.0)))
    assert curvature_at(r.segment, 0.0) == pytest.approx(2 * math.log(2), rel=1e-12)


@pytest.mark.parametrize("m", [-3.0, -2.0, -1.0, -0.5])
def test_pseudospiral_family_verifies(m):
    r = fit_line_to_circle(TransitionSpec("pseudospiral", 0.7, 3.0, m=m))
    assert verify_g2(r, 1e-8)


def test_scale_covariance():
    base = clothoid(1.0, 2.0)
    lam = 4.0
    scaled = clothoid(lam, 2.0 / lam)
    assert scaled.join_point == pytest.approx(tuple(v / lam for v in base.join_point), abs=1e-12)
    assert scaled.circle_center == pytest.approx(tuple(v / lam for v in base.circle_center), abs=1e-12)
    assert scaled.join_tangent == pytest.approx(base.join_tangent, abs=1e-12)
    for field in ("curvature_gap", "tangent_gap", "position_gap"):
        a = getattr(base.diagnostics, field)
        b = getattr(scaled.diagnostics, field)
        assert abs(a - b) < 1e-10


def test_segment_is_fair():
    r = clothoid()
    assert check_monotone_curvature(sample(r.segment, 200)).monotone
    assert position_at(r.segment, 0.0) == (0.0, 0.0)


def test_infeasible_budget():
    with pytest.raises(InfeasibleSpec):
        fit_line_to_circle(TransitionSpec("pseudospiral", 1.0, 1e-12, m=-1.0))


def test_spec_validation():
    with pytest.raises(InvalidParameter):
        TransitionSpec("pseudospiral", 1.0, 2.0, m=0.5)
    with pytest.raises(InvalidParameter):
        TransitionSpec("pseudospiral", -1.0, 2.0, m=-1.0)
    with pytest.raises(InvalidParameter):
        TransitionSpec("superspiral", 1.0, 2.0)
    with pytest.raises(InvalidParameter):
        TransitionSpec("lac", 1.0, 2.0)
