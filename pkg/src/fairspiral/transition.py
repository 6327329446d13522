"""G2 transition from a straight line into a circle.

The incoming line is the negative x-axis ending at the origin, travelling in
+x. A fair-curve segment starts there with zero heading; its free
coefficient is chosen so the end curvature equals the target, and the circle
is then placed tangent to the segment end, on its left.

Both supported families have an explicit end condition:

* pseudospiral ``kappa = k0 * s**(-m)`` (``m < 0``) over ``[0, S]``:
  ``k0 = kappa_end * S**m``;
* superspiral ``rho = L * 2F1(a, b; c; -psi)`` over ``[0, Theta]``:
  ``L = 1 / (kappa_end * 2F1(a, b; c; -Theta))``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .core import IntrinsicCurve, curvature_at, position_at, tangent_angle_at
from .errors import InfeasibleSpec, InvalidParameter
from .fairfam import (PseudospiralParams, SuperspiralParams, make_pseudospiral, make_superspiral,
                      superspiral_radius)

# admissible range for the solved coefficient
COEFFICIENT_BRACKET = (1e-9, 1e9)
FIT_TOL = 1e-13


@dataclass(frozen=True)
class TransitionSpec:
    """``budget`` is the arc length for pseudospirals, the total tangent angle for superspirals."""

    family: str
    target_end_curvature: float
    budget: float
    m: Optional[float] = None
    abc: Optional[Tuple[float, float, float]] = None

    def __post_init__(self):
        if self.family not in ("pseudospiral", "superspiral"):
            raise InvalidParameter(f"unknown transition family {self.family!r}")
        if not (self.target_end_curvature > 0 and math.isfinite(self.target_end_curvature)):
            raise InvalidParameter("target_end_curvature must be positive")
        if not (self.budget > 0 and math.isfinite(self.budget)):
            raise InvalidParameter("budget must be positive")
        if self.family == "pseudospiral":
            if self.m is None or not self.m < 0:
                raise InvalidParameter("a pseudospiral transition needs m < 0 (zero start curvature)")
        else:
            if self.abc is None:
                raise InvalidParameter("a superspiral transition needs (a, b, c)")
            SuperspiralParams(*self.abc)


@dataclass(frozen=True)
class Diagnostics:
    curvature_gap: float
    tangent_gap: float
    position_gap: float


@dataclass(frozen=True)
class TransitionResult:
    segment: IntrinsicCurve
    coefficient: float
    join_point: Tuple[float, float]
    join_tangent: float
    circle_center: Tuple[float, float]
    circle_radius: float
    diagnostics: Diagnostics


def _check_coefficient(value: float, what: str) -> float:
    lo, hi = COEFFICIENT_BRACKET
    if not (math.isfinite(value) and lo <= value <= hi):
        raise InfeasibleSpec(f"{what} = {value:g} falls outside [{lo:g}, {hi:g}]; the budget cannot "
                             "reach the target curvature")
    return value


def _join_frame(segment: IntrinsicCurve, end_param: float, end_arc: float):
    join = position_at(segment, end_param, FIT_TOL)
    tangent = tangent_angle_at(segment, end_arc, FIT_TOL)
    return join, tangent


def fit_line_to_circle(spec: TransitionSpec) -> TransitionResult:
    kappa_end = spec.target_end_curvature
    radius = 1.0 / kappa_end
    if spec.family == "pseudospiral":
        k0 = _check_coefficient(kappa_end * spec.budget ** spec.m, "curvature coefficient k0")
        segment = make_pseudospiral(PseudospiralParams(1.0 / k0, spec.m), (0.0, spec.budget))
        end = spec.budget
        join, tangent = _join_frame(segment, end, end)
        coefficient = k0
    else:
        params = SuperspiralParams(*spec.abc)
        rho_end = superspiral_radius(params, spec.budget)
        scale = _check_coefficient(1.0 / (kappa_end * rho_end), "scale")
        segment = make_superspiral(params, (0.0, spec.budget), scale=scale)
        end = spec.budget
        join = position_at(segment, end, FIT_TOL)
        tangent = spec.budget
        coefficient = scale

    normal = (-math.sin(tangent), math.cos(tangent))
    center = (join[0] + radius * normal[0], join[1] + radius * normal[1])
    diag = _diagnostics(segment, end, join, tangent, center, radius)
    return TransitionResult(segment, coefficient, join, tangent, center, radius, diag)


def _diagnostics(segment, end, join, tangent, center, radius) -> Diagnostics:
    rx, ry = join[0] - center[0], join[1] - center[1]
    dist = math.hypot(rx, ry)
    # the tangent must be perpendicular to the radius vector
    cos_between = abs(math.cos(tangent) * rx + math.sin(tangent) * ry) / dist
    return Diagnostics(
        curvature_gap=abs(curvature_at(segment, end) - 1.0 / radius),
        tangent_gap=cos_between,
        position_gap=abs(dist - radius),
    )


def verify_g2(result: TransitionResult, tol: float = 1e-8) -> bool:
    """Check the line join at the start and the circle join at the end."""
    seg = result.segment
    lo, hi = seg.domain
    start_ok = abs(curvature_at(seg, lo)) <= tol and abs(seg.pose.heading) <= tol
    start_point_ok = math.hypot(*position_at(seg, lo)) <= tol
    d = _diagnostics(seg, hi, result.join_point, result.join_tangent,
                     result.circle_center, result.circle_radius)
    # the centre must lie on the left of travel (positive curvature turns left)
    rx = result.circle_center[0] - result.join_point[0]
    ry = result.circle_center[1] - result.join_point[1]
    left = math.cos(result.join_tangent) * ry - math.sin(result.join_tangent) * rx > 0
    return bool(start_ok and start_point_ok and left and d.position_gap < tol
                and d.tangent_gap < tol and d.curvature_gap < tol)
