"""Curves given by their natural equation.

Two parametrizations are supported:

* :class:`ArcLength` -- curvature as a function of arc length ``s``. The
  tangent angle is ``theta(s) = int_{s_lo}^s kappa``, the position
  ``int_{s_lo}^s exp(i theta(u)) du``.
* :class:`TangentAngle` -- radius of curvature as a function of the tangent
  angle ``psi``. Position is ``int_{lo}^{theta} rho(psi) exp(i (psi - lo)) dpsi``.

Every curve starts at its pose origin with the pose heading; poses are
applied last, as a rigid motion.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Optional, Tuple, Union

import numpy as np

from .errors import InvalidDomain, InvalidParameter, NonConvergence, OutOfDomain
from .quadrature import integrate

DEFAULT_TOL = 1e-12

Interval = Tuple[float, float]


def normalize_angle(angle: float) -> float:
    """Map an angle to ``(-pi, pi]``."""
    r = math.remainder(angle, 2.0 * math.pi)
    return math.pi if r == -math.pi else r


@dataclass(frozen=True)
class Pose:
    origin: Tuple[float, float] = (0.0, 0.0)
    heading: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "origin", (float(self.origin[0]), float(self.origin[1])))
        object.__setattr__(self, "heading", normalize_angle(float(self.heading)))

    def apply(self, z: complex) -> complex:
        """Map a start-frame point (as a complex number) to world coordinates."""
        return complex(*self.origin) + cmath.exp(1j * self.heading) * z


IDENTITY = Pose()


def _check_interval(domain, name="domain") -> Interval:
    lo, hi = (float(v) for v in domain)
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise InvalidDomain(f"{name} must be a finite interval with lo < hi, got {domain!r}")
    if lo < 0:
        raise InvalidDomain(f"{name} must start at a nonnegative value, got lo={lo}")
    return lo, hi


@dataclass(frozen=True)
class ArcLength:
    """``kappa(s)`` on ``domain``.

    Optional hooks a family may register: ``theta`` is a closed-form tangent
    angle with ``theta(domain[0]) == 0``; ``rho``/``drho`` give the radius of
    curvature and its derivative in ``s`` (used by the curvature graph).
    """

    kappa: Callable[[float], float]
    domain: Interval
    theta: Optional[Callable[[float], float]] = None
    rho: Optional[Callable[[float], float]] = None
    drho: Optional[Callable[[float], float]] = None

    def __post_init__(self):
        object.__setattr__(self, "domain", _check_interval(self.domain, "s_domain"))


@dataclass(frozen=True)
class TangentAngle:
    """``rho(psi)`` on ``domain``; ``drho`` is ``d rho / d psi`` if known."""

    rho: Callable[[float], float]
    domain: Interval
    drho: Optional[Callable[[float], float]] = None

    def __post_init__(self):
        lo, hi = _check_interval(self.domain, "theta_domain")
        object.__setattr__(self, "domain", (lo, hi))
        for psi in np.linspace(lo, hi, 5):
            r = self.rho(float(psi))
            if not (r > 0 and math.isfinite(r)):
                raise InvalidParameter(f"radius of curvature must be positive, rho({psi:g}) = {r}")


@dataclass(frozen=True)
class IntrinsicCurve:
    parametrization: Union[ArcLength, TangentAngle]
    pose: Pose = IDENTITY
    family: str = "custom"
    params: Mapping[str, object] = field(default_factory=dict, compare=False)

    @property
    def domain(self) -> Interval:
        return self.parametrization.domain

    @property
    def by_arc_length(self) -> bool:
        return isinstance(self.parametrization, ArcLength)

    def with_pose(self, pose: Pose) -> "IntrinsicCurve":
        return IntrinsicCurve(self.parametrization, pose, self.family, self.params)


@dataclass(frozen=True)
class CurveSamples:
    """Column-oriented sample table; ``theta`` is the world-frame heading."""

    s: np.ndarray
    x: np.ndarray
    y: np.ndarray
    theta: np.ndarray
    kappa: np.ndarray

    COLUMNS = ("s", "x", "y", "theta", "kappa")

    def __len__(self):
        return len(self.s)

    def rows(self) -> Iterator[Tuple[float, float, float, float, float]]:
        for row in zip(self.s, self.x, self.y, self.theta, self.kappa):
            yield tuple(float(v) for v in row)

    @property
    def points(self) -> np.ndarray:
        return np.column_stack([self.x, self.y])


def _in_domain(curve: IntrinsicCurve, t: float) -> float:
    lo, hi = curve.domain
    t = float(t)
    if not lo <= t <= hi:
        raise OutOfDomain(f"parameter {t} outside [{lo}, {hi}]")
    return t


def curvature_at(curve: IntrinsicCurve, t: float) -> float:
    """Curvature at parameter ``t`` (arc length or tangent angle)."""
    t = _in_domain(curve, t)
    par = curve.parametrization
    if isinstance(par, ArcLength):
        return par.kappa(t)
    return 1.0 / par.rho(t)


def radius_at(curve: IntrinsicCurve, t: float) -> float:
    t = _in_domain(curve, t)
    par = curve.parametrization
    if isinstance(par, TangentAngle):
        return par.rho(t)
    if par.rho is not None:
        return par.rho(t)
    k = par.kappa(t)
    return math.inf if k == 0 else 1.0 / k


def _theta_fn(par: ArcLength, tol: float) -> Callable[[float], float]:
    if par.theta is not None:
        return par.theta
    lo = par.domain[0]
    inner_tol = tol * 0.1
    return lambda u: integrate(par.kappa, lo, u, inner_tol, inner_tol).value


def arc_length_at(curve: IntrinsicCurve, t: float, tol: float = DEFAULT_TOL) -> float:
    """Arc length from the curve start to parameter ``t``."""
    t = _in_domain(curve, t)
    par = curve.parametrization
    lo = par.domain[0]
    if isinstance(par, ArcLength):
        return t - lo
    return integrate(par.rho, lo, t, tol, tol).value


def _invert_arc_length(par: TangentAngle, s: float, tol: float) -> float:
    lo, hi = par.domain
    total = integrate(par.rho, lo, hi, tol, tol).value
    if not 0.0 <= s <= total * (1 + 1e-14):
        raise OutOfDomain(f"arc length {s} outside [0, {total}]")
    a, b = lo, hi
    theta = min(hi, lo + s / par.rho(lo))
    # Newton on S(theta) - s with dS/dtheta = rho > 0, kept inside a bracket
    for _ in range(100):
        g = integrate(par.rho, lo, theta, tol, tol).value - s
        if abs(g) <= tol * max(1.0, s):
            return theta
        if g > 0:
            b = theta
        else:
            a = theta
        step = theta - g / par.rho(theta)
        theta = step if a < step < b else 0.5 * (a + b)
    raise NonConvergence(f"could not invert arc length {s}")


def tangent_angle_at(curve: IntrinsicCurve, s: float, tol: float = DEFAULT_TOL) -> float:
    """Tangent angle at arc length ``s``, relative to the pose heading.

    For arc-length curves ``s`` is the curve parameter itself; for
    tangent-angle curves it is measured from the curve start.
    """
    par = curve.parametrization
    if isinstance(par, ArcLength):
        s = _in_domain(curve, s)
        if s == par.domain[0]:
            return 0.0
        return _theta_fn(par, tol)(s)
    theta = _invert_arc_length(par, float(s), tol)
    return theta - par.domain[0]


def _local_position(curve: IntrinsicCurve, t: float, tol: float) -> complex:
    par = curve.parametrization
    lo = par.domain[0]
    if t == lo:
        return 0j
    if isinstance(par, ArcLength):
        theta = _theta_fn(par, tol)
        return integrate(lambda u: cmath.exp(1j * theta(u)), lo, t, tol, tol).value
    rho = par.rho
    return integrate(lambda psi: rho(psi) * cmath.exp(1j * (psi - lo)), lo, t, tol, tol).value


def position_at(curve: IntrinsicCurve, t: float, tol: float = DEFAULT_TOL) -> Tuple[float, float]:
    """World position at parameter ``t`` (arc length or tangent angle)."""
    t = _in_domain(curve, t)
    z = curve.pose.apply(_local_position(curve, t, tol))
    return z.real, z.imag


def sample(curve: IntrinsicCurve, n: int, tol: float = DEFAULT_TOL) -> CurveSamples:
    """Tabulate ``n`` points uniformly spaced in the defining parameter.

    Positions are accumulated panel by panel, so the cost is linear in ``n``.
    """
    if n < 2:
        raise InvalidParameter(f"need at least 2 samples, got {n}")
    par = curve.parametrization
    lo, hi = par.domain
    grid = np.linspace(lo, hi, n)
    s = np.empty(n)
    theta = np.empty(n)
    kappa = np.empty(n)
    z = np.empty(n, dtype=complex)
    s[0], theta[0], z[0] = 0.0, 0.0, 0j

    if isinstance(par, ArcLength):
        closed = par.theta
        for i in range(n - 1):
            a, b = float(grid[i]), float(grid[i + 1])
            if closed is not None:
                th = closed
                theta[i + 1] = closed(b)
            else:
                base = theta[i]
                inner = tol * 0.1

                def th(u, a=a, base=base):
                    return base + integrate(par.kappa, a, u, inner, inner).value

                theta[i + 1] = th(b)
            z[i + 1] = z[i] + integrate(lambda u: cmath.exp(1j * th(u)), a, b, tol, tol).value
        s[:] = grid
        kappa[:] = [_safe_call(par.kappa, float(t)) for t in grid]
    else:
        rho = par.rho
        for i in range(n - 1):
            a, b = float(grid[i]), float(grid[i + 1])
            s[i + 1] = s[i] + integrate(rho, a, b, tol, tol).value
            z[i + 1] = z[i] + integrate(lambda p: rho(p) * cmath.exp(1j * (p - lo)), a, b, tol, tol).value
        theta[:] = grid - lo
        kappa[:] = [1.0 / rho(float(t)) for t in grid]

    world = np.array([curve.pose.apply(complex(v)) for v in z])
    return CurveSamples(s, world.real.copy(), world.imag.copy(), theta + curve.pose.heading, kappa)


def _safe_call(f, t):
    try:
        return f(t)
    except ZeroDivisionError:
        return math.inf
