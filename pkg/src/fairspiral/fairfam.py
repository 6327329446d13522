"""Fair-curve families: pseudospirals, LACs, GLACs and superspirals.

Conventions shared by every constructor:

* curvature is positive when the curve turns left;
* the tangent angle is zero at the start of the domain;
* pseudospirals are parametrized by ``rho = alpha * s**m``, so the curvature
  coefficient is ``k0 = 1 / alpha``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from .core import IDENTITY, ArcLength, IntrinsicCurve, Pose, TangentAngle, _check_interval
from .errors import InvalidDomain, InvalidParameter, NonConvergence
from .hyperfun import _sum_series, hyp1f2, hyp2f1, validate_superspiral_params

SERIES_TOL = 1e-16
# largest rounding error accepted from the closed-form pseudospiral series
CLOSED_FORM_ROUNDING_LIMIT = 1e-9


def _pow(u: float, e: float) -> float:
    if u == 0.0:
        if e < 0:
            return math.inf
        return 1.0 if e == 0 else 0.0
    return u ** e


# --------------------------------------------------------------------------
# pseudospirals


@dataclass(frozen=True)
class PseudospiralParams:
    alpha: float
    m: float

    def __post_init__(self):
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise InvalidParameter(f"pseudospiral alpha must be positive, got {self.alpha}")
        if not math.isfinite(self.m):
            raise InvalidParameter(f"pseudospiral exponent m must be finite, got {self.m}")

    @property
    def k0(self) -> float:
        return 1.0 / self.alpha


def classify_pseudospiral(m: float) -> str:
    names = {1.0: "logarithmic spiral", -1.0: "Cornu spiral", 0.5: "circle involute", 0.0: "circle"}
    return names.get(float(m), "pseudospiral")


def make_pseudospiral(p: PseudospiralParams, s_domain, pose: Pose = IDENTITY) -> IntrinsicCurve:
    """Curve with ``kappa(s) = s**(-m) / alpha`` on ``s_domain``.

    For ``m >= 1`` the tangent angle diverges at ``s = 0``, so the domain
    must start strictly after it.
    """
    lo, hi = _check_interval(s_domain, "s_domain")
    alpha, m = p.alpha, p.m
    if m >= 1 and lo <= 0:
        raise InvalidDomain(f"m = {m} >= 1 needs s_domain to start above 0 (tangent angle diverges)")
    q = 1.0 - m

    def kappa(s):
        return _pow(s, -m) / alpha

    if m == 1:
        def theta(s):
            return math.log(s / lo) / alpha
    else:
        base = _pow(lo, q)

        def theta(s):
            return (_pow(s, q) - base) / (alpha * q)

    def rho(s):
        return alpha * _pow(s, m)

    def drho(s):
        return alpha * m * _pow(s, m - 1.0) if m != 0 else 0.0

    return IntrinsicCurve(ArcLength(kappa, (lo, hi), theta, rho, drho), pose,
                          "pseudospiral", {"alpha": alpha, "m": m})


def _excluded_m_reason(m: float) -> Optional[str]:
    q = 1.0 - m
    if q == 0:
        return None
    bx = 1.0 + 1.0 / (2.0 * q)
    by = (1.0 + 3.0 * q) / (2.0 * q)
    for label, b in (("x", bx), ("y", by)):
        if b < 0.5 and abs(b - round(b)) < 1e-9:
            return (f"m = {m} makes the {label} series denominator parameter {b:g} a nonpositive "
                    f"integer; perturb m (e.g. m = {m + 1e-3:g}) or use the quadrature path")
    return None


def _checked(result, factor: float) -> float:
    if abs(factor) * result.rounding_estimate > CLOSED_FORM_ROUNDING_LIMIT:
        raise NonConvergence(
            "closed-form series loses too many digits to cancellation here "
            f"(rounding error ~{abs(factor) * result.rounding_estimate:.1e}); use the quadrature path")
    return factor * result.value


def _log_limit_tail(c: float, s: float) -> float:
    """Series part of the y antiderivative at m = 2 (the log-limit case).

    Equals ``-(c/2) sum_{n>=1} z**n / (n * n! * (3/2)_n)`` with
    ``z = -c**2 / (4 s**2)``.
    """
    z = -c * c / (4.0 * s * s)
    first = z / 1.5
    if first == 0.0:
        return 0.0
    rest = _sum_series(lambda k: z * (k + 1) / ((k + 2) ** 2 * (k + 2.5)), SERIES_TOL, 10_000)
    return _checked(rest, -0.5 * c * first)


def _pseudospiral_antiderivative(p: PseudospiralParams, s: float) -> Tuple[float, float, float]:
    """``(X(s), Y(s), theta_abs(s))`` with ``X' = cos theta_abs``, ``Y' = sin theta_abs``."""
    k0, m = p.k0, p.m
    q = 1.0 - m
    if m == 1:
        th = k0 * math.log(s)
        scale = s / (1.0 + k0 * k0)
        return (scale * (math.cos(th) + k0 * math.sin(th)),
                scale * (math.sin(th) - k0 * math.cos(th)), th)
    if s == 0.0:
        # only reachable for q > 0, where both series vanish with s
        return 0.0, 0.0, 0.0
    c = k0 / q  # theta_abs = c * s**q
    th = c * s ** q
    z = -(c * c) * s ** (2.0 * q) / 4.0
    x = _checked(hyp1f2(1.0 / (2.0 * q), 0.5, 1.0 + 1.0 / (2.0 * q), z, SERIES_TOL), s)
    if q == -1.0:
        y = c * math.log(s) + _log_limit_tail(c, s)
    else:
        a = (1.0 + q) / (2.0 * q)
        y = _checked(hyp1f2(a, 1.5, a + 1.0, z, SERIES_TOL), c * s ** (1.0 + q) / (1.0 + q))
    return x, y, th


def pseudospiral_closed_form(p: PseudospiralParams, s: float, s_lo: float = 0.0,
                             pose: Pose = IDENTITY) -> Tuple[float, float]:
    """Pseudospiral position without quadrature.

    Uses the trigonometric-logarithmic antiderivative for ``m = 1`` and the
    1F2 series otherwise, evaluated between ``s_lo`` and ``s`` and rotated so
    that the curve starts at the pose with the pose heading. Agrees with
    ``position_at(make_pseudospiral(p, (s_lo, ...)), s)``.

    The alternating series cancels badly once ``(s**(1-m) / (alpha (1-m)))**2``
    grows past a few hundred; :class:`NonConvergence` is raised when the
    estimated rounding error exceeds ``CLOSED_FORM_ROUNDING_LIMIT``.
    """
    if p.m >= 1 and s_lo <= 0:
        raise InvalidDomain(f"m = {p.m} >= 1 needs s_lo > 0")
    if s < s_lo or s_lo < 0:
        raise InvalidDomain(f"need 0 <= s_lo <= s, got s_lo={s_lo}, s={s}")
    reason = _excluded_m_reason(p.m)
    if reason:
        raise InvalidParameter(reason)
    x1, y1, _ = _pseudospiral_antiderivative(p, s)
    x0, y0, th0 = _pseudospiral_antiderivative(p, s_lo)
    dz = complex(x1 - x0, y1 - y0) * complex(math.cos(th0), -math.sin(th0))
    w = pose.apply(dz)
    return w.real, w.imag


# --------------------------------------------------------------------------
# log-aesthetic curves


@dataclass(frozen=True)
class LacParams:
    """``rho**alpha = c0*s + c1`` (alpha != 0) or ``rho = c0 * exp(c1*s)`` (alpha == 0)."""

    alpha: float
    c0: float
    c1: float


def _check_linear_base(alpha, c0, c1, lo, hi, what):
    u_lo, u_hi = c0 * lo + c1, c0 * hi + c1
    if not u_hi > 0:
        raise InvalidParameter(f"{what}: c0*s + c1 must stay positive on the domain (at s={hi}: {u_hi})")
    # a zero at the start is fine when the curvature stays integrable
    if u_lo < 0 or (u_lo == 0 and not (alpha < 0 or alpha > 1)):
        raise InvalidParameter(f"{what}: c0*s + c1 must stay positive on the domain (at s={lo}: {u_lo})")


def make_lac(p: LacParams, s_domain, pose: Pose = IDENTITY) -> IntrinsicCurve:
    lo, hi = _check_interval(s_domain, "s_domain")
    alpha, c0, c1 = float(p.alpha), float(p.c0), float(p.c1)
    params = {"alpha": alpha, "c0": c0, "c1": c1}

    if alpha == 0:
        if not c0 > 0:
            raise InvalidParameter(f"LAC with alpha = 0 needs c0 > 0, got {c0}")

        def kappa(s):
            return math.exp(-c1 * s) / c0

        def rho(s):
            return c0 * math.exp(c1 * s)

        def drho(s):
            return c1 * c0 * math.exp(c1 * s)

        if c1 == 0:
            def theta(s):
                return (s - lo) / c0
        else:
            e_lo = math.exp(-c1 * lo)

            def theta(s):
                return (e_lo - math.exp(-c1 * s)) / (c0 * c1)

        return IntrinsicCurve(ArcLength(kappa, (lo, hi), theta, rho, drho), pose, "lac", params)

    _check_linear_base(alpha, c0, c1, lo, hi, "LAC")
    inv = 1.0 / alpha

    def kappa(s):
        return _pow(c0 * s + c1, -inv)

    def rho(s):
        return _pow(c0 * s + c1, inv)

    def drho(s):
        return c0 * inv * _pow(c0 * s + c1, inv - 1.0)

    if c0 == 0:
        k = c1 ** -inv

        def theta(s):
            return k * (s - lo)
    elif alpha == 1:
        u_lo = c0 * lo + c1

        def theta(s):
            return math.log((c0 * s + c1) / u_lo) / c0
    else:
        e = 1.0 - inv
        base = _pow(c0 * lo + c1, e)

        def theta(s):
            return (_pow(c0 * s + c1, e) - base) / (c0 * e)

    return IntrinsicCurve(ArcLength(kappa, (lo, hi), theta, rho, drho), pose, "lac", params)


# --------------------------------------------------------------------------
# generalized LACs


class ShiftKind(str, enum.Enum):
    RADIUS = "radius"
    CURVATURE = "curvature"


@dataclass(frozen=True)
class GlacParams:
    alpha: float
    c0: float
    c1: float
    c2: float
    shift_kind: ShiftKind = ShiftKind.RADIUS

    def __post_init__(self):
        if self.alpha == 0:
            raise InvalidParameter("GLAC needs alpha != 0")
        object.__setattr__(self, "shift_kind", ShiftKind(self.shift_kind))


def make_glac(p: GlacParams, s_domain, pose: Pose = IDENTITY) -> IntrinsicCurve:
    """Shifted LAC.

    ``RADIUS``: ``rho = (c0 s + c1)**(1/alpha) + c2``.
    ``CURVATURE``: ``kappa = (c0 s + c1)**(-1/alpha) + c2``, i.e. the LAC
    curvature shifted by ``c2``. Both reduce to :func:`make_lac` at ``c2 = 0``.
    The tangent angle is integrated numerically.
    """
    lo, hi = _check_interval(s_domain, "s_domain")
    alpha, c0, c1, c2 = float(p.alpha), float(p.c0), float(p.c1), float(p.c2)
    _check_linear_base(alpha, c0, c1, lo, hi, "GLAC")
    inv = 1.0 / alpha

    if p.shift_kind is ShiftKind.RADIUS:
        def rho(s):
            return _pow(c0 * s + c1, inv) + c2

        def kappa(s):
            return 1.0 / rho(s)

        def drho(s):
            return c0 * inv * _pow(c0 * s + c1, inv - 1.0)

        shifted, label = rho, "radius of curvature"
    else:
        def kappa(s):
            return _pow(c0 * s + c1, -inv) + c2

        def rho(s):
            return 1.0 / kappa(s)

        def drho(s):
            dk = -c0 * inv * _pow(c0 * s + c1, -inv - 1.0)
            return -dk / kappa(s) ** 2

        shifted, label = kappa, "curvature"

    # the shifted quantity is monotone in s, so the endpoints decide positivity
    for s in (lo, hi):
        v = shifted(s)
        if not v > 0:
            raise InvalidParameter(f"GLAC {label} must stay positive, got {v} at s={s}")

    params = {"alpha": alpha, "c0": c0, "c1": c1, "c2": c2, "shift": p.shift_kind.value}
    return IntrinsicCurve(ArcLength(kappa, (lo, hi), None, rho, drho), pose, "glac", params)


# --------------------------------------------------------------------------
# superspirals


@dataclass(frozen=True)
class SuperspiralParams:
    a: float
    b: float
    c: float

    def __post_init__(self):
        if not validate_superspiral_params(self.a, self.b, self.c):
            raise InvalidParameter(
                f"superspiral needs c > b > 0 and a > 0, got a={self.a}, b={self.b}, c={self.c}")


def superspiral_radius(p: SuperspiralParams, psi: float) -> float:
    """``2F1(a, b; c; -psi)``."""
    return hyp2f1(p.a, p.b, p.c, -psi, SERIES_TOL).value


def make_superspiral(p: SuperspiralParams, theta_domain, pose: Pose = IDENTITY,
                     scale: float = 1.0) -> IntrinsicCurve:
    """Tangent-angle curve with ``rho(psi) = scale * 2F1(a, b; c; -psi)``.

    ``scale`` is a homothety factor (1 reproduces the plain family).
    """
    if not (scale > 0 and math.isfinite(scale)):
        raise InvalidParameter(f"scale must be positive, got {scale}")
    a, b, c = p.a, p.b, p.c

    @lru_cache(maxsize=4096)
    def rho(psi):
        return scale * hyp2f1(a, b, c, -psi, SERIES_TOL).value

    def drho(psi):
        # d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z)
        return -scale * a * b / c * hyp2f1(a + 1, b + 1, c + 1, -psi, SERIES_TOL).value

    params = {"a": a, "b": b, "c": c}
    if scale != 1.0:
        params["scale"] = scale
    return IntrinsicCurve(TangentAngle(rho, theta_domain, drho), pose, "superspiral", params)
