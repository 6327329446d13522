"""Fairness diagnostics: curvature monotonicity and the logarithmic curvature graph.

The logarithmic curvature graph (LCG) plots ``log(rho |ds/drho|)`` against
``log rho``. It is a straight line of slope ``alpha`` exactly for
log-aesthetic curves, which is what :func:`fit_lcg_line` measures.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .core import ArcLength, CurveSamples, IntrinsicCurve
from .errors import DegenerateAbscissa, DegenerateRho, InsufficientSamples, InvalidParameter

DEFAULT_MONOTONE_TOL = 1e-12


class Direction(str, enum.Enum):
    INCREASING = "Increasing"
    DECREASING = "Decreasing"
    CONSTANT = "Constant"
    NONE = "None"


@dataclass(frozen=True)
class MonotonicityReport:
    monotone: bool
    direction: Direction
    first_violation_s: Optional[float]
    max_violation: float


@dataclass(frozen=True)
class LcgPoint:
    log_rho: float
    log_rho_ds_drho: float


@dataclass(frozen=True)
class LcgFit:
    slope: float
    intercept: float
    max_residual: float
    r_squared: float


def check_monotone_curvature(samples: CurveSamples, tol: float = DEFAULT_MONOTONE_TOL) -> MonotonicityReport:
    """Classify the curvature column of ``samples``.

    Steps smaller than ``tol * max(1, |kappa|)`` count as flat. The
    direction is set by the first significant step; a later step of the
    opposite sign is a violation, reported at the ``s`` where it lands.
    """
    kappa = np.asarray(samples.kappa, dtype=float)
    s = np.asarray(samples.s, dtype=float)
    if len(kappa) < 3:
        raise InsufficientSamples(f"need at least 3 samples, got {len(kappa)}")
    with np.errstate(invalid="ignore"):
        d = np.diff(kappa)
        floor = tol * np.maximum(1.0, np.minimum(np.abs(kappa[:-1]), np.abs(kappa[1:])))
    d = np.nan_to_num(d, nan=0.0)
    sign = np.where(np.abs(d) > floor, np.sign(d), 0.0)
    significant = np.flatnonzero(sign)
    if significant.size == 0:
        return MonotonicityReport(True, Direction.CONSTANT, None, 0.0)
    lead = sign[significant[0]]
    bad = np.flatnonzero(sign == -lead)
    if bad.size == 0:
        direction = Direction.INCREASING if lead > 0 else Direction.DECREASING
        return MonotonicityReport(True, direction, None, 0.0)
    return MonotonicityReport(False, Direction.NONE, float(s[bad[0] + 1]), float(np.max(np.abs(d[bad]))))


def _lcg_arrays(log_rho: np.ndarray, rho: np.ndarray, ds_dparam_over_drho: np.ndarray) -> List[LcgPoint]:
    y = np.log(rho * np.abs(ds_dparam_over_drho))
    if not (np.all(np.isfinite(log_rho)) and np.all(np.isfinite(y))):
        raise DegenerateRho("curvature graph has non-finite points on this stretch")
    return [LcgPoint(float(a), float(b)) for a, b in zip(log_rho, y)]


def _check_rho_slope(rho: np.ndarray, drho: np.ndarray):
    if not np.all(np.isfinite(rho)) or np.any(rho <= 0):
        raise DegenerateRho("radius of curvature must be positive and finite on the stretch")
    if not np.all(np.isfinite(drho)) or np.any(drho == 0):
        raise DegenerateRho("d rho/ds vanishes on the stretch (e.g. a circle has no curvature graph)")
    if not (np.all(drho > 0) or np.all(drho < 0)):
        raise DegenerateRho("d rho/ds changes sign on the stretch")


def compute_lcg(curve: IntrinsicCurve, n: int = 100,
                stretch: Optional[Tuple[float, float]] = None) -> List[LcgPoint]:
    """``n`` curvature-graph points uniformly spaced in the curve parameter.

    ``stretch`` defaults to the whole domain; it must avoid points where
    ``rho`` is zero or infinite. Uses the family's analytic ``d rho`` when
    registered, otherwise central differences of ``1/kappa``.
    """
    if n < 2:
        raise InvalidParameter(f"need at least 2 points, got {n}")
    par = curve.parametrization
    lo, hi = stretch if stretch is not None else par.domain
    if not par.domain[0] <= lo < hi <= par.domain[1]:
        raise InvalidParameter(f"stretch {stretch!r} outside the domain {par.domain!r}")
    t = np.linspace(lo, hi, n)

    if isinstance(par, ArcLength):
        if par.rho is not None and par.drho is not None:
            with np.errstate(divide="ignore"):
                rho = np.array([par.rho(float(v)) for v in t])
                drho = np.array([par.drho(float(v)) for v in t])
        else:
            with np.errstate(divide="ignore"):
                rho = 1.0 / np.array([par.kappa(float(v)) for v in t])
            drho = np.gradient(rho, t)
        _check_rho_slope(rho, drho)
        return _lcg_arrays(np.log(rho), rho, 1.0 / drho)

    rho = np.array([par.rho(float(v)) for v in t])
    if par.drho is not None:
        drho = np.array([par.drho(float(v)) for v in t])
    else:
        drho = np.gradient(rho, t)
    _check_rho_slope(rho, drho)
    # ds = rho d(psi), so ds/drho = rho / (d rho / d psi)
    return _lcg_arrays(np.log(rho), rho, rho / drho)


def lcg_from_samples(samples: CurveSamples) -> List[LcgPoint]:
    """Curvature graph of a sample table, by finite differences in ``s``.

    Central differences inside, one-sided at the two ends.
    """
    if len(samples) < 3:
        raise InsufficientSamples(f"need at least 3 samples, got {len(samples)}")
    with np.errstate(divide="ignore"):
        rho = 1.0 / np.asarray(samples.kappa, dtype=float)
    drho = np.gradient(rho, np.asarray(samples.s, dtype=float))
    _check_rho_slope(rho, drho)
    return _lcg_arrays(np.log(rho), rho, 1.0 / drho)


def fit_lcg_line(points: Sequence[LcgPoint]) -> LcgFit:
    """Ordinary least-squares line through the curvature graph."""
    if len(points) < 2:
        raise InsufficientSamples("need at least 2 curvature-graph points")
    x = np.array([p.log_rho for p in points])
    y = np.array([p.log_rho_ds_drho for p in points])
    if np.ptp(x) == 0:
        raise DegenerateAbscissa("all log rho values coincide")
    if len(points) == 2:
        slope = (y[1] - y[0]) / (x[1] - x[0])
        return LcgFit(float(slope), float(y[0] - slope * x[0]), 0.0, 1.0)
    xm, ym = x.mean(), y.mean()
    dx, dy = x - xm, y - ym
    slope = float(np.dot(dx, dy) / np.dot(dx, dx))
    intercept = float(ym - slope * xm)
    resid = dy - slope * dx
    ss_tot = float(np.dot(dy, dy))
    ss_res = float(np.dot(resid, resid))
    r2 = 1.0 if ss_tot == 0 else min(1.0, max(0.0, 1.0 - ss_res / ss_tot))
    return LcgFit(slope, intercept, float(np.max(np.abs(resid))), r2)


def is_lac_like(fit: LcgFit, threshold: float = 1e-6) -> bool:
    return math.isfinite(fit.max_residual) and fit.max_residual < threshold
