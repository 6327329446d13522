"""Polar catalog of classical algebraic spirals.

=============  ==========================  ===========
kind           rho(phi)                    direction
=============  ==========================  ===========
archimedean    a*phi                       increasing
hyperbolic     a/phi                       decreasing
fermat         a*sqrt(phi)                 increasing
lituus         a/sqrt(phi)                 decreasing
galilean       a - b*phi**2                decreasing
parabolic      b + a*sqrt(phi)             increasing
cochleoid      a*sin(phi)/phi              decreasing on (0, pi]
=============  ==========================  ===========

Only the nonnegative branch of the two-branch curves is exposed, so every
kind is single valued in ``phi >= 0``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from .discrete import PolylineSpiral
from .errors import InvalidParameter, OutOfDomain


class SpiralKind(str, enum.Enum):
    ARCHIMEDEAN = "archimedean"
    HYPERBOLIC = "hyperbolic"
    FERMAT = "fermat"
    LITUUS = "lituus"
    GALILEAN = "galilean"
    PARABOLIC = "parabolic"
    COCHLEOID = "cochleoid"


# (standard domain, monotonic direction of rho on it)
CATALOG: Dict[SpiralKind, Tuple[Tuple[float, float], str]] = {
    SpiralKind.ARCHIMEDEAN: ((0.0, 6 * math.pi), "increasing"),
    SpiralKind.HYPERBOLIC: ((0.5, 6 * math.pi), "decreasing"),
    SpiralKind.FERMAT: ((0.0, 6 * math.pi), "increasing"),
    SpiralKind.LITUUS: ((0.1, 6 * math.pi), "decreasing"),
    SpiralKind.GALILEAN: ((0.0, 2 * math.pi), "decreasing"),
    SpiralKind.PARABOLIC: ((0.0, 6 * math.pi), "increasing"),
    SpiralKind.COCHLEOID: ((0.0, math.pi), "decreasing"),
}

_DEFAULT_COEFFS = {"a": 1.0, "b": 0.0}


@dataclass(frozen=True)
class PolarSpiral:
    kind: SpiralKind
    coefficients: Dict[str, float] = field(default_factory=dict, compare=False)
    phi_domain: Tuple[float, float] = None

    def __post_init__(self):
        kind = SpiralKind(self.kind)
        object.__setattr__(self, "kind", kind)
        coeffs = dict(_DEFAULT_COEFFS)
        if kind is SpiralKind.GALILEAN:
            coeffs["b"] = 1.0
        coeffs.update(self.coefficients or {})
        unknown = set(coeffs) - set(_DEFAULT_COEFFS)
        if unknown:
            raise InvalidParameter(f"unknown coefficients for {kind.value}: {sorted(unknown)}")
        if not coeffs["a"] > 0 or coeffs["b"] < 0:
            raise InvalidParameter("polar spiral coefficients must be positive (a > 0, b >= 0)")
        object.__setattr__(self, "coefficients", coeffs)
        dom = self.phi_domain if self.phi_domain is not None else CATALOG[kind][0]
        lo, hi = float(dom[0]), float(dom[1])
        if not lo < hi or lo < 0 or not math.isfinite(hi):
            raise InvalidParameter(f"phi_domain must satisfy 0 <= lo < hi < inf, got {dom!r}")
        object.__setattr__(self, "phi_domain", (lo, hi))
        for phi in (lo, 0.5 * (lo + hi), hi):
            polar_rho(self, phi)

    @property
    def a(self) -> float:
        return self.coefficients["a"]

    @property
    def b(self) -> float:
        return self.coefficients["b"]


def polar_rho(spiral: PolarSpiral, phi: float) -> float:
    """Polar radius at angle ``phi``."""
    a, b, kind = spiral.a, spiral.b, spiral.kind
    if phi < 0:
        raise OutOfDomain(f"{kind.value}: only phi >= 0 is supported, got {phi}")
    if kind is SpiralKind.ARCHIMEDEAN:
        return a * phi
    if kind is SpiralKind.FERMAT:
        return a * math.sqrt(phi)
    if kind is SpiralKind.PARABOLIC:
        return b + a * math.sqrt(phi)
    if kind is SpiralKind.GALILEAN:
        return a - b * phi * phi
    if kind is SpiralKind.COCHLEOID:
        return a if phi == 0 else a * math.sin(phi) / phi
    if phi == 0:
        raise OutOfDomain(f"{kind.value} spiral is undefined at phi = 0")
    if kind is SpiralKind.HYPERBOLIC:
        return a / phi
    return a / math.sqrt(phi)  # lituus


def polar_derivatives(spiral: PolarSpiral, phi: float) -> Tuple[float, float, float]:
    """``(rho, d rho/d phi, d2 rho/d phi2)``; infinite where the curve is singular."""
    a, b, kind = spiral.a, spiral.b, spiral.kind
    rho = polar_rho(spiral, phi)
    if kind is SpiralKind.ARCHIMEDEAN:
        return rho, a, 0.0
    if kind is SpiralKind.GALILEAN:
        return rho, -2 * b * phi, -2 * b
    if kind in (SpiralKind.FERMAT, SpiralKind.PARABOLIC):
        if phi == 0:
            return rho, math.inf, -math.inf
        return rho, a / (2 * math.sqrt(phi)), -a / (4 * phi ** 1.5)
    if kind is SpiralKind.HYPERBOLIC:
        return rho, -a / phi ** 2, 2 * a / phi ** 3
    if kind is SpiralKind.LITUUS:
        return rho, -0.5 * a * phi ** -1.5, 0.75 * a * phi ** -2.5
    if phi == 0:  # cochleoid, series limits
        return rho, 0.0, -a / 3.0
    s, c = math.sin(phi), math.cos(phi)
    return rho, a * (phi * c - s) / phi ** 2, a * (2 * s - 2 * phi * c - phi * phi * s) / phi ** 3


def polar_curvature(spiral: PolarSpiral, phi: float) -> float:
    r, d1, d2 = polar_derivatives(spiral, phi)
    if math.isinf(d1):
        return 0.0
    denom = (r * r + d1 * d1) ** 1.5
    return (r * r + 2 * d1 * d1 - r * d2) / denom


def polar_sample(spiral: PolarSpiral, n: int) -> PolylineSpiral:
    """``n`` Cartesian points at uniform ``phi`` steps across the domain."""
    if n < 2:
        raise InvalidParameter(f"need at least 2 samples, got {n}")
    phi = np.linspace(*spiral.phi_domain, n)
    rho = np.array([polar_rho(spiral, float(t)) for t in phi])
    return PolylineSpiral(np.column_stack([rho * np.cos(phi), rho * np.sin(phi)]))
