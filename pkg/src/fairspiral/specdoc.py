"""Versioned JSON curve documents and conversion of any curve to a sample table.

A document looks like::

    {"version": 1, "kind": "lac", "params": {"alpha": 2, "c0": 2, "c1": 0},
     "domain": [0.1, 4], "pose": {"x": 0, "y": 0, "heading": 0}, "samples": 200}

``domain`` is the arc-length interval for pseudospirals, LACs and GLACs, the
tangent-angle interval for superspirals and the polar-angle interval for the
algebraic kinds. Discrete kinds ignore it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np

from . import algebraic, discrete, fairfam
from .core import CurveSamples, IntrinsicCurve, Pose, sample
from .errors import InvalidParameter, ValidationError
from .quadrature import integrate

SCHEMA_VERSION = 1

# kind -> (required params, optional params with defaults)
FAIR_KINDS = {
    "pseudospiral": (("m",), {"alpha": 1.0}),
    "lac": (("alpha", "c0", "c1"), {}),
    "glac": (("alpha", "c0", "c1", "c2"), {"shift": "radius"}),
    "superspiral": (("a", "b", "c"), {"scale": 1.0}),
}
DISCRETE_KINDS = {
    "theodorus": (("n",), {}),
    "spirangle": (("k", "turns"), {"step": 1.0}),
    "golden": (("quarter_turns",), {"r0": 1.0}),
}
POLAR_KINDS = {k.value: ((), {"a": 1.0, "b": None}) for k in algebraic.SpiralKind}
KINDS = {**FAIR_KINDS, **DISCRETE_KINDS, **POLAR_KINDS}

_INT_PARAMS = {"n", "k", "turns", "quarter_turns"}


class SpecError(ValidationError):
    pass


@dataclass(frozen=True)
class CurveSpecDocument:
    kind: str
    params: Dict[str, Any]
    domain: Optional[Tuple[float, float]] = None
    pose: Pose = field(default_factory=Pose)
    samples: int = 100
    version: int = SCHEMA_VERSION

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"version": self.version, "kind": self.kind, "params": dict(self.params)}
        if self.domain is not None:
            out["domain"] = list(self.domain)
        out["pose"] = {"x": self.pose.origin[0], "y": self.pose.origin[1], "heading": self.pose.heading}
        out["samples"] = self.samples
        return out


def _number(name, value, integer=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SpecError(f"parameter '{name}' must be a number, got {value!r}")
    if integer:
        if float(value) != int(value):
            raise SpecError(f"parameter '{name}' must be an integer, got {value!r}")
        return int(value)
    if not math.isfinite(value):
        raise SpecError(f"parameter '{name}' must be finite")
    return float(value)


def parse_spec(doc: Dict[str, Any]) -> CurveSpecDocument:
    """Validate a decoded JSON document."""
    if not isinstance(doc, dict):
        raise SpecError("spec must be a JSON object")
    version = doc.get("version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SpecError(f"unsupported spec version {version!r}")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise SpecError(f"unknown kind '{kind}'")
    required, optional = KINDS[kind]
    raw = doc.get("params", {}) or {}
    if not isinstance(raw, dict):
        raise SpecError("params must be an object")
    unknown = set(raw) - set(required) - set(optional)
    if unknown:
        raise SpecError(f"unknown parameter(s) for {kind}: {', '.join(sorted(unknown))}")
    params: Dict[str, Any] = {}
    for name in required:
        if name not in raw:
            raise SpecError(f"missing parameter '{name}' for {kind}")
    for name in (*required, *optional):
        if name in raw:
            value = raw[name]
        elif optional.get(name) is not None:
            value = optional[name]
        else:
            continue
        if name == "shift":
            if value not in ("radius", "curvature"):
                raise SpecError(f"shift must be 'radius' or 'curvature', got {value!r}")
            params[name] = value
        else:
            params[name] = _number(name, value, name in _INT_PARAMS)

    domain = doc.get("domain")
    if domain is not None:
        if not isinstance(domain, (list, tuple)) or len(domain) != 2:
            raise SpecError("domain must be [lo, hi]")
        domain = (_number("domain", domain[0]), _number("domain", domain[1]))
    elif kind in FAIR_KINDS:
        raise SpecError(f"kind {kind} needs a domain")

    pose_doc = doc.get("pose", {}) or {}
    if not isinstance(pose_doc, dict) or set(pose_doc) - {"x", "y", "heading"}:
        raise SpecError("pose must be an object with x, y, heading")
    pose = Pose((_number("pose.x", pose_doc.get("x", 0.0)), _number("pose.y", pose_doc.get("y", 0.0))),
                _number("pose.heading", pose_doc.get("heading", 0.0)))
    samples = _number("samples", doc.get("samples", 100), integer=True)
    if samples < 2:
        raise SpecError("samples must be at least 2")
    spec = CurveSpecDocument(kind, params, domain, pose, samples)
    build(spec)  # surface parameter errors now
    return spec


Built = Union[IntrinsicCurve, discrete.PolylineSpiral, discrete.ArcChain, algebraic.PolarSpiral]


def build(spec: CurveSpecDocument) -> Built:
    """Construct the curve object a document describes (pose not yet applied for discrete kinds)."""
    p, kind = spec.params, spec.kind
    try:
        if kind == "pseudospiral":
            return fairfam.make_pseudospiral(fairfam.PseudospiralParams(p["alpha"], p["m"]), spec.domain, spec.pose)
        if kind == "lac":
            return fairfam.make_lac(fairfam.LacParams(p["alpha"], p["c0"], p["c1"]), spec.domain, spec.pose)
        if kind == "glac":
            gp = fairfam.GlacParams(p["alpha"], p["c0"], p["c1"], p["c2"], p.get("shift", "radius"))
            return fairfam.make_glac(gp, spec.domain, spec.pose)
        if kind == "superspiral":
            return fairfam.make_superspiral(fairfam.SuperspiralParams(p["a"], p["b"], p["c"]), spec.domain,
                                            spec.pose, scale=p.get("scale", 1.0))
        if kind == "theodorus":
            return discrete.theodorus(p["n"])
        if kind == "spirangle":
            return discrete.spirangle(p["k"], p["turns"], p.get("step", 1.0))
        if kind == "golden":
            return discrete.golden_spiral(p["quarter_turns"], p.get("r0", 1.0))
        return algebraic.PolarSpiral(kind, p, spec.domain)
    except ValidationError:
        raise
    except (TypeError, ValueError) as exc:
        raise InvalidParameter(str(exc)) from exc


def _posed(pose: Pose, x: np.ndarray, y: np.ndarray, theta: np.ndarray):
    z = np.array([pose.apply(complex(a, b)) for a, b in zip(x, y)])
    return z.real.copy(), z.imag.copy(), theta + pose.heading


def polyline_table(poly: discrete.PolylineSpiral, pose: Pose) -> CurveSamples:
    """Vertices with cumulative chord length; segments are straight, so kappa is 0."""
    v = poly.vertices
    seg = np.diff(v, axis=0)
    s = np.concatenate([[0.0], np.cumsum(np.hypot(seg[:, 0], seg[:, 1]))])
    heading = np.arctan2(seg[:, 1], seg[:, 0])
    theta = np.concatenate([heading, heading[-1:]])
    x, y, theta = _posed(pose, v[:, 0], v[:, 1], theta)
    return CurveSamples(s, x, y, theta, np.zeros(len(v)))


def arc_chain_table(chain: discrete.ArcChain, pose: Pose, n: int) -> CurveSamples:
    per_arc = max(1, (n - 1) // len(chain))
    s, x, y, th, k = [0.0], [chain.arcs[0].start[0]], [chain.arcs[0].start[1]], \
        [chain.arcs[0].start_angle + math.pi / 2], [1.0 / chain.arcs[0].radius]
    for arc in chain.arcs:
        for j in range(1, per_arc + 1):
            ang = arc.start_angle + arc.sweep * j / per_arc
            px, py = arc.point(ang)
            s.append(s[-1] + arc.radius * arc.sweep / per_arc)
            x.append(px)
            y.append(py)
            th.append(ang + math.pi / 2)
            k.append(1.0 / arc.radius)
    xs, ys, ths = _posed(pose, np.array(x), np.array(y), np.array(th))
    return CurveSamples(np.array(s), xs, ys, ths, np.array(k))


def polar_table(spiral: algebraic.PolarSpiral, pose: Pose, n: int, tol: float = 1e-12) -> CurveSamples:
    phi = np.linspace(*spiral.phi_domain, n)

    def speed(t):
        r, d1, _ = algebraic.polar_derivatives(spiral, t)
        return math.hypot(r, d1)

    s = np.zeros(n)
    for i in range(n - 1):
        s[i + 1] = s[i] + integrate(speed, float(phi[i]), float(phi[i + 1]), tol, tol).value
    rho = np.array([algebraic.polar_rho(spiral, float(t)) for t in phi])
    theta = np.empty(n)
    kappa = np.empty(n)
    for i, t in enumerate(phi):
        r, d1, _ = algebraic.polar_derivatives(spiral, float(t))
        theta[i] = t + math.atan2(r, d1)
        kappa[i] = algebraic.polar_curvature(spiral, float(t))
    x, y, theta = _posed(pose, rho * np.cos(phi), rho * np.sin(phi), theta)
    return CurveSamples(s, x, y, theta, kappa)


def tabulate(spec: CurveSpecDocument, tol: float = 1e-12) -> CurveSamples:
    obj = build(spec)
    if isinstance(obj, IntrinsicCurve):
        return sample(obj, spec.samples, tol)
    if isinstance(obj, discrete.PolylineSpiral):
        return polyline_table(obj, spec.pose)
    if isinstance(obj, discrete.ArcChain):
        return arc_chain_table(obj, spec.pose, spec.samples)
    return polar_table(obj, spec.pose, spec.samples, tol)


def curve_document(curve: IntrinsicCurve, samples: int = 100) -> Dict[str, Any]:
    """Spec document for a curve built by one of the fair-family constructors."""
    if curve.family not in FAIR_KINDS:
        raise InvalidParameter(f"cannot describe a '{curve.family}' curve as a document")
    doc = CurveSpecDocument(curve.family, dict(curve.params), curve.domain, curve.pose, samples)
    return doc.to_dict()
