"""Discrete spirals: the Theodorus spiral, spirangles and the golden spiral."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .errors import InvalidParameter

PHI = (1.0 + math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class PolylineSpiral:
    vertices: np.ndarray  # shape (n, 2)

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or len(v) < 2:
            raise InvalidParameter("a polyline needs at least two 2D vertices")
        if np.any(np.all(np.diff(v, axis=0) == 0, axis=1)):
            raise InvalidParameter("consecutive polyline vertices must be distinct")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def __len__(self):
        return len(self.vertices)

    def segment_lengths(self) -> np.ndarray:
        return np.hypot(*np.diff(self.vertices, axis=0).T)


@dataclass(frozen=True)
class Arc:
    center: Tuple[float, float]
    radius: float
    start_angle: float
    sweep: float

    def point(self, angle: float) -> Tuple[float, float]:
        return (self.center[0] + self.radius * math.cos(angle),
                self.center[1] + self.radius * math.sin(angle))

    @property
    def start(self):
        return self.point(self.start_angle)

    @property
    def end(self):
        return self.point(self.start_angle + self.sweep)


@dataclass(frozen=True)
class ArcChain:
    arcs: Tuple[Arc, ...]

    def __len__(self):
        return len(self.arcs)

    def flatten(self, per_arc: int = 16) -> np.ndarray:
        """Points along the chain, ``per_arc`` segments per arc."""
        pts: List[Tuple[float, float]] = [self.arcs[0].start]
        for arc in self.arcs:
            for k in range(1, per_arc + 1):
                pts.append(arc.point(arc.start_angle + arc.sweep * k / per_arc))
        return np.array(pts)


def theodorus(n: int) -> PolylineSpiral:
    """Square-root spiral with ``n`` unit segments.

    Starts at ``(1, 0)``; each step adds a unit vector perpendicular
    (counterclockwise) to the current radius, so ``|P_k| = sqrt(k + 1)``.
    """
    if n < 1:
        raise InvalidParameter(f"theodorus needs n >= 1, got {n}")
    pts = np.empty((n + 1, 2))
    pts[0] = (1.0, 0.0)
    for k in range(n):
        x, y = pts[k]
        r = math.hypot(x, y)
        pts[k + 1] = (x - y / r, y + x / r)
    return PolylineSpiral(pts)


def spirangle(k: int, turns: int, step: float = 1.0) -> PolylineSpiral:
    """Polygonal spiral through ``k`` equally spaced directions.

    Segment ``i`` points along ``2*pi*i/k`` and has length
    ``step * (1 + i/k)``: every full cycle of ``k`` directions is ``step``
    longer than the previous one, and the vertices never revisit a point.
    """
    if k < 3:
        raise InvalidParameter(f"spirangle needs k >= 3, got {k}")
    if turns < 1 or not step > 0:
        raise InvalidParameter("spirangle needs turns >= 1 and step > 0")
    count = k * turns
    i = np.arange(count)
    angles = 2.0 * np.pi * i / k
    lengths = step * (1.0 + i / k)
    steps = np.column_stack([lengths * np.cos(angles), lengths * np.sin(angles)])
    return PolylineSpiral(np.vstack([[0.0, 0.0], np.cumsum(steps, axis=0)]))


def golden_spiral(quarter_turns: int, r0: float = 1.0) -> ArcChain:
    """Chain of counterclockwise quarter circles with radii ``r0 * PHI**i``.

    The first arc is centred at the origin and starts at ``(r0, 0)``. Each
    following centre sits at the corner of the next golden rectangle, which
    keeps the chain tangent-continuous.
    """
    if quarter_turns < 1 or not r0 > 0:
        raise InvalidParameter("golden_spiral needs quarter_turns >= 1 and r0 > 0")
    arcs = []
    center = (0.0, 0.0)
    start = 0.0
    for i in range(quarter_turns):
        radius = r0 * PHI ** i
        if arcs:
            ex, ey = arcs[-1].end
            center = (ex - radius * math.cos(start), ey - radius * math.sin(start))
        arcs.append(Arc(center, radius, start, math.pi / 2))
        start += math.pi / 2
    return ArcChain(tuple(arcs))
