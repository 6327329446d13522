"""Static SVG 1.1 rendering.

Geometry is y-up; a single affine map takes it to pixel space (y-down) with a
5% margin around the bounding box, so one user unit is one pixel.
"""
from __future__ import annotations

import math
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .discrete import ArcChain

_HEADER = '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'


def _fmt(v: float) -> str:
    out = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if out in ("-0", "") else out


class _Frame:
    def __init__(self, points: np.ndarray, width_px: int):
        xmin, ymin = points.min(axis=0)
        xmax, ymax = points.max(axis=0)
        span = max(xmax - xmin, ymax - ymin)
        if span == 0:
            span = 1.0
        margin = 0.05 * span
        self.x0 = xmin - margin
        self.y1 = ymax + margin
        self.scale = width_px / (xmax - xmin + 2 * margin)
        self.width = width_px
        self.height = max(1, int(math.ceil((ymax - ymin + 2 * margin) * self.scale)))

    def map(self, x: float, y: float) -> Tuple[float, float]:
        return (x - self.x0) * self.scale, (self.y1 - y) * self.scale


def _document(frame: _Frame, body: str) -> str:
    return (_HEADER
            + f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
              f'width="{frame.width}" height="{frame.height}" viewBox="0 0 {frame.width} {frame.height}">\n'
            + body
            + "</svg>\n")


def polyline_svg(points: Sequence[Sequence[float]], width_px: int = 800) -> str:
    pts = np.asarray(points, dtype=float)
    frame = _Frame(pts, width_px)
    coords = " ".join("%s,%s" % tuple(map(_fmt, frame.map(x, y))) for x, y in pts)
    return _document(frame, f'  <polyline fill="none" stroke="black" stroke-width="1" points="{coords}"/>\n')


def arc_chain_svg(chain: ArcChain, width_px: int = 800, transform=None) -> str:
    """One path with an elliptical-arc command per arc.

    ``transform`` optionally maps start-frame points to world points (a pose).
    """
    move = transform or (lambda p: p)
    flat = np.array([move(tuple(p)) for p in chain.flatten(32)])
    frame = _Frame(flat, width_px)
    first = frame.map(*move(chain.arcs[0].start))
    parts: List[str] = [f"M {_fmt(first[0])} {_fmt(first[1])}"]
    for arc in chain.arcs:
        ex, ey = frame.map(*move(arc.end))
        r = _fmt(arc.radius * frame.scale)
        # counterclockwise in y-up space is sweep-flag 0 once y points down
        sweep = 0 if arc.sweep > 0 else 1
        large = 1 if abs(arc.sweep) > math.pi else 0
        parts.append(f"A {r} {r} 0 {large} {sweep} {_fmt(ex)} {_fmt(ey)}")
    d = " ".join(parts)
    return _document(frame, f'  <path fill="none" stroke="black" stroke-width="1" d="{d}"/>\n')
