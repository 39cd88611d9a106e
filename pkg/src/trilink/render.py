"""Publication-style SVG output for diagrams, scenes and 3D realizations.

Diagrams are drawn one path group per component; wherever a component
passes under a crossing its stroke is interrupted by a gap centered on
the crossing, so the number of breaks equals the crossing count.  3D
content is projected orthographically and painted back-to-front per
segment.  Output is deterministic: fixed float formatting, fixed element
order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .diagram import LinkDiagram
from .errors import InputError
from .geometry import (
    ArcPrim,
    CirclePrim,
    MarkerPrim,
    PatchPrim,
    Realization3D,
    Scene3D,
    SpherePrim,
    _projection_frame,
)

#: Default strand colors (first ring green, second blue, third red).
DEFAULT_COLORS = {"A": "#2e8b57", "B": "#27519f", "C": "#c23b22"}
_FALLBACK_COLOR = "#444444"


@dataclass(frozen=True)
class RenderStyle:
    """Stroke colors and measurements for diagram rendering."""

    colors: dict[str, str] = field(default_factory=lambda: dict(DEFAULT_COLORS))
    gap_width: float = 0.22
    stroke_width: float = 0.055
    canvas: tuple[int, int] = (480, 480)

    def __post_init__(self):
        if self.gap_width <= self.stroke_width:
            raise InputError(
                f"gap_width ({self.gap_width}) must exceed stroke_width "
                f"({self.stroke_width}) or under-strand breaks vanish"
            )

    def color(self, label: str) -> str:
        return self.colors.get(label, _FALLBACK_COLOR)


def _fmt(x: float) -> str:
    out = f"{x:.4f}"
    return "0.0000" if out == "-0.0000" else out


def _path_from_points(points: Sequence[tuple[float, float]], close: bool) -> str:
    cmds = [f"M {_fmt(points[0][0])} {_fmt(points[0][1])}"]
    for x, y in points[1:]:
        cmds.append(f"L {_fmt(x)} {_fmt(y)}")
    if close:
        cmds.append("Z")
    return " ".join(cmds)


def _cut_closed_path(
    points: Sequence[tuple[float, float]], cut_params: Sequence[float], gap: float
) -> list[list[tuple[float, float]]]:
    """Split a closed polyline into sub-arcs, removing a window at each cut.

    ``cut_params`` are arclength positions along the polyline; each cut
    removes the interval of length ``gap`` centered there.  Returns the
    kept arcs as point lists (resampled at the exact window boundaries).
    """
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    seg_vec = np.roll(pts, -1, axis=0) - pts
    seg_len = np.linalg.norm(seg_vec, axis=1)
    cumulative = np.concatenate(([0.0], np.cumsum(seg_len)))
    total = float(cumulative[-1])

    def at(s: float) -> tuple[float, float]:
        s = s % total
        k = int(np.searchsorted(cumulative, s, side="right")) - 1
        k = min(max(k, 0), n - 1)
        t = (s - cumulative[k]) / seg_len[k] if seg_len[k] > 0 else 0.0
        p = pts[k] + t * seg_vec[k]
        return (float(p[0]), float(p[1]))

    # Sweep the circle once; window boundaries close/open the current arc.
    events: list[tuple[float, int, str]] = []
    inside_at_zero = False
    for c in cut_params:
        s0 = (c - gap / 2.0) % total
        s1 = (s0 + gap) % total
        if s0 > s1:
            inside_at_zero = True
        events.append((s0, 0, "close"))
        events.append((s1, 0, "open"))
    for k in range(n):
        events.append((float(cumulative[k]), 1, "vertex"))
    events.sort(key=lambda e: (e[0], e[1]))

    arcs: list[list[tuple[float, float]]] = []
    open_arc = not inside_at_zero
    current: list[tuple[float, float]] = [at(0.0)] if open_arc else []
    for s, _, kind in events:
        if kind == "vertex":
            if open_arc:
                current.append(at(s))
        elif kind == "close":
            if open_arc:
                current.append(at(s))
                arcs.append(current)
                current = []
                open_arc = False
        else:  # open
            if not open_arc:
                current = [at(s)]
                open_arc = True
    if open_arc and current:
        if arcs and not inside_at_zero:
            arcs[0] = current + arcs[0]  # wraps through param 0
        else:
            current.append(at(0.0))
            arcs.append(current)
    return arcs


def _diagram_bounds(d: LinkDiagram) -> tuple[float, float, float, float]:
    xs: list[float] = []
    ys: list[float] = []
    for comp in d.components:
        if comp.path is None:
            raise InputError(
                f"component {comp.label} lacks planar position data; cannot render"
            )
        xs.extend(p[0] for p in comp.path)
        ys.extend(p[1] for p in comp.path)
    return min(xs), min(ys), max(xs), max(ys)


def svg_diagram(d: LinkDiagram, style: RenderStyle | None = None) -> str:
    """Render a diagram with under-strand gaps; deterministic SVG 1.1 text."""
    style = style or RenderStyle()
    x0, y0, x1, y1 = _diagram_bounds(d)
    width, height = style.canvas
    margin = 0.08 * max(x1 - x0, y1 - y0)
    x0, y0, x1, y1 = x0 - margin, y0 - margin, x1 + margin, y1 + margin
    scale = min(width / (x1 - x0), height / (y1 - y0))

    def to_px(p: tuple[float, float]) -> tuple[float, float]:
        return ((p[0] - x0) * scale, height - (p[1] - y0) * scale)

    stroke_px = style.stroke_width * scale
    groups: list[str] = []
    for comp in d.components:
        cuts = [
            v.path_param
            for v in comp.visits
            if v.role == "under" and v.path_param is not None
        ]
        under_count = sum(1 for v in comp.visits if v.role == "under")
        if len(cuts) != under_count:
            raise InputError(
                f"component {comp.label} lacks path parameters for its crossings"
            )
        color = style.color(comp.label)
        if cuts:
            arcs = _cut_closed_path(comp.path, cuts, style.gap_width)
            body = " ".join(
                _path_from_points([to_px(p) for p in arc], close=False)
                for arc in arcs
            )
        else:
            body = _path_from_points([to_px(p) for p in comp.path], close=True)
        groups.append(
            f'  <g id="component-{comp.label}" data-gaps="{len(cuts)}">\n'
            f'    <path d="{body}" fill="none" stroke="{color}" '
            f'stroke-width="{_fmt(stroke_px)}" stroke-linecap="round"/>\n'
            f"  </g>"
        )
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        *groups,
        "</svg>",
    ]
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# Orthographic 3D rendering
# ---------------------------------------------------------------------------


def _sample_primitive(prim: object) -> list[tuple[str, np.ndarray]]:
    """Turn a primitive into (tag, 3D polyline) pieces for projection."""
    out: list[tuple[str, np.ndarray]] = []
    if isinstance(prim, CirclePrim):
        from .geometry import _circle_points

        out.append((prim.tag, _circle_points(prim, 96)))
    elif isinstance(prim, ArcPrim):
        from .geometry import _circle_frame

        e1, e2 = _circle_frame(CirclePrim(prim.center, prim.normal, prim.radius))
        t = np.linspace(prim.angle_start, prim.angle_end, 48)
        pts = (
            np.asarray(prim.center)
            + prim.radius * (np.outer(np.cos(t), e1) + np.outer(np.sin(t), e2))
        )
        out.append((prim.tag, pts))
    elif isinstance(prim, PatchPrim):
        grid = prim.grid
        for i in range(0, grid.shape[0], 4):
            out.append((prim.tag, grid[i]))
        for j in range(0, grid.shape[1], 4):
            out.append((prim.tag, grid[:, j]))
    return out


def svg_scene(
    subject: Scene3D | Realization3D,
    camera: Sequence[float] = (0.55, -1.0, 0.6),
    scale_px: int = 420,
) -> str:
    """Orthographic projection of a scene or realization as SVG 1.1.

    Polyline content is split into segments and painted back-to-front;
    spheres become silhouette circles ordered by center depth; markers
    become dots.  ``camera`` is the viewing direction (toward the viewer).
    """
    direction = np.asarray(camera, dtype=float)
    if float(np.linalg.norm(direction)) < 1e-12:
        raise InputError("camera direction must be a nonzero vector")
    u, v, d = _projection_frame(direction)

    curves: list[tuple[str, np.ndarray, bool]] = []  # (tag, points, closed)
    spheres: list[SpherePrim] = []
    markers: list[MarkerPrim] = []
    if isinstance(subject, Realization3D):
        for curve in subject.curves:
            curves.append((f"curve-{curve.label}", curve.points, True))
        colors = dict(DEFAULT_COLORS)
    elif isinstance(subject, Scene3D):
        for prim in subject.primitives:
            if isinstance(prim, SpherePrim):
                spheres.append(prim)
            elif isinstance(prim, MarkerPrim):
                markers.append(prim)
            else:
                for tag, pts in _sample_primitive(prim):
                    closed = isinstance(prim, CirclePrim)
                    curves.append((tag, pts, closed))
        colors = {}
    else:
        raise InputError(f"cannot render object of type {type(subject).__name__}")

    segments: list[tuple[float, str, tuple[float, float], tuple[float, float]]] = []
    all_xy: list[np.ndarray] = []
    for tag, pts, closed in curves:
        xy = np.stack([pts @ u, pts @ v], axis=1)
        depth = pts @ d
        all_xy.append(xy)
        count = len(pts) if closed else len(pts) - 1
        for k in range(count):
            k2 = (k + 1) % len(pts)
            segments.append(
                (
                    float(depth[k] + depth[k2]) / 2.0,
                    tag,
                    (float(xy[k][0]), float(xy[k][1])),
                    (float(xy[k2][0]), float(xy[k2][1])),
                )
            )
    sphere_records = []
    for sphere in spheres:
        c = np.asarray(sphere.center)
        sphere_records.append(
            (float(c @ d), (float(c @ u), float(c @ v)), sphere.radius)
        )
        ring = np.linspace(0.0, 2.0 * math.pi, 8)
        all_xy.append(
            np.stack(
                [c @ u + sphere.radius * np.cos(ring), c @ v + sphere.radius * np.sin(ring)],
                axis=1,
            )
        )
    marker_records = []
    for marker in markers:
        p = np.asarray(marker.position)
        marker_records.append((marker.tag, (float(p @ u), float(p @ v))))
        all_xy.append(np.array([[float(p @ u), float(p @ v)]]))

    stacked = np.vstack(all_xy)
    x0, y0 = stacked.min(axis=0)
    x1, y1 = stacked.max(axis=0)
    span = max(x1 - x0, y1 - y0, 1e-9)
    margin = 0.08 * span
    x0, y0, span = x0 - margin, y0 - margin, span + 2 * margin
    scale = scale_px / span

    def to_px(p: tuple[float, float]) -> tuple[float, float]:
        return ((p[0] - x0) * scale, scale_px - (p[1] - y0) * scale)

    body: list[str] = []
    for depth, center_xy, radius in sorted(sphere_records, key=lambda rec: rec[0]):
        cx, cy = to_px(center_xy)
        body.append(
            f'  <circle class="sphere" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
            f'r="{_fmt(radius * scale)}" fill="#f3f3f3" fill-opacity="0.85" '
            f'stroke="#666666" stroke-width="1.5"/>'
        )
    for depth, tag, p1, p2 in sorted(segments, key=lambda rec: rec[0]):
        a = to_px(p1)
        b = to_px(p2)
        color = colors.get(tag.removeprefix("curve-"), "#333333")
        body.append(
            f'  <line class="{tag}" x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" '
            f'x2="{_fmt(b[0])}" y2="{_fmt(b[1])}" stroke="{color}" '
            f'stroke-width="2.4" stroke-linecap="round"/>'
        )
    for tag, pos in marker_records:
        cx, cy = to_px(pos)
        body.append(
            f'  <circle class="{tag}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="4" '
            f'fill="#111111"/>'
        )
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{scale_px}" height="{scale_px}" viewBox="0 0 {scale_px} {scale_px}">',
        *body,
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
