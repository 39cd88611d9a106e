"""3D curve realizations, linking numbers of space curves, scene generators.

Two independent routes to the linking number are provided: a combinatorial
one (signed crossings of a generic planar projection, halved) and a
numeric one (midpoint-rule double sum over segment pairs approximating the
linking integral).  They must agree on every realized pair.

Projection directions are drawn from a seeded generator
(``numpy.random.default_rng(DIRECTION_SEED)``) so retries are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .diagram import LinkDiagram, PlanarStrand, diagram_from_strands
from .errors import DegeneracyError, InputError

DIRECTION_SEED = 61803
MIN_CURVE_SEPARATION = 1e-6
GENERIC_TOL = 1e-9
MAX_DIRECTION_RETRIES = 100
DEFAULT_SEGMENTS = 256

REALIZE_KINDS = ("torus-villarceau", "borromean-ellipses")
SCENE_KINDS = ("tangent-circles", "great-circles", "horn-torus", "tangent-spheres")


@dataclass(frozen=True, eq=False)
class PolyCurve3:
    """A closed polygonal curve in 3-space (last point connects to first)."""

    label: str
    points: np.ndarray  # (n, 3)

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 3 or pts.shape[0] < 8:
            raise InputError("a curve needs at least 8 points of dimension 3")
        seg = np.roll(pts, -1, axis=0) - pts
        if np.any(np.linalg.norm(seg, axis=1) == 0.0):
            raise InputError("curve has a zero-length segment")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def segment_count(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Realization3D:
    """A set of closed space curves with construction metadata."""

    curves: tuple[PolyCurve3, ...]
    kind: str
    params: dict[str, float] = field(default_factory=dict)


# -- scene primitives --------------------------------------------------------


@dataclass(frozen=True)
class CirclePrim:
    center: tuple[float, float, float]
    normal: tuple[float, float, float]
    radius: float
    tag: str = "circle"


@dataclass(frozen=True)
class SpherePrim:
    center: tuple[float, float, float]
    radius: float
    tag: str = "sphere"


@dataclass(frozen=True)
class MarkerPrim:
    position: tuple[float, float, float]
    tag: str = "marker"


@dataclass(frozen=True)
class ArcPrim:
    """Circular arc: part of the circle (center, normal, radius) between two angles."""

    center: tuple[float, float, float]
    normal: tuple[float, float, float]
    radius: float
    angle_start: float
    angle_end: float
    tag: str = "arc"


@dataclass(frozen=True)
class PatchPrim:
    """Parametric surface sample grid, shape (nu, nv, 3)."""

    grid: np.ndarray
    tag: str = "patch"


@dataclass(frozen=True)
class Scene3D:
    kind: str
    primitives: tuple[object, ...]


# ---------------------------------------------------------------------------
# Realizations
# ---------------------------------------------------------------------------


def _rotation_z(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def _villarceau_curves(R: float, r: float, segments: int) -> list[np.ndarray]:
    """Three same-family bitangent-plane circles of the torus (R, r).

    The cutting plane through the axis point makes angle asin(r/R) with
    the equatorial plane; each section circle has radius R and center at
    distance r from the axis, inside the plane.  Rotating one such circle
    about the axis by 120 and 240 degrees stays on the same torus, and
    distinct family members are pairwise linked once.
    """
    alpha = math.asin(r / R)
    t = np.linspace(0.0, 2.0 * math.pi, segments, endpoint=False)
    base = np.stack(
        [
            R * math.cos(alpha) * np.cos(t),
            r + R * np.sin(t),
            R * math.sin(alpha) * np.cos(t),
        ],
        axis=1,
    )
    return [base @ _rotation_z(2.0 * math.pi * k / 3.0).T for k in range(3)]


def _ellipse_curves(a: float, b: float, segments: int) -> list[np.ndarray]:
    """Three axis-aligned ellipses, one per coordinate plane, cyclic semi-axes."""
    t = np.linspace(0.0, 2.0 * math.pi, segments, endpoint=False)
    ca, sb = a * np.cos(t), b * np.sin(t)
    zero = np.zeros_like(t)
    in_xy = np.stack([ca, sb, zero], axis=1)  # a along x, b along y
    in_yz = np.stack([zero, ca, sb], axis=1)  # a along y, b along z
    in_zx = np.stack([sb, zero, ca], axis=1)  # a along z, b along x
    return [in_xy, in_yz, in_zx]


def realize(kind: str, segments: int = DEFAULT_SEGMENTS, **params: float) -> Realization3D:
    """Build a named 3D realization.

    ``torus-villarceau`` accepts ``R`` and ``r`` (defaults 2, 1) with
    R > r > 0; ``borromean-ellipses`` accepts ``a`` and ``b`` (defaults
    1.5, 0.8) with a > b > 0.  ``segments`` must be at least 64.
    """
    if segments < 64:
        raise InputError(f"segments must be >= 64, got {segments}")
    if kind == "torus-villarceau":
        R = float(params.pop("R", 2.0))
        r = float(params.pop("r", 1.0))
        if params:
            raise InputError(f"unknown parameters: {sorted(params)}")
        if not (R > r > 0):
            raise InputError(f"constraint R > r > 0 violated (R={R}, r={r})")
        curves = _villarceau_curves(R, r, segments)
        used = {"R": R, "r": r}
    elif kind == "borromean-ellipses":
        a = float(params.pop("a", 1.5))
        b = float(params.pop("b", 0.8))
        if params:
            raise InputError(f"unknown parameters: {sorted(params)}")
        if not (a > b > 0):
            raise InputError(f"constraint a > b > 0 violated (a={a}, b={b})")
        curves = _ellipse_curves(a, b, segments)
        used = {"a": a, "b": b}
    else:
        raise InputError(
            f"unknown realization {kind!r}; valid kinds: " + ", ".join(REALIZE_KINDS)
        )
    labeled = tuple(
        PolyCurve3(label, pts) for label, pts in zip(("A", "B", "C"), curves)
    )
    return Realization3D(curves=labeled, kind=kind, params=used)


def hopf_circles(segments: int = DEFAULT_SEGMENTS) -> Realization3D:
    """Two unit circles in orthogonal planes, each through the other's center."""
    t = np.linspace(0.0, 2.0 * math.pi, segments, endpoint=False)
    zero = np.zeros_like(t)
    first = np.stack([np.cos(t), np.sin(t), zero], axis=1)
    second = np.stack([1.0 + np.cos(t), zero, np.sin(t)], axis=1)
    return Realization3D(
        curves=(PolyCurve3("A", first), PolyCurve3("B", second)),
        kind="hopf-circles",
        params={},
    )


def separated_circles(segments: int = DEFAULT_SEGMENTS) -> Realization3D:
    """Two far-apart unit circles in parallel planes (a split pair)."""
    t = np.linspace(0.0, 2.0 * math.pi, segments, endpoint=False)
    zero = np.zeros_like(t)
    first = np.stack([np.cos(t), np.sin(t), zero], axis=1)
    second = np.stack([4.0 + np.cos(t), np.sin(t), zero + 2.0], axis=1)
    return Realization3D(
        curves=(PolyCurve3("A", first), PolyCurve3("B", second)),
        kind="separated-circles",
        params={},
    )


def sub_realization(r: Realization3D, labels: Sequence[str]) -> Realization3D:
    """Restriction of a realization to the named curves."""
    wanted = []
    for label in labels:
        matches = [c for c in r.curves if c.label == label]
        if not matches:
            raise InputError(f"no curve labeled {label!r}")
        wanted.append(matches[0])
    return Realization3D(curves=tuple(wanted), kind=r.kind, params=dict(r.params))


# ---------------------------------------------------------------------------
# Scenes
# ---------------------------------------------------------------------------


def _triangle_centers(distance: float) -> list[tuple[float, float, float]]:
    out = []
    for angle_deg in (90.0, 210.0, 330.0):
        a = math.radians(angle_deg)
        out.append((distance * math.cos(a), distance * math.sin(a), 0.0))
    return out


def scene(kind: str) -> Scene3D:
    """Build one of the fixed gallery scenes (see ``SCENE_KINDS``)."""
    z_axis = (0.0, 0.0, 1.0)
    if kind == "tangent-circles":
        centers = _triangle_centers(2.0 / math.sqrt(3.0))
        prims: list[object] = [CirclePrim(c, z_axis, 1.0) for c in centers]
        for i in range(3):
            j = (i + 1) % 3
            touch = tuple(
                (centers[i][k] + centers[j][k]) / 2.0 for k in range(3)
            )
            prims.append(MarkerPrim(touch, tag="tangency"))
        # The three arcs facing the centroid bound the central cusped region.
        for i, center in enumerate(centers):
            others = [centers[j] for j in range(3) if j != i]
            angles = sorted(
                math.atan2(
                    (center[1] + other[1]) / 2.0 - center[1],
                    (center[0] + other[0]) / 2.0 - center[0],
                )
                for other in others
            )
            lo, hi = angles
            if hi - lo > math.pi:
                lo, hi = hi, lo + 2.0 * math.pi
            prims.append(ArcPrim(center, z_axis, 1.0, lo, hi))
        return Scene3D(kind=kind, primitives=tuple(prims))
    if kind == "great-circles":
        center = (0.0, 0.0, 0.0)
        prims = [
            SpherePrim(center, 1.0),
            CirclePrim(center, (0.0, 0.0, 1.0), 1.0),
            CirclePrim(center, (1.0, 0.0, 0.0), 1.0),
            CirclePrim(center, (0.0, 1.0, 0.0), 1.0),
        ]
        return Scene3D(kind=kind, primitives=tuple(prims))
    if kind == "horn-torus":
        # Tube radius equals center-circle radius: the hole shrinks to a point.
        R = r = 1.0
        nu, nv = 48, 25  # odd nv keeps the pinch point on the sample grid
        u = np.linspace(0.0, 2.0 * math.pi, nu)
        v = np.linspace(0.0, 2.0 * math.pi, nv)
        uu, vv = np.meshgrid(u, v, indexing="ij")
        grid = np.stack(
            [
                (R + r * np.cos(vv)) * np.cos(uu),
                (R + r * np.cos(vv)) * np.sin(uu),
                r * np.sin(vv),
            ],
            axis=2,
        )
        prims = [PatchPrim(grid)]
        # Three sweep positions of the revolving circle, all through the origin.
        for k in range(3):
            phi = 2.0 * math.pi * k / 3.0
            center = (R * math.cos(phi), R * math.sin(phi), 0.0)
            normal = (-math.sin(phi), math.cos(phi), 0.0)
            prims.append(CirclePrim(center, normal, r, tag="sweep"))
        prims.append(MarkerPrim((0.0, 0.0, 0.0), tag="cusp"))
        return Scene3D(kind=kind, primitives=tuple(prims))
    if kind == "tangent-spheres":
        centers = _triangle_centers(2.0 / math.sqrt(3.0))
        prims = [SpherePrim(c, 1.0) for c in centers]
        return Scene3D(kind=kind, primitives=tuple(prims))
    raise InputError(f"unknown scene {kind!r}; valid kinds: " + ", ".join(SCENE_KINDS))


def _circle_frame(prim: CirclePrim) -> tuple[np.ndarray, np.ndarray]:
    n = np.asarray(prim.normal, dtype=float)
    n = n / np.linalg.norm(n)
    helper = np.array([0.0, 0.0, 1.0]) if abs(n[2]) < 0.9 else np.array([1.0, 0.0, 0.0])
    e1 = np.cross(helper, n)
    e1 = e1 / np.linalg.norm(e1)
    e2 = np.cross(n, e1)
    return e1, e2


def _circle_points(prim: CirclePrim, segments: int, phase: float = 0.0) -> np.ndarray:
    e1, e2 = _circle_frame(prim)
    t = phase + np.linspace(0.0, 2.0 * math.pi, segments, endpoint=False)
    return (
        np.asarray(prim.center)
        + prim.radius * (np.outer(np.cos(t), e1) + np.outer(np.sin(t), e2))
    )


def scene_curves(s: Scene3D, segments: int = DEFAULT_SEGMENTS) -> Realization3D:
    """Sample every circle primitive of a scene as a closed polygonal curve.

    For the tangent-circles scene the sampling phase is aligned so the two
    tangency points of each circle land exactly on polyline vertices (the
    tangency directions are 120 degrees apart, so the segment count is
    rounded down to a multiple of 3); the sampled curves then truly touch.
    """
    circles = [p for p in s.primitives if isinstance(p, CirclePrim)]
    if not circles:
        raise InputError(f"scene {s.kind!r} has no circle primitives to sample")
    markers = [p for p in s.primitives if isinstance(p, MarkerPrim) and p.tag == "tangency"]
    curves = []
    for idx, prim in enumerate(circles):
        phase = 0.0
        n = segments
        if s.kind == "tangent-circles" and markers:
            n = max(64, segments - segments % 3)
            center = np.asarray(prim.center)
            touch = min(
                (np.asarray(m.position) for m in markers),
                key=lambda p: abs(float(np.linalg.norm(p - center)) - prim.radius),
            )
            e1, e2 = _circle_frame(prim)
            rel = touch - center
            phase = math.atan2(float(rel @ e2), float(rel @ e1))
        curves.append(PolyCurve3(f"S{idx}", _circle_points(prim, n, phase)))
    return Realization3D(curves=tuple(curves), kind=s.kind, params={})


# ---------------------------------------------------------------------------
# Distances and certificates
# ---------------------------------------------------------------------------


def _segments_of(curve: PolyCurve3) -> tuple[np.ndarray, np.ndarray]:
    p = curve.points
    return p, np.roll(p, -1, axis=0)


def _segment_pair_distances(a0, a1, b0, b1) -> np.ndarray:
    """Pairwise distances between segment sets [a0,a1] and [b0,b1]."""
    d1 = a1 - a0  # (n,3)
    d2 = b1 - b0  # (m,3)
    r = a0[:, None, :] - b0[None, :, :]  # (n,m,3)
    a = np.einsum("ij,ij->i", d1, d1)[:, None]
    e = np.einsum("ij,ij->i", d2, d2)[None, :]
    f = np.einsum("mj,nmj->nm", d2, r)
    c = np.einsum("nj,nmj->nm", d1, r)
    b = np.einsum("nj,mj->nm", d1, d2)
    denom = a * e - b * b
    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.where(denom > 1e-30, (b * f - c * e) / denom, 0.0)
    s = np.clip(s, 0.0, 1.0)
    t = np.where(e > 1e-30, (b * s + f) / e, 0.0)
    t_clamped = np.clip(t, 0.0, 1.0)
    s = np.where(e > 1e-30, (b * t_clamped - c) / a, s)
    s = np.clip(s, 0.0, 1.0)
    closest_a = a0[:, None, :] + s[:, :, None] * d1[:, None, :]
    closest_b = b0[None, :, :] + t_clamped[:, :, None] * d2[None, :, :]
    return np.linalg.norm(closest_a - closest_b, axis=2)


def curve_distance(a: PolyCurve3, b: PolyCurve3) -> float:
    """Minimum distance between two closed polygonal curves."""
    a0, a1 = _segments_of(a)
    b0, b1 = _segments_of(b)
    return float(_segment_pair_distances(a0, a1, b0, b1).min())


def validate_disjoint(r: Realization3D) -> float:
    """Minimum pairwise inter-curve distance (callers decide what is enough)."""
    if len(r.curves) < 2:
        raise InputError("disjointness needs at least two curves")
    best = math.inf
    for i in range(len(r.curves)):
        for j in range(i + 1, len(r.curves)):
            best = min(best, curve_distance(r.curves[i], r.curves[j]))
    return best


def circularity_stats(curve: PolyCurve3) -> tuple[np.ndarray, float, float, float]:
    """(center, min radius, max radius, max |radius - mean|) about the point mean."""
    center = curve.points.mean(axis=0)
    radii = np.linalg.norm(curve.points - center, axis=1)
    mean = float(radii.mean())
    return center, float(radii.min()), float(radii.max()), float(
        np.abs(radii - mean).max()
    )


def roundness_deviation(curve: PolyCurve3) -> float:
    """Max deviation of point distances from a perfect circle about the centroid."""
    return circularity_stats(curve)[3]


def noncircularity_ratio(curve: PolyCurve3) -> float:
    """Max-over-min distance from the centroid (1 for a round circle)."""
    _, rmin, rmax, _ = circularity_stats(curve)
    return rmax / rmin


# ---------------------------------------------------------------------------
# Linking numbers of space curves
# ---------------------------------------------------------------------------


def _direction_candidates():
    """Deterministic stream of unit projection directions."""
    rng = np.random.default_rng(DIRECTION_SEED)
    while True:
        v = rng.normal(size=3)
        norm = np.linalg.norm(v)
        if norm > 1e-6:
            yield v / norm


def _projection_frame(direction: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Projection frame (u, v, d); depth is p . d, larger depth passes over.

    The in-plane axes are ordered so that the crossing-sign rule of the
    diagram module, summed over a projection and halved, reproduces the
    canonical linking integral with its sign (checked against a
    surface-intersection count on the Hopf configuration).
    """
    d = np.asarray(direction, dtype=float)
    norm = np.linalg.norm(d)
    if norm < 1e-12:
        raise InputError("projection direction must be a nonzero vector")
    d = d / norm
    helper = np.array([1.0, 0.0, 0.0]) if abs(d[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    u = np.cross(helper, d)
    u = u / np.linalg.norm(u)
    v = np.cross(u, d)
    return u, v, d


def _project_curves(
    curves: Sequence[PolyCurve3], direction: np.ndarray
) -> list[PlanarStrand]:
    u, v, d = _projection_frame(direction)
    strands = []
    for curve in curves:
        xy = np.stack([curve.points @ u, curve.points @ v], axis=1)
        depth = curve.points @ d
        strands.append(
            PlanarStrand(
                label=curve.label,
                points=tuple(map(tuple, xy)),
                depths=tuple(depth.tolist()),
            )
        )
    return strands


def _check_separation(a: PolyCurve3, b: PolyCurve3) -> None:
    dist = curve_distance(a, b)
    if dist <= MIN_CURVE_SEPARATION:
        raise InputError(
            f"curves {a.label!r} and {b.label!r} are too close to link "
            f"(distance {dist:.3g} <= {MIN_CURVE_SEPARATION})"
        )


def linking_number_3d(
    a: PolyCurve3, b: PolyCurve3, direction: np.ndarray | str = "auto"
) -> int:
    """Signed linking number via signed crossings of a generic projection.

    With ``direction="auto"`` the seeded candidate stream is consumed until
    a generic direction is found (at most ``MAX_DIRECTION_RETRIES``).
    """
    _check_separation(a, b)
    if isinstance(direction, str):
        if direction != "auto":
            raise InputError(f"direction must be a vector or 'auto', got {direction!r}")
        candidates = _direction_candidates()
        budget = MAX_DIRECTION_RETRIES
    else:
        candidates = iter([np.asarray(direction, dtype=float)])
        budget = 1
    last_error: Exception | None = None
    for _ in range(budget):
        try:
            d = next(candidates)
        except StopIteration:
            break
        try:
            diagram = diagram_from_strands(
                _project_curves([a, b], d), tol=GENERIC_TOL
            )
        except DegeneracyError as exc:
            last_error = exc
            continue
        total = 0
        through = {i: [] for i in range(diagram.crossing_count)}
        for comp in diagram.components:
            for visit in comp.visits:
                through[visit.crossing].append(comp.label)
        for idx, crossing in enumerate(diagram.crossings):
            labels = through[idx]
            if labels[0] != labels[1]:
                total += crossing.sign
        if total % 2 != 0:
            last_error = DegeneracyError("odd inter-curve crossing sign sum")
            continue
        return total // 2
    raise DegeneracyError(
        f"no generic projection direction found: {last_error}"
    )


def gauss_linking_integral(a: PolyCurve3, b: PolyCurve3) -> float:
    """Midpoint-rule double sum over segment pairs for the linking integral.

    Converges to the integer linking number as the curves are refined.
    """
    _check_separation(a, b)
    a0, a1 = _segments_of(a)
    b0, b1 = _segments_of(b)
    ma = (a0 + a1) / 2.0
    mb = (b0 + b1) / 2.0
    da = a1 - a0
    db = b1 - b0
    diff = ma[:, None, :] - mb[None, :, :]
    cross = np.cross(da[:, None, :], db[None, :, :])
    numer = np.einsum("nmj,nmj->nm", diff, cross)
    dist3 = np.linalg.norm(diff, axis=2) ** 3
    return float(np.sum(numer / dist3) / (4.0 * math.pi))


def diagram_from_curves(
    r: Realization3D, direction: np.ndarray | str = "auto"
) -> LinkDiagram:
    """Planar diagram of a realization along a generic projection direction.

    Over/under at each crossing comes from the projected depth.  With
    ``direction="auto"`` seeded candidates are retried on degeneracy.
    """
    for i in range(len(r.curves)):
        for j in range(i + 1, len(r.curves)):
            _check_separation(r.curves[i], r.curves[j])
    if isinstance(direction, str):
        if direction != "auto":
            raise InputError(f"direction must be a vector or 'auto', got {direction!r}")
        candidates = _direction_candidates()
        budget = MAX_DIRECTION_RETRIES
    else:
        candidates = iter([np.asarray(direction, dtype=float)])
        budget = 1
    last_error: Exception | None = None
    for _ in range(budget):
        try:
            d = next(candidates)
        except StopIteration:
            break
        try:
            return diagram_from_strands(_project_curves(r.curves, d), tol=GENERIC_TOL)
        except DegeneracyError as exc:
            last_error = exc
            continue
    raise DegeneracyError(f"no generic projection direction found: {last_error}")
