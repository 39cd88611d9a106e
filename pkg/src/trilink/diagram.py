"""Planar link diagrams for the three-circle census and its test fixtures.

The fixed projection consists of three equal circles whose centers sit at
unit distance from the origin at angles 90, 210 and 330 degrees, with a
common radius of 1.2.  Any two circles meet in exactly two points (one
"inner" point close to the origin, one "outer" point), giving six crossing
sites.  A depiction chooses over/under at each site; there are 2^6 = 64.

Bit convention
--------------
Site indices are fixed: 0=AB-inner, 1=AB-outer, 2=BC-inner, 3=BC-outer,
4=CA-inner, 5=CA-outer.  The bit of a site is true when the *first-named*
circle of its pair passes over: A at AB sites, B at BC sites, C at CA
sites.  With this convention "111100" is the height stack A above B above
C, and the 120-degree rotation carries bits around without negating them.

Diagram model
-------------
A crossing is a 4-valent vertex with dart slots 0..3 in counterclockwise
planar order.  The under-strand always enters at slot 0 and leaves at
slot 2; the over-strand enters at slot 1 or slot 3 and leaves two slots
later.  A component is a closed strand recorded as the cyclic sequence of
(crossing, entry slot) visits in traversal order; the traversal order *is*
the component's orientation.  Census circles are traversed
counterclockwise.

Crossing sign (right-hand rule): rotating the under-strand direction
counterclockwise by a quarter turn aligns it with the over-strand
direction exactly when the over-strand enters at slot 1, so a crossing is
positive iff its over-entry slot is 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import DegeneracyError, InputError

EXPORT_SCHEMA = "trilink-diagram v1"

_CIRCLE_PATH_POINTS = 240


class CircleId(enum.Enum):
    """Label of one of the three projected circles, ordered A < B < C."""

    A = 0
    B = 1
    C = 2

    def __lt__(self, other: "CircleId") -> bool:
        return self.value < other.value

    @property
    def label(self) -> str:
        return self.name


#: Pairs in site order; the first entry of each pair is the bit-reference circle.
SITE_PAIRS: tuple[tuple[CircleId, CircleId], ...] = (
    (CircleId.A, CircleId.B),
    (CircleId.B, CircleId.C),
    (CircleId.C, CircleId.A),
)

CENTER_DISTANCE = 1.0
CIRCLE_RADIUS = 1.2
_CENTER_ANGLES_DEG = {CircleId.A: 90.0, CircleId.B: 210.0, CircleId.C: 330.0}


@dataclass(frozen=True)
class CrossingSite:
    """One of the six intersection points of the fixed projection."""

    site_index: int
    pair: tuple[CircleId, CircleId]  # (lead, partner) in site-name order
    depth: str  # "inner" | "outer"
    position: tuple[float, float]

    @property
    def lead(self) -> CircleId:
        return self.pair[0]

    @property
    def partner(self) -> CircleId:
        return self.pair[1]


@dataclass(frozen=True)
class CanonicalProjection:
    """Geometry of the fixed three-circle shadow."""

    circles: dict[CircleId, tuple[tuple[float, float], float]]
    sites: tuple[CrossingSite, ...]
    visit_order: dict[CircleId, tuple[int, int, int, int]]

    def center(self, c: CircleId) -> tuple[float, float]:
        return self.circles[c][0]

    def radius(self, c: CircleId) -> float:
        return self.circles[c][1]


def _circle_centers() -> dict[CircleId, tuple[float, float]]:
    half_sqrt3 = math.sqrt(3.0) / 2.0
    return {
        CircleId.A: (0.0, CENTER_DISTANCE),
        CircleId.B: (-half_sqrt3 * CENTER_DISTANCE, -0.5 * CENTER_DISTANCE),
        CircleId.C: (half_sqrt3 * CENTER_DISTANCE, -0.5 * CENTER_DISTANCE),
    }


def _circle_intersections(
    c1: tuple[float, float], c2: tuple[float, float], radius: float
) -> tuple[tuple[float, float], tuple[float, float]]:
    """Both intersection points of two equal-radius circles."""
    dx, dy = c2[0] - c1[0], c2[1] - c1[1]
    d = math.hypot(dx, dy)
    if d <= 0 or d >= 2 * radius:
        raise InputError("circles do not meet in two points")
    half = d / 2.0
    h = math.sqrt(radius * radius - half * half)
    mx, my = (c1[0] + c2[0]) / 2.0, (c1[1] + c2[1]) / 2.0
    ux, uy = dx / d, dy / d
    # normal to the center line
    nx, ny = -uy, ux
    return ((mx + h * nx, my + h * ny), (mx - h * nx, my - h * ny))


def build_canonical_projection() -> CanonicalProjection:
    """Construct the fixed projection (deterministic, closed-form geometry)."""
    centers = _circle_centers()
    circles = {c: (centers[c], CIRCLE_RADIUS) for c in CircleId}
    sites: list[CrossingSite] = []
    for pair_index, (lead, partner) in enumerate(SITE_PAIRS):
        p1, p2 = _circle_intersections(centers[lead], centers[partner], CIRCLE_RADIUS)
        inner, outer = (p1, p2) if math.hypot(*p1) <= math.hypot(*p2) else (p2, p1)
        sites.append(
            CrossingSite(2 * pair_index, (lead, partner), "inner", inner)
        )
        sites.append(
            CrossingSite(2 * pair_index + 1, (lead, partner), "outer", outer)
        )
    visit_order: dict[CircleId, tuple[int, int, int, int]] = {}
    for c in CircleId:
        cx, cy = centers[c]
        mine = [s for s in sites if c in s.pair]
        mine.sort(key=lambda s: math.atan2(s.position[1] - cy, s.position[0] - cx))
        visit_order[c] = tuple(s.site_index for s in mine)  # type: ignore[assignment]
    return CanonicalProjection(circles=circles, sites=tuple(sites), visit_order=visit_order)


# ---------------------------------------------------------------------------
# Crossing assignments
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrossingAssignment:
    """Over/under choice at each of the six sites, as a 6-bit word."""

    bits: tuple[bool, bool, bool, bool, bool, bool]

    @property
    def word(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    @property
    def index(self) -> int:
        return int(self.word, 2)

    def bit(self, site_index: int) -> bool:
        return self.bits[site_index]

    def __str__(self) -> str:
        return self.word


def assignment_from_text(word: str) -> CrossingAssignment:
    """Parse a 6-character 0/1 word; index 0 is the leftmost character."""
    if len(word) != 6:
        raise InputError(f"assignment word must have length 6, got length {len(word)}")
    bits = []
    for pos, ch in enumerate(word):
        if ch not in "01":
            raise InputError(
                f"invalid character {ch!r} at position {pos} (expected '0' or '1')"
            )
        bits.append(ch == "1")
    return CrossingAssignment(tuple(bits))  # type: ignore[arg-type]


def assignment_from_index(index: int) -> CrossingAssignment:
    if not 0 <= index < 64:
        raise InputError(f"assignment index must be in 0..63, got {index}")
    return assignment_from_text(format(index, "06b"))


def all_assignments() -> tuple[CrossingAssignment, ...]:
    return tuple(assignment_from_index(i) for i in range(64))


# ---------------------------------------------------------------------------
# Link diagrams
# ---------------------------------------------------------------------------


class Visit(NamedTuple):
    """One passage of a component through a crossing."""

    crossing: int
    entry_slot: int  # 0 = under; 1 or 3 = over
    path_param: float | None = None  # arclength along the component path

    @property
    def role(self) -> str:
        return "under" if self.entry_slot in (0, 2) else "over"


class Crossing(NamedTuple):
    """A 4-valent diagram vertex (slots counterclockwise, under on 0/2)."""

    over_entry_slot: int  # 1 or 3
    position: tuple[float, float] | None = None
    site_index: int | None = None

    @property
    def sign(self) -> int:
        return 1 if self.over_entry_slot == 1 else -1


@dataclass(frozen=True)
class Component:
    """A closed oriented strand: visits in traversal order plus draw geometry."""

    label: str
    visits: tuple[Visit, ...]
    path: tuple[tuple[float, float], ...] | None = None


@dataclass(frozen=True)
class LinkDiagram:
    """A combinatorial planar diagram of a link."""

    components: tuple[Component, ...]
    crossings: tuple[Crossing, ...]

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def component_labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.components)

    def component(self, label: str | CircleId) -> Component:
        name = label.name if isinstance(label, CircleId) else str(label)
        for comp in self.components:
            if comp.label == name:
                return comp
        raise InputError(
            f"no component labeled {name!r}; valid labels: "
            + ", ".join(self.component_labels())
        )

    def arc_mates(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Pairing of exit darts with the next entry dart along each strand.

        Darts are (crossing, slot).  Every dart of every crossing appears
        exactly once in the involution, which is what makes state-sum loop
        tracing terminate and partition all arcs.
        """
        mates: dict[tuple[int, int], tuple[int, int]] = {}
        for comp in self.components:
            n = len(comp.visits)
            for i, visit in enumerate(comp.visits):
                nxt = comp.visits[(i + 1) % n]
                exit_dart = (visit.crossing, (visit.entry_slot + 2) % 4)
                entry_dart = (nxt.crossing, nxt.entry_slot)
                mates[exit_dart] = entry_dart
                mates[entry_dart] = exit_dart
        return mates

    def free_component_count(self) -> int:
        """Components that pass through no crossing."""
        return sum(1 for comp in self.components if not comp.visits)


def validate_diagram(d: LinkDiagram) -> None:
    """Raise if the structural invariants of the diagram model are violated."""
    seen: dict[int, list[int]] = {i: [] for i in range(len(d.crossings))}
    for comp in d.components:
        if len(comp.visits) % 2 != 0:
            raise InputError(
                f"component {comp.label} has an odd number of crossing visits"
            )
        for visit in comp.visits:
            if visit.crossing not in seen:
                raise InputError(f"visit references unknown crossing {visit.crossing}")
            seen[visit.crossing].append(visit.entry_slot)
    for idx, slots in seen.items():
        expected = sorted((0, d.crossings[idx].over_entry_slot))
        if sorted(slots) != expected:
            raise InputError(
                f"crossing {idx} has entry slots {sorted(slots)}, expected {expected}"
            )
    mates = d.arc_mates()
    darts = {(i, s) for i in range(len(d.crossings)) for s in range(4)}
    if set(mates) != darts:
        raise InputError("arc structure does not cover every dart exactly once")


def _over_entry_slot(t_under: tuple[float, float], t_over: tuple[float, float]) -> int:
    """Slot (1 or 3) at which the over-strand enters, from travel directions."""
    cross = t_under[0] * t_over[1] - t_under[1] * t_over[0]
    if cross == 0.0:
        raise DegeneracyError("tangent strands at a crossing")
    return 1 if cross > 0 else 3


# ---------------------------------------------------------------------------
# Census diagrams (analytic construction from the fixed projection)
# ---------------------------------------------------------------------------


def _ccw_tangent(point: tuple[float, float], center: tuple[float, float]) -> tuple[float, float]:
    rx, ry = point[0] - center[0], point[1] - center[1]
    return (-ry, rx)


def _circle_path(
    center: tuple[float, float], radius: float, start_angle: float, n: int
) -> tuple[tuple[float, float], ...]:
    pts = []
    for k in range(n):
        a = start_angle + 2.0 * math.pi * k / n
        pts.append((center[0] + radius * math.cos(a), center[1] + radius * math.sin(a)))
    return tuple(pts)


def to_diagram(proj: CanonicalProjection, asg: CrossingAssignment) -> LinkDiagram:
    """Build the depiction of ``asg`` over the fixed projection.

    Crossing ids coincide with site indices.  Components are the circles
    A, B, C, each traversed counterclockwise from angle -pi.
    """
    over_circle: dict[int, CircleId] = {}
    for site in proj.sites:
        over_circle[site.site_index] = (
            site.lead if asg.bit(site.site_index) else site.partner
        )

    crossings: list[Crossing] = []
    for site in proj.sites:
        over = over_circle[site.site_index]
        under = site.partner if over is site.lead else site.lead
        t_over = _ccw_tangent(site.position, proj.center(over))
        t_under = _ccw_tangent(site.position, proj.center(under))
        crossings.append(
            Crossing(
                over_entry_slot=_over_entry_slot(t_under, t_over),
                position=site.position,
                site_index=site.site_index,
            )
        )

    components: list[Component] = []
    for c in CircleId:
        center = proj.center(c)
        radius = proj.radius(c)
        visits: list[Visit] = []
        for site_index in proj.visit_order[c]:
            site = proj.sites[site_index]
            angle = math.atan2(
                site.position[1] - center[1], site.position[0] - center[0]
            )
            param = radius * ((angle + math.pi) % (2.0 * math.pi))
            if over_circle[site_index] is c:
                slot = crossings[site_index].over_entry_slot
            else:
                slot = 0
            visits.append(Visit(site_index, slot, param))
        components.append(
            Component(
                label=c.name,
                visits=tuple(visits),
                path=_circle_path(center, radius, -math.pi, _CIRCLE_PATH_POINTS),
            )
        )
    return LinkDiagram(components=tuple(components), crossings=tuple(crossings))


def _diagram_from_circles(
    circles: Sequence[tuple[str, tuple[float, float], float]],
    over_of: Callable[[str, str, tuple[float, float]], str],
) -> LinkDiagram:
    """Diagram of a family of pairwise crossing/disjoint round circles.

    ``over_of(label1, label2, point)`` names the circle passing over at the
    given intersection point.
    """
    meetings: list[tuple[str, str, tuple[float, float]]] = []
    for i in range(len(circles)):
        for j in range(i + 1, len(circles)):
            li, ci, ri = circles[i]
            lj, cj, rj = circles[j]
            d = math.hypot(cj[0] - ci[0], cj[1] - ci[1])
            if d >= ri + rj or d <= abs(ri - rj):
                continue
            if ri != rj:
                raise InputError("mixed radii are not supported here")
            for p in _circle_intersections(ci, cj, ri):
                meetings.append((li, lj, p))
    centers = {label: center for label, center, _ in circles}
    radii = {label: radius for label, _, radius in circles}

    crossings: list[Crossing] = []
    for li, lj, point in meetings:
        over = over_of(li, lj, point)
        under = lj if over == li else li
        t_over = _ccw_tangent(point, centers[over])
        t_under = _ccw_tangent(point, centers[under])
        crossings.append(
            Crossing(over_entry_slot=_over_entry_slot(t_under, t_over), position=point)
        )

    components: list[Component] = []
    for label, center, radius in circles:
        visited = [
            (idx, meeting)
            for idx, meeting in enumerate(meetings)
            if label in (meeting[0], meeting[1])
        ]
        def _angle(item):
            point = item[1][2]
            return math.atan2(point[1] - center[1], point[0] - center[0])
        visited.sort(key=_angle)
        visits = []
        for idx, (li, lj, point) in visited:
            over = over_of(li, lj, point)
            slot = crossings[idx].over_entry_slot if over == label else 0
            angle = math.atan2(point[1] - center[1], point[0] - center[0])
            param = radius * ((angle + math.pi) % (2.0 * math.pi))
            visits.append(Visit(idx, slot, param))
        components.append(
            Component(
                label=label,
                visits=tuple(visits),
                path=_circle_path(center, radius, -math.pi, _CIRCLE_PATH_POINTS),
            )
        )
    return LinkDiagram(components=tuple(components), crossings=tuple(crossings))


# ---------------------------------------------------------------------------
# Generic polyline construction (self-crossings allowed)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlanarStrand:
    """A closed planar polyline, optionally with a depth value per vertex."""

    label: str
    points: tuple[tuple[float, float], ...]
    depths: tuple[float, ...] | None = None


class Meeting(NamedTuple):
    strand_i: int
    param_i: float  # arclength along strand_i
    tangent_i: tuple[float, float]
    depth_i: float
    strand_j: int
    param_j: float
    tangent_j: tuple[float, float]
    depth_j: float
    point: tuple[float, float]


def _cumulative_lengths(points: np.ndarray) -> np.ndarray:
    seg = np.roll(points, -1, axis=0) - points
    lengths = np.linalg.norm(seg, axis=1)
    return np.concatenate(([0.0], np.cumsum(lengths)))


def _segment_meetings(
    pa: np.ndarray,
    da: np.ndarray | None,
    pb: np.ndarray,
    db: np.ndarray | None,
    same: bool,
    tol: float,
) -> list[tuple[int, float, int, float, tuple[float, float], float, float]]:
    """All transverse interior intersections between two closed polylines.

    Returns (seg_a, t_a, seg_b, t_b, point, depth_a, depth_b) records.
    Rejects (raises DegeneracyError) near-parallel meetings and meetings
    too close to a segment endpoint, so callers can retry another
    projection direction.
    """
    na, nb = len(pa), len(pb)
    a0 = pa
    a1 = np.roll(pa, -1, axis=0)
    b0 = pb
    b1 = np.roll(pb, -1, axis=0)
    r = a1 - a0
    s = b1 - b0

    # Broadcast: rows index segments of a, cols segments of b.
    denom = r[:, None, 0] * s[None, :, 1] - r[:, None, 1] * s[None, :, 0]
    qp = b0[None, :, :] - a0[:, None, :]
    t_num = qp[:, :, 0] * s[None, :, 1] - qp[:, :, 1] * s[None, :, 0]
    u_num = qp[:, :, 0] * r[:, None, 1] - qp[:, :, 1] * r[:, None, 0]

    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(denom != 0.0, t_num / denom, np.inf)
        u = np.where(denom != 0.0, u_num / denom, np.inf)

    hits = (t > -tol) & (t < 1.0 + tol) & (u > -tol) & (u < 1.0 + tol) & np.isfinite(t)
    if same:
        ii, jj = np.nonzero(hits)
        keep = []
        for i, j in zip(ii, jj):
            if i == j or (j - i) % na == 1 or (i - j) % na == 1:
                continue  # a segment and its neighbors share endpoints
            if i < j:
                keep.append((i, j))
        pairs = keep
    else:
        ii, jj = np.nonzero(hits)
        pairs = list(zip(ii.tolist(), jj.tolist()))

    out = []
    for i, j in pairs:
        ti, uj = float(t[i, j]), float(u[i, j])
        if min(ti, uj) < tol or max(ti, uj) > 1.0 - tol:
            raise DegeneracyError("crossing too close to a polyline vertex")
        rn = r[i] / np.linalg.norm(r[i])
        sn = s[j] / np.linalg.norm(s[j])
        if abs(rn[0] * sn[1] - rn[1] * sn[0]) < tol:
            raise DegeneracyError("near-tangent crossing")
        point = a0[i] + ti * r[i]
        depth_a = 0.0 if da is None else float(da[i] + ti * (da[(i + 1) % na] - da[i]))
        depth_b = 0.0 if db is None else float(db[j] + uj * (db[(j + 1) % nb] - db[j]))
        out.append((int(i), ti, int(j), uj, (float(point[0]), float(point[1])), depth_a, depth_b))
    return out


def diagram_from_strands(
    strands: Sequence[PlanarStrand],
    over_rule: Callable[[Meeting], bool] | None = None,
    tol: float = 1e-9,
) -> LinkDiagram:
    """Assemble a diagram from closed planar polylines.

    Over/under at each meeting comes from the vertex depths (larger depth
    is over) unless ``over_rule`` is given, in which case it returns True
    when the first passage of the meeting is the over-strand.  Raises
    :class:`DegeneracyError` for non-generic pictures (tangency, vertex
    hits, near-coincident crossings, ambiguous depths).
    """
    arrays = [np.asarray(s.points, dtype=float) for s in strands]
    depth_arrays = [
        None if s.depths is None else np.asarray(s.depths, dtype=float) for s in strands
    ]
    lengths = [_cumulative_lengths(p) for p in arrays]

    meetings: list[Meeting] = []
    for i in range(len(strands)):
        for j in range(i, len(strands)):
            recs = _segment_meetings(
                arrays[i], depth_arrays[i], arrays[j], depth_arrays[j], i == j, tol
            )
            for seg_a, t_a, seg_b, t_b, point, depth_a, depth_b in recs:
                na, nb = len(arrays[i]), len(arrays[j])
                ta = arrays[i][(seg_a + 1) % na] - arrays[i][seg_a]
                tb = arrays[j][(seg_b + 1) % nb] - arrays[j][seg_b]
                param_a = float(
                    lengths[i][seg_a]
                    + t_a * (lengths[i][seg_a + 1] - lengths[i][seg_a])
                )
                param_b = float(
                    lengths[j][seg_b]
                    + t_b * (lengths[j][seg_b + 1] - lengths[j][seg_b])
                )
                meetings.append(
                    Meeting(
                        i, param_a, (float(ta[0]), float(ta[1])), depth_a,
                        j, param_b, (float(tb[0]), float(tb[1])), depth_b,
                        point,
                    )
                )

    # Near-coincident crossing points mean a triple point or tangency.
    for a in range(len(meetings)):
        for b in range(a + 1, len(meetings)):
            pa_, pb_ = meetings[a].point, meetings[b].point
            if math.hypot(pa_[0] - pb_[0], pa_[1] - pb_[1]) < tol:
                raise DegeneracyError("two crossings nearly coincide")

    meetings.sort(key=lambda m: (m.strand_i, m.param_i, m.strand_j, m.param_j))

    crossings: list[Crossing] = []
    passages: list[list[tuple[float, int, int]]] = [[] for _ in strands]
    for idx, m in enumerate(meetings):
        if over_rule is not None:
            first_over = bool(over_rule(m))
        else:
            if abs(m.depth_i - m.depth_j) < tol:
                raise DegeneracyError("ambiguous depth at a crossing")
            first_over = m.depth_i > m.depth_j
        if first_over:
            t_over, t_under = m.tangent_i, m.tangent_j
        else:
            t_over, t_under = m.tangent_j, m.tangent_i
        over_slot = _over_entry_slot(t_under, t_over)
        crossings.append(Crossing(over_entry_slot=over_slot, position=m.point))
        passages[m.strand_i].append((m.param_i, idx, over_slot if first_over else 0))
        passages[m.strand_j].append((m.param_j, idx, 0 if first_over else over_slot))

    components = []
    for i, strand in enumerate(strands):
        visits = tuple(
            Visit(crossing, slot, param)
            for param, crossing, slot in sorted(passages[i])
        )
        components.append(
            Component(label=strand.label, visits=visits, path=strand.points)
        )
    diagram = LinkDiagram(components=tuple(components), crossings=tuple(crossings))
    validate_diagram(diagram)
    return diagram


# ---------------------------------------------------------------------------
# Builtin fixture diagrams
# ---------------------------------------------------------------------------

BUILTIN_NAMES = ("unknot", "twist-unknot", "trefoil", "hopf", "unlink2", "unlink3")


def _unknot() -> LinkDiagram:
    return LinkDiagram(
        components=(
            Component("K", (), _circle_path((0.0, 0.0), 1.0, -math.pi, _CIRCLE_PATH_POINTS)),
        ),
        crossings=(),
    )


def _unlink(n: int) -> LinkDiagram:
    labels = ("A", "B", "C")[:n]
    comps = []
    for k, label in enumerate(labels):
        center = (2.0 * k - (n - 1), 0.0)
        comps.append(
            Component(label, (), _circle_path(center, 0.8, -math.pi, _CIRCLE_PATH_POINTS))
        )
    return LinkDiagram(components=tuple(comps), crossings=())


def _hopf() -> LinkDiagram:
    # Circle A is over at the upper crossing, B at the lower one.
    circles = [("A", (-0.5, 0.0), 0.8), ("B", (0.5, 0.0), 0.8)]

    def over_of(l1: str, l2: str, point: tuple[float, float]) -> str:
        return "A" if point[1] > 0 else "B"

    return _diagram_from_circles(circles, over_of)


def _twist_unknot() -> LinkDiagram:
    """Single-kink unknot drawn as an inner-loop limacon.

    The earlier passage through the crossing (smaller arclength from the
    path start) goes over; the resulting writhe is +1.
    """
    n = 256
    pts = []
    for k in range(n):
        theta = 2.0 * math.pi * k / n
        r = 0.5 + math.cos(theta)
        pts.append((r * math.cos(theta), r * math.sin(theta)))
    strand = PlanarStrand("K", tuple(pts))
    return diagram_from_strands(
        strands=[strand], over_rule=lambda m: m.param_i < m.param_j
    )


def _trefoil() -> LinkDiagram:
    """Alternating 3-crossing trefoil from the standard parametric space curve."""
    n = 240
    pts = []
    depths = []
    for k in range(n):
        t = 2.0 * math.pi * k / n
        pts.append((math.sin(t) + 2.0 * math.sin(2.0 * t), math.cos(t) - 2.0 * math.cos(2.0 * t)))
        depths.append(-math.sin(3.0 * t))
    strand = PlanarStrand("K", tuple(pts), tuple(depths))
    return diagram_from_strands(strands=[strand])


def builtin_diagram(name: str) -> LinkDiagram:
    """A fixed fixture diagram by name (see ``BUILTIN_NAMES``)."""
    if name == "unknot":
        return _unknot()
    if name == "twist-unknot":
        return _twist_unknot()
    if name == "trefoil":
        return _trefoil()
    if name == "hopf":
        return _hopf()
    if name == "unlink2":
        return _unlink(2)
    if name == "unlink3":
        return _unlink(3)
    raise InputError(
        f"unknown builtin {name!r}; valid names: " + ", ".join(BUILTIN_NAMES)
    )


# ---------------------------------------------------------------------------
# Diagram surgery
# ---------------------------------------------------------------------------


def remove_component(d: LinkDiagram, label: str | CircleId) -> LinkDiagram:
    """Delete a component and every crossing it participates in.

    Strands that pass through a deleted crossing are re-joined simply by
    dropping the visit: the remaining visits of each component still form
    a closed strand.
    """
    target = d.component(label)  # raises InputError for unknown labels
    doomed = {v.crossing for v in target.visits}
    keep_old = [i for i in range(len(d.crossings)) if i not in doomed]
    renumber = {old: new for new, old in enumerate(keep_old)}
    crossings = tuple(d.crossings[i] for i in keep_old)
    components = []
    for comp in d.components:
        if comp.label == target.label:
            continue
        visits = tuple(
            Visit(renumber[v.crossing], v.entry_slot, v.path_param)
            for v in comp.visits
            if v.crossing not in doomed
        )
        components.append(Component(comp.label, visits, comp.path))
    return LinkDiagram(components=tuple(components), crossings=crossings)


def flip_all_crossings(d: LinkDiagram) -> LinkDiagram:
    """Swap over and under at every crossing (the mirror depiction).

    Slot labels at each flipped crossing rotate so the new under-strand
    enters at slot 0 again; the planar cyclic order is unchanged.
    """
    shifts = {}
    crossings = []
    for idx, c in enumerate(d.crossings):
        shift = c.over_entry_slot  # old over entry becomes new slot 0
        shifts[idx] = shift
        crossings.append(
            Crossing(
                over_entry_slot=(0 - shift) % 4,
                position=c.position,
                site_index=c.site_index,
            )
        )
    components = []
    for comp in d.components:
        visits = tuple(
            Visit(v.crossing, (v.entry_slot - shifts[v.crossing]) % 4, v.path_param)
            for v in comp.visits
        )
        components.append(Component(comp.label, visits, comp.path))
    return LinkDiagram(components=tuple(components), crossings=tuple(crossings))


# ---------------------------------------------------------------------------
# Versioned structured-text export
# ---------------------------------------------------------------------------


def diagram_to_text(d: LinkDiagram) -> str:
    """Serialize component cycles and the crossing table (schema ``trilink-diagram v1``)."""
    lines = [EXPORT_SCHEMA]
    lines.append(f"components {len(d.components)}")
    for comp in d.components:
        cycle = " ".join(f"{v.crossing}.{v.entry_slot}" for v in comp.visits)
        lines.append(f"component {comp.label} : {cycle}".rstrip())
    lines.append(f"crossings {len(d.crossings)}")
    for idx, c in enumerate(d.crossings):
        entry = f"crossing {idx} : over-entry {c.over_entry_slot}"
        if c.site_index is not None:
            entry += f" site {c.site_index}"
        if c.position is not None:
            entry += f" pos {c.position[0]:.12g} {c.position[1]:.12g}"
        lines.append(entry)
    return "\n".join(lines) + "\n"


def diagram_from_text(text: str) -> LinkDiagram:
    """Parse the output of :func:`diagram_to_text` (combinatorics only, no paths)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != EXPORT_SCHEMA:
        raise InputError(f"expected header {EXPORT_SCHEMA!r}")
    components: list[Component] = []
    crossings: list[Crossing] = []
    for line in lines[1:]:
        head, _, rest = line.partition(" ")
        if head == "components" or head == "crossings":
            continue
        if head == "component":
            label, _, cycle = rest.partition(":")
            visits = []
            for token in cycle.split():
                cr, _, slot = token.partition(".")
                visits.append(Visit(int(cr), int(slot)))
            components.append(Component(label.strip(), tuple(visits)))
        elif head == "crossing":
            fields = rest.split()
            over_entry = int(fields[fields.index("over-entry") + 1])
            site = None
            position = None
            if "site" in fields:
                site = int(fields[fields.index("site") + 1])
            if "pos" in fields:
                k = fields.index("pos")
                position = (float(fields[k + 1]), float(fields[k + 2]))
            crossings.append(Crossing(over_entry, position, site))
        else:
            raise InputError(f"unrecognized record {line!r}")
    d = LinkDiagram(components=tuple(components), crossings=tuple(crossings))
    validate_diagram(d)
    return d
