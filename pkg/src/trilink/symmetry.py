"""The 12-element symmetry group of the fixed projection and its orbit census.

Generators: the 120-degree rotation, the reflection about the vertical
axis (the axis through circle A's center), and the global over/under
interchange.  The first two generate a copy of the triangle's dihedral
group; the interchange commutes with both, so the full group has
6 x 2 = 12 elements.

The action on 6-bit crossing words is a site permutation followed by
selective bit negation.  The permutation comes from moving the six site
positions rigidly; a bit negates exactly when the motion does not carry
the bit-reference circle of the source pair onto the bit-reference circle
of the image pair (the two labels trade roles), and the global
interchange negates every bit on top of that.  Concretely the rotation
permutes bits without negation, every axis reflection negates all six,
and the interchange negates all six in place.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import SITE_PAIRS, CircleId, CrossingAssignment, all_assignments
from .errors import InputError

D3_NAMES = ("identity", "rot120", "rot240", "refl_A", "refl_B", "refl_C")

#: Label permutation of each dihedral part, as a mapping CircleId -> CircleId.
_D3_LABEL_MAPS: dict[str, dict[CircleId, CircleId]] = {
    "identity": {CircleId.A: CircleId.A, CircleId.B: CircleId.B, CircleId.C: CircleId.C},
    "rot120": {CircleId.A: CircleId.B, CircleId.B: CircleId.C, CircleId.C: CircleId.A},
    "rot240": {CircleId.A: CircleId.C, CircleId.B: CircleId.A, CircleId.C: CircleId.B},
    "refl_A": {CircleId.A: CircleId.A, CircleId.B: CircleId.C, CircleId.C: CircleId.B},
    "refl_B": {CircleId.A: CircleId.C, CircleId.B: CircleId.B, CircleId.C: CircleId.A},
    "refl_C": {CircleId.A: CircleId.B, CircleId.B: CircleId.A, CircleId.C: CircleId.C},
}


@dataclass(frozen=True)
class SymmetryElement:
    """One of the twelve symmetries: a dihedral part plus the interchange flag."""

    d3_part: str
    mirror: bool

    def label_map(self) -> dict[CircleId, CircleId]:
        return _D3_LABEL_MAPS[self.d3_part]

    def __str__(self) -> str:
        return f"{self.d3_part}{'*' if self.mirror else ''}"


@dataclass(frozen=True)
class SiteAction:
    """Permutation-with-flips action on the six crossing bits.

    ``site_perm[i]`` is the image site of site ``i``; ``flip_mask[i]`` is
    True when the bit traveling from site ``i`` is negated (source-indexed).
    """

    site_perm: tuple[int, int, int, int, int, int]
    flip_mask: tuple[bool, bool, bool, bool, bool, bool]

    def compose(self, first: "SiteAction") -> "SiteAction":
        """Action equal to applying ``first`` and then ``self``."""
        perm = tuple(self.site_perm[first.site_perm[i]] for i in range(6))
        flips = tuple(
            first.flip_mask[i] ^ self.flip_mask[first.site_perm[i]] for i in range(6)
        )
        return SiteAction(perm, flips)  # type: ignore[arg-type]

    def inverse(self) -> "SiteAction":
        inv_perm = [0] * 6
        for i in range(6):
            inv_perm[self.site_perm[i]] = i
        flips = tuple(self.flip_mask[inv_perm[j]] for j in range(6))
        return SiteAction(tuple(inv_perm), flips)  # type: ignore[arg-type]


def group_elements() -> tuple[SymmetryElement, ...]:
    """All twelve elements, identity first, interchange-free ones before the rest."""
    plain = tuple(SymmetryElement(name, False) for name in D3_NAMES)
    mirrored = tuple(SymmetryElement(name, True) for name in D3_NAMES)
    return plain + mirrored


def compose(g: SymmetryElement, h: SymmetryElement) -> SymmetryElement:
    """Group product: apply ``h`` first, then ``g``."""
    gm, hm = g.label_map(), h.label_map()
    combined = {c: gm[hm[c]] for c in CircleId}
    for name, label_map in _D3_LABEL_MAPS.items():
        if label_map == combined:
            return SymmetryElement(name, g.mirror ^ h.mirror)
    raise AssertionError("dihedral composition fell outside the group")


def inverse(g: SymmetryElement) -> SymmetryElement:
    inv = {v: k for k, v in g.label_map().items()}
    for name, label_map in _D3_LABEL_MAPS.items():
        if label_map == inv:
            return SymmetryElement(name, g.mirror)
    raise AssertionError("dihedral inverse fell outside the group")


def _pair_index(pair: frozenset[CircleId]) -> int:
    for k, (lead, partner) in enumerate(SITE_PAIRS):
        if frozenset((lead, partner)) == pair:
            return k
    raise AssertionError("unknown circle pair")


def site_action(g: SymmetryElement) -> SiteAction:
    """The action of ``g`` on the six crossing bits.

    Rigid motions preserve the inner/outer split, so site ``2*p + d`` maps
    to ``2*p' + d`` where ``p'`` indexes the image pair.  The flip logic is
    described in the module docstring.
    """
    label_map = g.label_map()
    perm = [0] * 6
    flips = [False] * 6
    for p, (lead, partner) in enumerate(SITE_PAIRS):
        image_pair = frozenset((label_map[lead], label_map[partner]))
        p_image = _pair_index(image_pair)
        image_lead = SITE_PAIRS[p_image][0]
        lead_moves_to_lead = label_map[lead] is image_lead
        for depth in (0, 1):
            i = 2 * p + depth
            perm[i] = 2 * p_image + depth
            flips[i] = (not lead_moves_to_lead) ^ g.mirror
    return SiteAction(tuple(perm), tuple(flips))  # type: ignore[arg-type]


def apply_action(action: SiteAction, asg: CrossingAssignment) -> CrossingAssignment:
    """Move every bit to its image site, negating where the mask says so."""
    bits = [False] * 6
    for i in range(6):
        bits[action.site_perm[i]] = asg.bits[i] ^ action.flip_mask[i]
    return CrossingAssignment(tuple(bits))  # type: ignore[arg-type]


def apply_element(g: SymmetryElement, asg: CrossingAssignment) -> CrossingAssignment:
    return apply_action(site_action(g), asg)


@dataclass(frozen=True)
class Orbit:
    """A symmetry orbit of crossing assignments ("pattern")."""

    members: tuple[CrossingAssignment, ...]  # sorted by numeric word value

    @property
    def representative(self) -> CrossingAssignment:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)


def orbit_partition() -> tuple[Orbit, ...]:
    """Partition all 64 assignments into orbits, sorted by representative."""
    actions = [site_action(g) for g in group_elements()]
    seen: set[int] = set()
    orbits: list[Orbit] = []
    for asg in all_assignments():
        if asg.index in seen:
            continue
        members = {asg.index: asg}
        frontier = [asg]
        while frontier:
            current = frontier.pop()
            for action in actions:
                image = apply_action(action, current)
                if image.index not in members:
                    members[image.index] = image
                    frontier.append(image)
        seen.update(members)
        orbits.append(Orbit(tuple(members[i] for i in sorted(members))))
    orbits.sort(key=lambda orb: orb.representative.index)
    return tuple(orbits)


def burnside_count() -> tuple[int, dict[SymmetryElement, int]]:
    """Orbit count via the group-average of fixed-point counts.

    Returns the averaged count together with the per-element table; the
    count must agree with ``len(orbit_partition())``.
    """
    table: dict[SymmetryElement, int] = {}
    for g in group_elements():
        action = site_action(g)
        fixed = sum(
            1 for asg in all_assignments() if apply_action(action, asg) == asg
        )
        table[g] = fixed
    total = sum(table.values())
    if total % len(table) != 0:
        raise AssertionError("fixed-point total is not divisible by the group order")
    return total // len(table), table


def orbit_of(asg: CrossingAssignment) -> Orbit:
    """The orbit containing ``asg``."""
    for orb in orbit_partition():
        if any(member.index == asg.index for member in orb.members):
            return orb
    raise InputError(f"assignment {asg.word} not found in any orbit")
