"""Link invariants: linking numbers, the bracket state sum, classification.

The bracket of a diagram with c crossings is the sum over all 2^c
smoothing states.  Each crossing contributes a factor of the variable
(first smoothing) or its inverse (second smoothing), and a state that
closes up into L loops contributes loop_factor^(L-1), where
loop_factor = -A^2 - A^-2.  The empty-crossing unknot has bracket 1.

Smoothing convention, matched to the slot layout of
:mod:`trilink.diagram` (slots counterclockwise, under-strand on 0/2):
the A-smoothing joins slot pairs (1,2) and (3,0); the B-smoothing joins
(0,1) and (2,3).  Together with the sign rule (positive iff the
over-strand enters at slot 1) this makes the writhe-normalized bracket
invariant under the single-kink move: a +1 kink has bracket -A^3.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .diagram import CircleId, LinkDiagram, remove_component
from .errors import CapacityError, InputError
from .laurent import LOOP_FACTOR, LaurentPoly, equal_up_to_inversion

BRACKET_CROSSING_LIMIT = 16

_A_SMOOTH_PAIRS = ((1, 2), (3, 0))
_B_SMOOTH_PAIRS = ((0, 1), (2, 3))

#: Bracket of the 2-component unlink.
TWO_UNLINK_BRACKET = LOOP_FACTOR
#: Bracket of the 3-component unlink.
THREE_UNLINK_BRACKET = LOOP_FACTOR * LOOP_FACTOR


class EmbeddingType(enum.Enum):
    """The five embedding types of the census."""

    TorusLink33 = "TorusLink33"
    Chain3 = "Chain3"
    HopfWithSplit = "HopfWithSplit"
    Trivial3 = "Trivial3"
    Borromean = "Borromean"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class LinkingProfile:
    """Absolute pairwise linking numbers of a diagram with labels among A, B, C."""

    lk_ab: int
    lk_bc: int
    lk_ca: int

    @property
    def linked_pairs(self) -> int:
        return sum(1 for v in (self.lk_ab, self.lk_bc, self.lk_ca) if v)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.lk_ab, self.lk_bc, self.lk_ca)

    def __str__(self) -> str:
        return f"{self.lk_ab},{self.lk_bc},{self.lk_ca}"


def writhe(d: LinkDiagram) -> int:
    """Sum of all crossing signs under the component orientations."""
    return sum(c.sign for c in d.crossings)


def crossing_component_map(d: LinkDiagram) -> dict[int, list[str]]:
    """Labels of the components passing through each crossing (two per crossing)."""
    out: dict[int, list[str]] = {i: [] for i in range(d.crossing_count)}
    for comp in d.components:
        for visit in comp.visits:
            out[visit.crossing].append(comp.label)
    return out


def linking_numbers(d: LinkDiagram) -> dict[frozenset[str], int]:
    """Absolute linking number of every unordered component pair."""
    if d.component_count < 2:
        raise InputError("linking numbers need at least two components")
    sums: dict[frozenset[str], int] = {
        frozenset(pair): 0
        for pair in itertools.combinations(d.component_labels(), 2)
    }
    through = crossing_component_map(d)
    for idx, crossing in enumerate(d.crossings):
        labels = through[idx]
        if len(labels) == 2 and labels[0] != labels[1]:
            sums[frozenset(labels)] += crossing.sign
    out = {}
    for pair, total in sums.items():
        if total % 2 != 0:
            raise AssertionError("inter-component sign sum must be even")
        out[pair] = abs(total) // 2
    return out


def pairwise_linking(d: LinkDiagram) -> LinkingProfile:
    """Linking profile over the pairs AB, BC, CA (absent pairs count 0)."""
    numbers = linking_numbers(d)

    def get(x: CircleId, y: CircleId) -> int:
        return numbers.get(frozenset((x.name, y.name)), 0)

    return LinkingProfile(
        lk_ab=get(CircleId.A, CircleId.B),
        lk_bc=get(CircleId.B, CircleId.C),
        lk_ca=get(CircleId.C, CircleId.A),
    )


def kauffman_bracket(d: LinkDiagram) -> LaurentPoly:
    """Bracket state sum of the diagram (exact integer arithmetic)."""
    c = d.crossing_count
    if c > BRACKET_CROSSING_LIMIT:
        raise CapacityError(
            f"bracket state sum limited to {BRACKET_CROSSING_LIMIT} crossings, got {c}"
        )
    arc_mates = d.arc_mates()
    free_loops = d.free_component_count()

    max_loops = c + d.component_count + 1
    delta_powers = [LaurentPoly.one()]
    for _ in range(max_loops):
        delta_powers.append(delta_powers[-1] * LOOP_FACTOR)

    terms: dict[int, int] = {}
    for state in range(1 << c):
        smooth_mate: dict[tuple[int, int], tuple[int, int]] = {}
        a_count = 0
        for k in range(c):
            pairs = _A_SMOOTH_PAIRS if (state >> k) & 1 else _B_SMOOTH_PAIRS
            if (state >> k) & 1:
                a_count += 1
            for s1, s2 in pairs:
                smooth_mate[(k, s1)] = (k, s2)
                smooth_mate[(k, s2)] = (k, s1)
        loops = free_loops
        visited: set[tuple[int, int]] = set()
        for dart in smooth_mate:
            if dart in visited:
                continue
            loops += 1
            current = dart
            while current not in visited:
                visited.add(current)
                partner = smooth_mate[current]
                visited.add(partner)
                current = arc_mates[partner]
        exponent_shift = a_count - (c - a_count)
        for exp, coeff in delta_powers[loops - 1].items():
            key = exp + exponent_shift
            terms[key] = terms.get(key, 0) + coeff
    return LaurentPoly(terms)


def normalized_invariant(d: LinkDiagram) -> LaurentPoly:
    """Writhe-normalized bracket: (-A^3)^(-w) times the bracket."""
    w = writhe(d)
    correction = LaurentPoly.monomial(-1 if w % 2 else 1, -3 * w)
    return kauffman_bracket(d) * correction


def classify(d: LinkDiagram) -> EmbeddingType:
    """Embedding type of a 3-component diagram.

    Three linked pairs give the torus link, two the chain, one the Hopf
    link with split component.  With no linked pairs the normalized
    bracket separates the trivial link from the woven one: equality with
    the 3-unlink value (up to inverting the variable) means trivial.
    """
    if d.component_count != 3:
        raise InputError(
            f"classification needs a 3-component diagram, got {d.component_count}"
        )
    profile = pairwise_linking(d)
    if profile.linked_pairs == 3:
        return EmbeddingType.TorusLink33
    if profile.linked_pairs == 2:
        return EmbeddingType.Chain3
    if profile.linked_pairs == 1:
        return EmbeddingType.HopfWithSplit
    invariant = normalized_invariant(d)
    if equal_up_to_inversion(invariant, THREE_UNLINK_BRACKET):
        return EmbeddingType.Trivial3
    return EmbeddingType.Borromean


def is_brunnian(d: LinkDiagram) -> bool:
    """Pairwise unlinked, nontrivial as a whole, trivial after any single cut."""
    if d.component_count != 3:
        raise InputError(
            f"the Brunnian test needs a 3-component diagram, got {d.component_count}"
        )
    if pairwise_linking(d).linked_pairs != 0:
        return False
    for label in d.component_labels():
        reduced = remove_component(d, label)
        if not equal_up_to_inversion(
            normalized_invariant(reduced), TWO_UNLINK_BRACKET
        ):
            return False
    return not equal_up_to_inversion(
        normalized_invariant(d), THREE_UNLINK_BRACKET
    )
