"""Three-circle link depictions: census, invariants, realizations, rendering."""

from .diagram import (
    BUILTIN_NAMES,
    CanonicalProjection,
    CircleId,
    CrossingAssignment,
    CrossingSite,
    LinkDiagram,
    all_assignments,
    assignment_from_index,
    assignment_from_text,
    build_canonical_projection,
    builtin_diagram,
    diagram_from_text,
    diagram_to_text,
    flip_all_crossings,
    remove_component,
    to_diagram,
)
from .errors import CapacityError, DegeneracyError, InputError
from .invariants import (
    EmbeddingType,
    LinkingProfile,
    classify,
    is_brunnian,
    kauffman_bracket,
    linking_numbers,
    normalized_invariant,
    pairwise_linking,
    writhe,
)
from .laurent import LOOP_FACTOR, LaurentPoly, equal_up_to_inversion
from .symmetry import (
    Orbit,
    SiteAction,
    SymmetryElement,
    apply_action,
    apply_element,
    burnside_count,
    group_elements,
    orbit_of,
    orbit_partition,
    site_action,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES",
    "CanonicalProjection",
    "CapacityError",
    "CircleId",
    "CrossingAssignment",
    "CrossingSite",
    "DegeneracyError",
    "EmbeddingType",
    "InputError",
    "LOOP_FACTOR",
    "LaurentPoly",
    "LinkDiagram",
    "LinkingProfile",
    "Orbit",
    "SiteAction",
    "SymmetryElement",
    "all_assignments",
    "apply_action",
    "apply_element",
    "assignment_from_index",
    "assignment_from_text",
    "build_canonical_projection",
    "builtin_diagram",
    "burnside_count",
    "classify",
    "diagram_from_text",
    "diagram_to_text",
    "equal_up_to_inversion",
    "flip_all_crossings",
    "group_elements",
    "is_brunnian",
    "kauffman_bracket",
    "linking_numbers",
    "normalized_invariant",
    "orbit_of",
    "orbit_partition",
    "pairwise_linking",
    "remove_component",
    "site_action",
    "to_diagram",
    "writhe",
]
