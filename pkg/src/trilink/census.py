"""Full enumeration of the 64 depictions, joined with orbits and invariants.

``run_census`` is deterministic: records are ordered by bit word, orbits by
their smallest member, and serialization uses fixed key order, so repeated
runs emit byte-identical output.  ``verify_claims`` re-checks every headline
property of the census and of the 3D realizations from scratch and returns
a structured pass/fail report.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from . import geometry
from .diagram import (
    CrossingAssignment,
    LinkDiagram,
    all_assignments,
    build_canonical_projection,
    builtin_diagram,
    flip_all_crossings,
    remove_component,
    to_diagram,
)
from .errors import InputError
from .invariants import (
    THREE_UNLINK_BRACKET,
    TWO_UNLINK_BRACKET,
    EmbeddingType,
    LinkingProfile,
    classify,
    is_brunnian,
    kauffman_bracket,
    linking_numbers,
    normalized_invariant,
    pairwise_linking,
)
from .laurent import LaurentPoly, equal_up_to_inversion
from .symmetry import (
    apply_action,
    burnside_count,
    group_elements,
    orbit_partition,
    site_action,
)

CENSUS_SCHEMA_VERSION = 1

#: Orbit counts per embedding type that the census must reproduce.
EXPECTED_ORBITS_PER_TYPE = {
    EmbeddingType.TorusLink33: 2,
    EmbeddingType.Chain3: 3,
    EmbeddingType.HopfWithSplit: 3,
    EmbeddingType.Trivial3: 1,
    EmbeddingType.Borromean: 1,
}

_TYPE_ORDER = (
    EmbeddingType.TorusLink33,
    EmbeddingType.Chain3,
    EmbeddingType.HopfWithSplit,
    EmbeddingType.Trivial3,
    EmbeddingType.Borromean,
)


@dataclass(frozen=True)
class CensusRecord:
    assignment: CrossingAssignment
    orbit_id: int
    orbit_size: int
    embedding_type: EmbeddingType
    linking_profile: LinkingProfile
    bracket: LaurentPoly


@dataclass(frozen=True)
class CensusSummary:
    total_depictions: int
    orbit_count: int
    per_type_orbit_counts: dict[EmbeddingType, int]
    per_type_depiction_counts: dict[EmbeddingType, int]


def run_census() -> tuple[tuple[CensusRecord, ...], CensusSummary]:
    """Classify all 64 depictions and aggregate orbit/type counts.

    Records come back grouped by orbit (sorted by orbit id, then word value)
    so the report reads one pattern at a time.
    """
    proj = build_canonical_projection()
    orbits = orbit_partition()
    orbit_of_word: dict[int, tuple[int, int]] = {}
    for orbit_id, orbit in enumerate(orbits):
        for member in orbit.members:
            orbit_of_word[member.index] = (orbit_id, orbit.size)

    by_word: list[CensusRecord] = []
    for asg in all_assignments():
        d = to_diagram(proj, asg)
        orbit_id, orbit_size = orbit_of_word[asg.index]
        by_word.append(
            CensusRecord(
                assignment=asg,
                orbit_id=orbit_id,
                orbit_size=orbit_size,
                embedding_type=classify(d),
                linking_profile=pairwise_linking(d),
                bracket=kauffman_bracket(d),
            )
        )

    per_type_orbits = {t: 0 for t in _TYPE_ORDER}
    for orbit in orbits:
        per_type_orbits[by_word[orbit.representative.index].embedding_type] += 1
    per_type_depictions = {t: 0 for t in _TYPE_ORDER}
    for record in by_word:
        per_type_depictions[record.embedding_type] += 1

    records = tuple(
        sorted(by_word, key=lambda r: (r.orbit_id, r.assignment.index))
    )
    summary = CensusSummary(
        total_depictions=len(records),
        orbit_count=len(orbits),
        per_type_orbit_counts=per_type_orbits,
        per_type_depiction_counts=per_type_depictions,
    )
    return records, summary


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

CSV_FIELDS = (
    "bitword",
    "orbit_id",
    "orbit_size",
    "embedding_type",
    "lk_ab",
    "lk_bc",
    "lk_ca",
    "linked_pairs",
    "bracket",
)


def census_to_csv(records: tuple[CensusRecord, ...]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in records:
        writer.writerow(
            [
                r.assignment.word,
                r.orbit_id,
                r.orbit_size,
                r.embedding_type.value,
                r.linking_profile.lk_ab,
                r.linking_profile.lk_bc,
                r.linking_profile.lk_ca,
                r.linking_profile.linked_pairs,
                r.bracket.to_text(),
            ]
        )
    return out.getvalue()


def parse_census_csv(text: str) -> tuple[CensusRecord, ...]:
    """Re-parse the CSV export back into records (round-trips exactly)."""
    from .diagram import assignment_from_text

    reader = csv.DictReader(io.StringIO(text))
    records = []
    for row in reader:
        records.append(
            CensusRecord(
                assignment=assignment_from_text(row["bitword"]),
                orbit_id=int(row["orbit_id"]),
                orbit_size=int(row["orbit_size"]),
                embedding_type=EmbeddingType(row["embedding_type"]),
                linking_profile=LinkingProfile(
                    int(row["lk_ab"]), int(row["lk_bc"]), int(row["lk_ca"])
                ),
                bracket=LaurentPoly.from_text(row["bracket"]),
            )
        )
    return tuple(records)


def census_to_json(
    records: tuple[CensusRecord, ...], summary: CensusSummary
) -> str:
    doc = {
        "schema_version": CENSUS_SCHEMA_VERSION,
        "kind": "trilink-census",
        "total_depictions": summary.total_depictions,
        "orbit_count": summary.orbit_count,
        "per_type_orbit_counts": {
            t.value: summary.per_type_orbit_counts[t] for t in _TYPE_ORDER
        },
        "per_type_depiction_counts": {
            t.value: summary.per_type_depiction_counts[t] for t in _TYPE_ORDER
        },
        "records": [
            {
                "bitword": r.assignment.word,
                "orbit_id": r.orbit_id,
                "orbit_size": r.orbit_size,
                "embedding_type": r.embedding_type.value,
                "linking_profile": list(r.linking_profile.as_tuple()),
                "linked_pairs": r.linking_profile.linked_pairs,
                "bracket": r.bracket.to_text(),
            }
            for r in records
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_census_json(text: str) -> tuple[tuple[CensusRecord, ...], CensusSummary]:
    from .diagram import assignment_from_text

    doc = json.loads(text)
    if doc.get("schema_version") != CENSUS_SCHEMA_VERSION:
        raise InputError(
            f"unsupported census schema version {doc.get('schema_version')!r}"
        )
    records = tuple(
        CensusRecord(
            assignment=assignment_from_text(rec["bitword"]),
            orbit_id=rec["orbit_id"],
            orbit_size=rec["orbit_size"],
            embedding_type=EmbeddingType(rec["embedding_type"]),
            linking_profile=LinkingProfile(*rec["linking_profile"]),
            bracket=LaurentPoly.from_text(rec["bracket"]),
        )
        for rec in doc["records"]
    )
    summary = CensusSummary(
        total_depictions=doc["total_depictions"],
        orbit_count=doc["orbit_count"],
        per_type_orbit_counts={
            EmbeddingType(k): v for k, v in doc["per_type_orbit_counts"].items()
        },
        per_type_depiction_counts={
            EmbeddingType(k): v for k, v in doc["per_type_depiction_counts"].items()
        },
    )
    return records, summary


def census_table(records: tuple[CensusRecord, ...], summary: CensusSummary) -> str:
    """Human-readable table; the final line repeats the headline counts."""
    lines = [
        f"{'bitword':<8} {'orbit':>5} {'size':>4} {'type':<14} {'lk':<6} bracket",
        "-" * 64,
    ]
    for r in records:
        lines.append(
            f"{r.assignment.word:<8} {r.orbit_id:>5} {r.orbit_size:>4} "
            f"{r.embedding_type.value:<14} {str(r.linking_profile):<6} "
            f"{r.bracket.to_text()}"
        )
    lines.append("-" * 64)
    per_type = ", ".join(
        f"{t.value}={summary.per_type_orbit_counts[t]}" for t in _TYPE_ORDER
    )
    lines.append(f"patterns per type: {per_type}")
    lines.append(
        f"{summary.orbit_count} patterns in {len(_TYPE_ORDER)} embedding types; "
        f"{summary.total_depictions} depictions"
    )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Claim verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = [
            f"{c.name}: {'PASS' if c.passed else 'FAIL'} ({c.detail})"
            for c in self.checks
        ]
        verdict = "ALL CHECKS PASSED" if self.all_passed else "SOME CHECKS FAILED"
        return "\n".join(lines + [verdict]) + "\n"

    def to_json(self) -> str:
        doc = {
            "schema_version": CENSUS_SCHEMA_VERSION,
            "kind": "trilink-verification",
            "all_passed": self.all_passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }
        return json.dumps(doc, indent=2) + "\n"


def _diagram_cache() -> dict[int, LinkDiagram]:
    proj = build_canonical_projection()
    return {asg.index: to_diagram(proj, asg) for asg in all_assignments()}


def verify_claims(segments: int = 512) -> VerificationReport:
    """Re-derive and check every headline property; nothing is cached between runs."""
    checks: list[CheckResult] = []

    def add(name: str, passed: bool, detail: str) -> None:
        checks.append(CheckResult(name, bool(passed), detail))

    records, summary = run_census()
    diagrams = _diagram_cache()
    orbits = orbit_partition()
    record_by_word = {r.assignment.index: r for r in records}

    # 1. Census cardinality.
    add(
        "census-cardinality",
        summary.total_depictions == 64 and len(records) == 64,
        f"enumerated {summary.total_depictions} depictions (expected 64)",
    )

    # 2. Pattern counts per type.
    add(
        "pattern-count",
        summary.orbit_count == 10,
        f"found {summary.orbit_count} patterns (expected 10)",
    )
    per_type_ok = summary.per_type_orbit_counts == EXPECTED_ORBITS_PER_TYPE
    add(
        "pattern-counts-by-type",
        per_type_ok,
        ", ".join(
            f"{t.value}={summary.per_type_orbit_counts[t]}" for t in _TYPE_ORDER
        ),
    )

    # 3. Burnside consistency.
    burnside, _table = burnside_count()
    add(
        "burnside-vs-partition",
        burnside == summary.orbit_count,
        f"group-averaged fixed points {burnside} = direct partition {summary.orbit_count}",
    )

    # 4. Case mapping: linked-pairs count determines the type, with the
    # zero-linked case split by the bracket invariant.
    case_ok = True
    for r in records:
        lp = r.linking_profile.linked_pairs
        t = r.embedding_type
        expected_by_case = {
            3: t is EmbeddingType.TorusLink33,
            2: t is EmbeddingType.Chain3,
            1: t is EmbeddingType.HopfWithSplit,
            0: t in (EmbeddingType.Trivial3, EmbeddingType.Borromean),
        }[lp]
        if not expected_by_case:
            case_ok = False
    zero_linked = [r for r in records if r.linking_profile.linked_pairs == 0]
    split_ok = all(
        (
            equal_up_to_inversion(
                normalized_invariant(diagrams[r.assignment.index]),
                THREE_UNLINK_BRACKET,
            )
        )
        == (r.embedding_type is EmbeddingType.Trivial3)
        for r in zero_linked
    )
    add(
        "case-mapping",
        case_ok and split_ok,
        f"all 64 depictions follow the four linked-pair cases; "
        f"{len(zero_linked)} zero-linked depictions split by bracket",
    )

    # 5. Hopf and trivial 2-link linking numbers.
    hopf = builtin_diagram("hopf")
    unlink2 = builtin_diagram("unlink2")
    hopf_lk = linking_numbers(hopf)[frozenset(("A", "B"))]
    unlink_lk = linking_numbers(unlink2)[frozenset(("A", "B"))]
    add(
        "hopf-linking",
        hopf_lk == 1 and unlink_lk == 0,
        f"hopf pair links {hopf_lk} (expected 1), split pair {unlink_lk} (expected 0)",
    )

    # 6. Brunnian cut property and torus pair persistence.
    borromean_orbits = [
        o for o in orbits
        if records[o.representative.index].embedding_type is EmbeddingType.Borromean
    ]
    brunnian_ok = True
    cut_count = 0
    for orbit in borromean_orbits:
        for member in orbit.members:
            d = diagrams[member.index]
            for label in ("A", "B", "C"):
                reduced = remove_component(d, label)
                pair = next(iter(linking_numbers(reduced).values()))
                inv_ok = equal_up_to_inversion(
                    normalized_invariant(reduced), TWO_UNLINK_BRACKET
                )
                if pair != 0 or not inv_ok:
                    brunnian_ok = False
                cut_count += 1
    add(
        "brunnian-cut-property",
        brunnian_ok and cut_count > 0,
        f"every cut of every woven depiction splits cleanly ({cut_count} cuts)",
    )

    torus_ok = True
    persist_count = 0
    for orbit in orbits:
        if records[orbit.representative.index].embedding_type is not EmbeddingType.TorusLink33:
            continue
        for member in orbit.members:
            d = diagrams[member.index]
            for label in ("A", "B", "C"):
                reduced = remove_component(d, label)
                pair = next(iter(linking_numbers(reduced).values()))
                if pair != 1:
                    torus_ok = False
                persist_count += 1
    add(
        "torus-pair-persistence",
        torus_ok and persist_count > 0,
        f"every cut of every fully linked depiction leaves a linked pair "
        f"({persist_count} cuts)",
    )

    # 7. Brunnian detection matches the classification exactly.
    brunnian_exact = all(
        is_brunnian(diagrams[r.assignment.index])
        == (r.embedding_type is EmbeddingType.Borromean)
        for r in records
    )
    add(
        "brunnian-exactness",
        brunnian_exact,
        "the Brunnian test accepts exactly the woven depictions (64 checked)",
    )

    # 8. Twist invariance.
    twist = builtin_diagram("twist-unknot")
    unknot = builtin_diagram("unknot")
    add(
        "twist-invariance",
        normalized_invariant(twist) == normalized_invariant(unknot),
        f"normalized single-kink value {normalized_invariant(twist).to_text()} "
        f"equals unknot value {normalized_invariant(unknot).to_text()}",
    )

    # 9. Mirror relation, exhaustively.
    mirror_ok = all(
        kauffman_bracket(flip_all_crossings(diagrams[i]))
        == kauffman_bracket(diagrams[i]).substitute_inverse()
        for i in range(64)
    )
    add(
        "mirror-relation",
        mirror_ok,
        "bracket of the all-flips depiction inverts the variable (64 checked)",
    )

    # 10. Classification equivariance over all 64 x 12 pairs.
    type_of: dict[int, EmbeddingType] = {
        r.assignment.index: r.embedding_type for r in records
    }
    equivariant = True
    for g in group_elements():
        action = site_action(g)
        for asg in all_assignments():
            image = apply_action(action, asg)
            if type_of[asg.index] is not type_of[image.index]:
                equivariant = False
    add(
        "classification-equivariance",
        equivariant,
        "embedding type is constant along every symmetry action (768 checks)",
    )

    # 11. Geometry round trips.
    villarceau = geometry.realize("torus-villarceau", segments=segments)
    R = villarceau.params["R"]
    roundness = max(geometry.roundness_deviation(c) for c in villarceau.curves)
    v_lks = {}
    for i in range(3):
        for j in range(i + 1, 3):
            v_lks[(i, j)] = geometry.linking_number_3d(
                villarceau.curves[i], villarceau.curves[j]
            )
    v_class = classify(geometry.diagram_from_curves(villarceau))
    add(
        "villarceau-roundtrip",
        v_class is EmbeddingType.TorusLink33
        and all(abs(v) == 1 for v in v_lks.values())
        and roundness < 1e-9,
        f"classified {v_class.value}, pairwise |lk|="
        f"{sorted(abs(v) for v in v_lks.values())}, roundness {roundness:.2e}",
    )

    ellipses = geometry.realize("borromean-ellipses", segments=segments)
    a, b = ellipses.params["a"], ellipses.params["b"]
    ratio = min(geometry.noncircularity_ratio(c) for c in ellipses.curves)
    e_lks = {}
    for i in range(3):
        for j in range(i + 1, 3):
            e_lks[(i, j)] = geometry.linking_number_3d(
                ellipses.curves[i], ellipses.curves[j]
            )
    e_diagram = geometry.diagram_from_curves(ellipses)
    e_class = classify(e_diagram)
    add(
        "ellipse-roundtrip",
        e_class is EmbeddingType.Borromean
        and all(v == 0 for v in e_lks.values())
        and is_brunnian(e_diagram)
        and ratio >= a / b - 1e-9,
        f"classified {e_class.value}, pairwise lk all zero: "
        f"{all(v == 0 for v in e_lks.values())}, stretch ratio {ratio:.6f}",
    )

    # 12. Numeric cross-check of the two linking-number routes.
    integral_ok = True
    worst = 0.0
    for realization, lks in ((villarceau, v_lks), (ellipses, e_lks)):
        for (i, j), combinatorial in lks.items():
            integral = geometry.gauss_linking_integral(
                realization.curves[i], realization.curves[j]
            )
            worst = max(worst, abs(integral - combinatorial))
            if abs(integral - combinatorial) >= 1e-3:
                integral_ok = False
    add(
        "gauss-vs-combinatorial",
        integral_ok,
        f"largest |integral - crossing count/2| = {worst:.2e} "
        f"over 6 pairs at {segments} segments (tolerance 1e-3)",
    )

    # 13. Census determinism.
    records2, summary2 = run_census()
    add(
        "census-determinism",
        census_to_json(records, summary) == census_to_json(records2, summary2)
        and census_to_csv(records) == census_to_csv(records2),
        "two consecutive census runs serialize byte-identically",
    )

    return VerificationReport(tuple(checks))
