"""Acceptance suite: every headline criterion at its stated tolerance.

Each test pulls the matching named checks from the verification report
(computed once per session) and prints one pass/fail line per criterion,
so ``pytest tests/test_acceptance.py -v -s`` doubles as a readable
acceptance run.  ``trilink verify`` prints the same checks from the CLI.
"""

import pytest


def _check(report, *names):
    found = {c.name: c for c in report.checks}
    for name in names:
        assert name in found, f"missing check {name}"
    return [found[name] for name in names]


def _announce(criterion, checks):
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{criterion} [{check.name}]: {status} ({check.detail})")


@pytest.mark.parametrize(
    "criterion,names",
    [
        ("criterion-01 census cardinality", ("census-cardinality",)),
        ("criterion-02 pattern counts", ("pattern-count", "pattern-counts-by-type")),
        ("criterion-03 burnside consistency", ("burnside-vs-partition",)),
        ("criterion-04 case mapping", ("case-mapping",)),
        ("criterion-05 hopf linking", ("hopf-linking",)),
        (
            "criterion-06 brunnian and torus cuts",
            ("brunnian-cut-property", "torus-pair-persistence", "brunnian-exactness"),
        ),
        ("criterion-07 twist invariance", ("twist-invariance",)),
        ("criterion-08 mirror relation", ("mirror-relation",)),
        ("criterion-09 classification equivariance", ("classification-equivariance",)),
        (
            "criterion-10 geometry round-trip",
            ("villarceau-roundtrip", "ellipse-roundtrip"),
        ),
        ("criterion-11 numeric cross-check", ("gauss-vs-combinatorial",)),
        ("criterion-12 determinism", ("census-determinism",)),
    ],
)
def test_acceptance_criterion(verification_report, criterion, names):
    checks = _check(verification_report, *names)
    _announce(criterion, checks)
    for check in checks:
        assert check.passed, f"{criterion} failed: {check.name} ({check.detail})"


def test_every_check_in_report_passed(verification_report):
    failed = [c.name for c in verification_report.checks if not c.passed]
    assert not failed, f"failing checks: {failed}"
