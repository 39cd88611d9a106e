import pytest

from trilink.census import run_census, verify_claims
from trilink.diagram import (
    assignment_from_index,
    build_canonical_projection,
    to_diagram,
)


@pytest.fixture(scope="session")
def projection():
    return build_canonical_projection()


@pytest.fixture(scope="session")
def all_diagrams(projection):
    return {
        i: to_diagram(projection, assignment_from_index(i)) for i in range(64)
    }


@pytest.fixture(scope="session")
def census_results():
    return run_census()


@pytest.fixture(scope="session")
def verification_report():
    return verify_claims()
