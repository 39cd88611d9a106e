from trilink.census import (
    EXPECTED_ORBITS_PER_TYPE,
    census_table,
    census_to_csv,
    census_to_json,
    parse_census_csv,
    parse_census_json,
    run_census,
)
from trilink.invariants import EmbeddingType


class TestCounts:
    def test_total_and_orbit_count(self, census_results):
        records, summary = census_results
        assert len(records) == 64
        assert summary.total_depictions == 64
        assert summary.orbit_count == 10

    def test_orbit_counts_per_type(self, census_results):
        _, summary = census_results
        assert summary.per_type_orbit_counts == EXPECTED_ORBITS_PER_TYPE

    def test_depiction_counts_per_type(self, census_results):
        _, summary = census_results
        assert summary.per_type_depiction_counts == {
            EmbeddingType.TorusLink33: 8,
            EmbeddingType.Chain3: 24,
            EmbeddingType.HopfWithSplit: 24,
            EmbeddingType.Trivial3: 6,
            EmbeddingType.Borromean: 2,
        }
        assert sum(summary.per_type_depiction_counts.values()) == 64
        assert sum(summary.per_type_orbit_counts.values()) == summary.orbit_count

    def test_orbit_members_share_type_and_linking(self, census_results):
        records, _ = census_results
        by_orbit = {}
        for r in records:
            by_orbit.setdefault(r.orbit_id, []).append(r)
        for members in by_orbit.values():
            assert len({m.embedding_type for m in members}) == 1
            assert len({m.linking_profile.linked_pairs for m in members}) == 1
            assert len({m.orbit_size for m in members}) == 1
            assert len(members) == members[0].orbit_size

    def test_records_grouped_by_orbit(self, census_results):
        records, _ = census_results
        keys = [(r.orbit_id, r.assignment.index) for r in records]
        assert keys == sorted(keys)
        assert {r.assignment.index for r in records} == set(range(64))


class TestSerialization:
    def test_runs_are_byte_identical(self, census_results):
        records, summary = census_results
        again_records, again_summary = run_census()
        assert census_to_json(records, summary) == census_to_json(
            again_records, again_summary
        )
        assert census_to_csv(records) == census_to_csv(again_records)
        assert census_table(records, summary) == census_table(
            again_records, again_summary
        )

    def test_csv_round_trip(self, census_results):
        records, _ = census_results
        assert parse_census_csv(census_to_csv(records)) == records

    def test_json_round_trip(self, census_results):
        records, summary = census_results
        text = census_to_json(records, summary)
        again_records, again_summary = parse_census_json(text)
        assert again_records == records
        assert again_summary == summary

    def test_json_declares_schema_version(self, census_results):
        records, summary = census_results
        assert '"schema_version": 1' in census_to_json(records, summary)

    def test_table_headline(self, census_results):
        records, summary = census_results
        table = census_table(records, summary)
        assert table.rstrip().endswith(
            "10 patterns in 5 embedding types; 64 depictions"
        )
