import json
import xml.etree.ElementTree as ET

from trilink.census import parse_census_csv, parse_census_json
from trilink.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCensusCommand:
    def test_table_headline(self, capsys):
        code, out, _ = run_cli(capsys, "census", "--format", "table")
        assert code == 0
        assert out.rstrip().endswith("10 patterns in 5 embedding types; 64 depictions")

    def test_csv_round_trip(self, capsys, census_results):
        code, out, _ = run_cli(capsys, "census", "--format", "csv")
        assert code == 0
        records, _ = census_results
        assert parse_census_csv(out) == records

    def test_json_round_trip(self, capsys, census_results):
        code, out, _ = run_cli(capsys, "census", "--format", "json")
        assert code == 0
        records, summary = census_results
        parsed_records, parsed_summary = parse_census_json(out)
        assert parsed_records == records
        assert parsed_summary == summary

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "census.csv"
        code, out, _ = run_cli(capsys, "census", "--format", "csv", "-o", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("bitword,")

    def test_identical_invocations_identical_output(self, capsys):
        _, first, _ = run_cli(capsys, "census", "--format", "json")
        _, second, _ = run_cli(capsys, "census", "--format", "json")
        assert first == second


class TestClassifyCommand:
    def test_height_stack(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "111100")
        assert code == 0
        assert "Trivial3" in out
        assert "0,0,0" in out

    def test_woven_word(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "000000")
        assert code == 0
        assert "Borromean" in out

    def test_bad_word_exits_2(self, capsys):
        code, out, err = run_cli(capsys, "classify", "0101019")
        assert code == 2
        assert out == ""
        assert "length 7" in err

    def test_bad_character_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "classify", "01010x")
        assert code == 2
        assert "position 5" in err


class TestInvariantsCommand:
    def test_builtin_hopf(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--builtin", "hopf")
        assert code == 0
        assert "-A^-4 - A^4" in out
        assert "A-B=1" in out

    def test_bitword(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "010101")
        assert code == 0
        assert "profile 1,1,1" in out


class TestRenderCommand:
    def test_diagram_svg(self, capsys, tmp_path):
        target = tmp_path / "d.svg"
        code, _, _ = run_cli(capsys, "render", "000000", "-o", str(target))
        assert code == 0
        root = ET.fromstring(target.read_text())
        assert root.get("version") == "1.1"

    def test_scene_svg(self, capsys, tmp_path):
        target = tmp_path / "s.svg"
        code, _, _ = run_cli(
            capsys, "render", "--scene", "tangent-circles", "-o", str(target)
        )
        assert code == 0
        ET.fromstring(target.read_text())

    def test_realization_svg(self, capsys, tmp_path):
        target = tmp_path / "r.svg"
        code, _, _ = run_cli(
            capsys, "render", "--realize", "borromean-ellipses", "-o", str(target)
        )
        assert code == 0
        ET.fromstring(target.read_text())

    def test_color_override(self, capsys):
        code, out, _ = run_cli(
            capsys, "render", "111100", "--color", "A=#101010,B=#202020,C=#303030"
        )
        assert code == 0
        assert "#101010" in out

    def test_bad_color_spec(self, capsys):
        code, _, err = run_cli(capsys, "render", "111100", "--color", "D=#101010")
        assert code == 2
        assert "color overrides" in err


class TestRealizeCommand:
    def test_point_table_and_linking(self, capsys, tmp_path):
        target = tmp_path / "curves.txt"
        code, out, _ = run_cli(
            capsys,
            "realize", "torus-villarceau", "--segments", "96", "-o", str(target),
        )
        assert code == 0
        text = target.read_text()
        assert text.startswith("trilink-curves v1 kind=torus-villarceau")
        assert "curve A n=96" in text
        assert "lk(A,B) = 1" in out or "lk(A,B) = -1" in out

    def test_obj_output(self, capsys, tmp_path):
        target = tmp_path / "curves.obj"
        code, _, _ = run_cli(
            capsys,
            "realize", "borromean-ellipses", "--segments", "64",
            "--obj", "-o", str(target),
        )
        assert code == 0
        lines = target.read_text().splitlines()
        assert sum(1 for ln in lines if ln.startswith("v ")) == 3 * 64
        assert sum(1 for ln in lines if ln.startswith("l ")) == 3

    def test_parameter_constraint_exit_2(self, capsys):
        code, _, err = run_cli(
            capsys, "realize", "torus-villarceau", "--R", "1.0", "--r", "2.0"
        )
        assert code == 2
        assert "R > r > 0" in err

    def test_mixed_parameters_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "realize", "torus-villarceau", "--a", "1.0"
        )
        assert code == 2


class TestVerifyCommand:
    def test_verify_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify")
        assert code == 0
        assert "ALL CHECKS PASSED" in out
        assert "burnside-vs-partition: PASS" in out
        assert "brunnian-cut-property: PASS" in out
        assert "torus-pair-persistence: PASS" in out

    def test_verify_json(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["all_passed"] is True
        assert any(c["name"] == "census-cardinality" for c in doc["checks"])


class TestExportCommand:
    def test_census_export(self, capsys):
        code, out, _ = run_cli(capsys, "export", "010101")
        assert code == 0
        assert out.startswith("trilink-diagram v1\n")

    def test_builtin_export(self, capsys):
        code, out, _ = run_cli(capsys, "export", "--builtin", "trefoil")
        assert code == 0
        assert "crossings 3" in out


class TestArgumentHandling:
    def test_unknown_flag_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "census", "--bogus")
        assert code == 2

    def test_unknown_subcommand_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "frobnicate")
        assert code == 2

    def test_unwritable_path_exits_2(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "census", "-o", str(tmp_path / "no" / "such" / "dir" / "x.csv")
        )
        assert code == 2
        assert err.startswith("error:")
