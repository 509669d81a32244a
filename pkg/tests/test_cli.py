import json

import pytest

from rpbis import __version__
from rpbis.cli import Report, cmd_distinguish, load_system
from rpbis.cli.main import build_parser, main
from rpbis.exceptions import RpbisError
from rpbis.logic import LogicId


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


class TestBisim:

    def test_distinguished(self, capsys):
        assert run(capsys, "bisim", "fixture:A", "t1", "t2")[:2] == (1, "distinguished")

    def test_bisimilar(self, capsys):
        assert run(capsys, "bisim", "fixture:C", "w_nil", "nil")[:2] == (0, "bisimilar")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "bisim", "fixture:A", "t1", "t1", "--json")
        report = Report.from_json(out)
        assert code == 0
        assert report.verdict == "bisimilar"
        assert report.formula is None
        assert "bisim" in report.timings_ms


class TestDistinguish:

    @pytest.mark.parametrize("fixture, s1, s2, logic, expected", [
        ("C", "t5", "t6", "or", "<a>1/2 <b>1"),
        ("D", "t7", "t8", "or", "<a>1 <c>1"),
        ("A", "t1", "t2", "and", "<a>1/2 (<b>1 & <c>1)"),
        ("A", "t1", "t2", "neg-and", "<a>1/2 (!<b>1 & !<c>1)"),
    ])
    def test_formula(self, capsys, fixture, s1, s2, logic, expected):
        code, out, _ = run(capsys, "distinguish", f"fixture:{fixture}", s1, s2, "--logic", logic)
        assert (code, out) == (1, expected)

    def test_default_logic_is_or(self, capsys):
        assert run(capsys, "distinguish", "fixture:A", "t1", "t2")[:2] == (1, "<a>1 (<b>1 | <c>1)")

    def test_decimal(self, capsys):
        _, out, _ = run(capsys, "distinguish", "fixture:E", "t9", "t10", "--decimal")
        assert out == "<a>0.6 (<b>1 | <c>1)"

    def test_bisimilar_states(self, capsys):
        assert run(capsys, "distinguish", "fixture:C", "w_nil", "nil")[:2] == (0, "bisimilar")

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "distinguish", "fixture:E", "t9", "t10", "--logic", "and", "--json")
        payload = json.loads(out)
        assert payload["schema"] == 1
        report = Report.from_json(out)
        assert code == report.exit_code == 1
        assert report.formula == "<a>1/2 (<b>1 & <c>1)"
        assert report.logic == "and"
        assert report.depth == 2
        assert report.minimal_level == 2
        assert report.satisfied_by == 0

    def test_command_function(self):
        report = cmd_distinguish("fixture:F", "t11", "t12", LogicId.PML_OR)
        assert report.formula == "<a>1 <b>1"
        assert report.satisfied_by == 1


class TestOtherCommands:

    def test_check(self, capsys):
        assert run(capsys, "check", "fixture:A", "t1", "<a>1/2 (<b>1 & <c>1)")[:2] == (0, "true")
        assert run(capsys, "check", "fixture:A", "t2", "<a>1/2 (<b>1 & <c>1)")[:2] == (1, "false")
        assert run(capsys, "check", "fixture:A", "u_nil", "true")[:2] == (0, "true")

    def test_canon_levels(self, capsys):
        _, level1_t1, _ = run(capsys, "canon", "fixture:A", "t1", "--depth", "1")
        _, level1_t2, _ = run(capsys, "canon", "fixture:A", "t2", "--depth", "1")
        _, level2_t1, _ = run(capsys, "canon", "fixture:A", "t1", "--depth", "2")
        _, level2_t2, _ = run(capsys, "canon", "fixture:A", "t2", "--depth", "2")
        assert level1_t1 == level1_t2
        assert level2_t1 != level2_t2
        assert run(capsys, "canon", "fixture:A", "t1", "--depth", "0")[1] == "nil"

    def test_canon_dot(self, capsys):
        code, out, _ = run(capsys, "canon", "fixture:D", "t8", "--dot")
        assert code == 0
        assert out.startswith("digraph rpt {")

    def test_partition_json(self, capsys):
        code, out, _ = run(capsys, "partition", "fixture:C", "--json")
        blocks = json.loads(out)["blocks"]
        assert code == 0
        assert ["nil", "w_nil"] in blocks
        assert sorted(s for block in blocks for s in block) == sorted(load_system("fixture:C").states)

    def test_partition_table(self, capsys):
        code, out, _ = run(capsys, "partition", "fixture:F")
        assert code == 0
        assert "representative" in out

    def test_selftest(self, capsys):
        code, out, _ = run(capsys, "selftest", "--cases", "3", "--seed", "7", "--workers", "2",
                           "--max-states", "4")
        assert code == 0
        assert out.startswith("seed 7, 3 cases")
        assert "FAILED" not in out

    def test_selftest_without_cases(self, capsys):
        assert run(capsys, "selftest", "--cases", "0")[0] == 0


class TestErrors:

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "bisim", str(tmp_path / "missing.rplts"), "a", "b")
        assert code == 2
        assert err.startswith("rpbis: error:")

    def test_unknown_fixture(self, capsys):
        assert run(capsys, "bisim", "fixture:Z", "a", "b")[0] == 2

    def test_unknown_state(self, capsys):
        code, _, err = run(capsys, "distinguish", "fixture:A", "t1", "nope")
        assert code == 2
        assert "nope" in err

    def test_bad_formula(self, capsys):
        assert run(capsys, "check", "fixture:A", "t1", "<a>2 true")[0] == 2

    def test_zero_denominator_in_formula(self, capsys):
        code, out, err = run(capsys, "check", "fixture:A", "t1", "<a>1/0")
        assert code == 2
        assert out == ""
        assert "zero denominator" in err

    def test_zero_denominator_in_system(self, capsys, tmp_path):
        path = tmp_path / "zero.rplts"
        path.write_text("t -a-> { 1/0: x }\n")
        code, _, err = run(capsys, "bisim", str(path), "t", "t")
        assert code == 2
        assert "line 1, column 10" in err

    def test_malformed_seed_variable(self, capsys, monkeypatch):
        monkeypatch.setenv("RPBIS_SEED", "abc")
        code, _, err = run(capsys, "selftest", "--cases", "1")
        assert code == 2
        assert "RPBIS_SEED" in err

    def test_bad_system(self, capsys, tmp_path):
        path = tmp_path / "bad.rplts"
        path.write_text("s -a-> { 1/2: t }\n")
        code, _, err = run(capsys, "partition", str(path))
        assert code == 2
        assert "error" in err

    def test_usage_errors_exit_from_argparse(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["distinguish", "fixture:A", "t1", "t2", "--logic", "xor"])

    def test_version(self, capsys):
        with pytest.raises(SystemExit):
            main(["--version"])
        assert __version__ in capsys.readouterr().out


class TestReport:

    def test_verdict_invariants(self):
        with pytest.raises(ValueError):
            Report("maybe")
        with pytest.raises(ValueError):
            Report("bisimilar", formula="<a>1")

    def test_schema_check(self):
        text = Report("distinguished", formula="<a>1").to_json()
        assert Report.from_json(text).formula == "<a>1"
        with pytest.raises(RpbisError):
            Report.from_json(text.replace('"schema": 1', '"schema": 2'))
