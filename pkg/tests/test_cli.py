"""Command-line interface: subcommands, exit codes, JSON determinism, and
corpus parallel/serial agreement."""
import json
import subprocess
import sys

import pytest

from syzcurve.cli import main

GOOD_FILE = """name = cli_quartic
f = x*y*z^2 + x^4 + y^4
sing = (0:0:1) A1
"""

BAD_FILE = """name = cli_bad
f = x^4 + y^4 + z^4
sing = (0:0:1) A1
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_catalog_curve(self, capsys):
        code, out, _ = run(capsys, "analyze", "triangle")
        assert code == 0
        assert "tau        3" in out
        assert "free       True  exponents=(1, 1)" in out

    def test_missing_input_is_usage_error(self, capsys):
        code, _, err = run(capsys, "analyze", "missing.curve")
        assert code == 1
        assert "usage error" in err

    def test_curve_file(self, capsys, tmp_path):
        path = tmp_path / "c.curve"
        path.write_text(GOOD_FILE)
        code, out, _ = run(capsys, "analyze", str(path))
        assert code == 0
        assert "tau        1" in out

    def test_failing_verification_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.curve"
        path.write_text(BAD_FILE)
        code, _, err = run(capsys, "analyze", str(path))
        assert code == 2
        assert "verification failed" in err

    def test_malformed_file_exit_2(self, capsys, tmp_path):
        path = tmp_path / "syn.curve"
        path.write_text("name only\n")
        code, _, err = run(capsys, "analyze", str(path))
        assert code == 2

    def test_json_to_file_round_trips(self, capsys, tmp_path):
        dest = tmp_path / "report.json"
        code, _, _ = run(capsys, "analyze", "nodal_cubic", "--json",
                         str(dest))
        assert code == 0
        raw = dest.read_text()
        assert raw == json.dumps(json.loads(raw), indent=2,
                                 sort_keys=True) + "\n"

    def test_json_to_stdout(self, capsys):
        code, out, _ = run(capsys, "analyze", "fermat3", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["schema"] == 1
        assert data["invariants"]["tau"] == 0


class TestTable:
    def test_milnor_fermat3(self, capsys):
        code, out, _ = run(capsys, "table", "milnor", "fermat3", "0..3")
        assert code == 0
        assert [line.split("\t")[1] for line in out.strip().splitlines()] \
            == ["1", "3", "3", "1"]

    def test_ar_triangle(self, capsys):
        code, out, _ = run(capsys, "table", "ar", "triangle", "0..3")
        assert code == 0
        assert out.startswith("0\t0\n1\t2\n")

    def test_defect_triangle(self, capsys):
        code, out, _ = run(capsys, "table", "defect", "triangle", "0..2")
        assert code == 0
        assert [l.split("\t")[1] for l in out.strip().splitlines()] \
            == ["2", "0", "0"]

    def test_negative_range_after_separator(self, capsys):
        code, out, _ = run(capsys, "table", "h1", "triangle", "--", "-3..3")
        assert code == 0
        assert len(out.strip().splitlines()) == 7

    def test_unknown_invariant_usage_error(self, capsys):
        code, _, err = run(capsys, "table", "h9", "triangle", "0..3")
        assert code == 1
        assert "unknown invariant" in err

    def test_bad_range_usage_error(self, capsys):
        code, _, _ = run(capsys, "table", "ar", "triangle", "3")
        assert code == 1
        code, _, _ = run(capsys, "table", "ar", "triangle", "5..2")
        assert code == 1


class TestVerdictCommands:
    def test_stability(self, capsys):
        code, out, _ = run(capsys, "stability", "zariski_sextic")
        assert code == 0
        assert "stable: True" in out

    def test_freeness(self, capsys):
        code, out, _ = run(capsys, "freeness", "a1_arrangement")
        assert code == 0
        assert "free: True" in out
        assert "exponents: (2, 3)" in out

    def test_torelli(self, capsys):
        code, out, _ = run(capsys, "torelli", "two_node_sextic")
        assert code == 0
        assert "status: torelli" in out
        assert "witness degree: 2" in out

    def test_torelli_obstruction(self, capsys):
        code, out, _ = run(capsys, "torelli", "nodal_cubic")
        assert code == 0
        assert "dimension_obstruction" in out
        assert "family 8 > bundle family 5" in out


class TestCorpus:
    def test_filter_free(self, capsys):
        code, out, _ = run(capsys, "corpus", "--filter", "free")
        assert code == 0
        lines = [l for l in out.splitlines() if "PASS" in l or "FAIL" in l]
        assert [l.split()[0] for l in lines] == \
            ["triangle", "a1_arrangement", "dual_hesse"]

    def test_max_degree_subset(self, capsys):
        code, out, _ = run(capsys, "corpus", "--max-degree", "3")
        assert code == 0
        assert "triangle" in out and "fermat3" in out
        assert "zariski_sextic" not in out

    def test_full_run_passes_and_parallel_identical(self, capsys):
        code, serial, _ = run(capsys, "corpus")
        assert code == 0
        assert "0 failures" in serial
        code2, parallel, _ = run(capsys, "corpus", "--parallel")
        assert code2 == 0
        assert parallel == serial

    def test_json_matrix(self, capsys, tmp_path):
        dest = tmp_path / "m.json"
        code, _, _ = run(capsys, "corpus", "--filter", "free", "--json",
                         str(dest))
        assert code == 0
        data = json.loads(dest.read_text())
        assert data["failures"] == 0
        assert len(data["curves"]) == 3


class TestUsage:
    def test_no_command_prints_help(self, capsys):
        code, out, _ = run(capsys)
        assert code == 1
        assert "analyze" in out

    def test_console_script_installed(self):
        out = subprocess.run([sys.executable, "-m", "syzcurve.cli", "table",
                              "ar", "triangle", "0..1"],
                             capture_output=True, text=True)
        assert out.returncode == 0
        assert out.stdout == "0\t0\n1\t2\n"
