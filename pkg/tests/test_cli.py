"""End-to-end CLI behavior through the real entry point."""

import json
import subprocess
import sys

from fubuki import ClueSet, build_shift_table, count_solutions, parse_shift_table_csv

TWO_SOLUTION_PUZZLE = {
    "prescribed": [
        {"row": 1, "col": 1, "value": 1},
        {"row": 2, "col": 2, "value": 2},
        {"row": 3, "col": 3, "value": 3},
    ],
    "row_sums": [10, 15, 20],
    "col_sums": [16, 15, 14],
}
UNIQUE_PUZZLE = {
    "prescribed": [
        {"row": 1, "col": 1, "value": 1},
        {"row": 2, "col": 2, "value": 2},
        {"row": 3, "col": 3, "value": 3},
    ],
    "row_sums": [11, 14, 20],
    "col_sums": [14, 15, 16],
}


def run_cli(*args: str, stdin: str | None = None) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "fubuki", *args],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=120,
    )


def write_puzzle(tmp_path, payload) -> str:
    path = tmp_path / "puzzle.json"
    path.write_text(json.dumps(payload))
    return str(path)


class TestSolve:
    def test_two_solutions_with_all(self, tmp_path):
        result = run_cli("solve", write_puzzle(tmp_path, TWO_SOLUTION_PUZZLE), "--all")
        assert result.returncode == 0
        lines = result.stdout.splitlines()
        assert json.loads(lines[0]) == {"cells": [[1, 4, 5], [7, 2, 6], [8, 9, 3]]}
        assert json.loads(lines[1]) == {"cells": [[1, 5, 4], [6, 2, 7], [9, 8, 3]]}
        assert lines[2] == "2 solutions"

    def test_first_solution_only_by_default(self, tmp_path):
        result = run_cli("solve", write_puzzle(tmp_path, TWO_SOLUTION_PUZZLE))
        lines = result.stdout.splitlines()
        assert len(lines) == 2
        assert json.loads(lines[0]) == {"cells": [[1, 4, 5], [7, 2, 6], [8, 9, 3]]}
        assert lines[1] == "2 solutions"

    def test_unique_puzzle(self, tmp_path):
        result = run_cli("solve", write_puzzle(tmp_path, UNIQUE_PUZZLE))
        assert result.returncode == 0
        lines = result.stdout.splitlines()
        assert json.loads(lines[0]) == {"cells": [[1, 4, 6], [5, 2, 7], [8, 9, 3]]}
        assert lines[1] == "1 solution"

    def test_no_solution_exits_2(self, tmp_path):
        bad = dict(TWO_SOLUTION_PUZZLE, row_sums=[10, 15, 19])
        result = run_cli("solve", write_puzzle(tmp_path, bad))
        assert result.returncode == 2
        assert result.stdout.strip() == "0 solutions"

    def test_reads_stdin(self):
        result = run_cli("solve", "-", stdin=json.dumps(UNIQUE_PUZZLE))
        assert result.returncode == 0
        assert "1 solution" in result.stdout

    def test_malformed_json_exits_1_with_location(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"prescribed": [,]}')
        result = run_cli("solve", str(path))
        assert result.returncode == 1
        assert "line 1" in result.stderr

    def test_bad_field_exits_1_naming_field(self, tmp_path):
        bad = dict(TWO_SOLUTION_PUZZLE, row_sums=[10, 15])
        result = run_cli("solve", write_puzzle(tmp_path, bad))
        assert result.returncode == 1
        assert "row_sums" in result.stderr

    def test_missing_file_exits_1(self):
        result = run_cli("solve", "definitely-not-here.json")
        assert result.returncode == 1

    def test_pretty_renders_box(self, tmp_path):
        result = run_cli("solve", write_puzzle(tmp_path, UNIQUE_PUZZLE), "--pretty")
        assert result.returncode == 0
        assert "|  1 |  4 |  6 | = 11" in result.stdout
        assert " = 14 = 15 = 16" in result.stdout

    def test_limit_flag_reports_truncation(self, tmp_path):
        result = run_cli(
            "solve", write_puzzle(tmp_path, TWO_SOLUTION_PUZZLE), "--all", "--limit", "1"
        )
        assert result.returncode == 0
        lines = result.stdout.splitlines()
        assert len(lines) == 2
        assert lines[1] == "1+ solutions (limit 1 reached)"


class TestClassify:
    def test_rigid(self):
        result = run_cli("classify", "1", "3", "4")
        assert result.returncode == 0
        assert result.stdout.strip() == (
            "rigid: yes; shifts: none; solutions per puzzle: exactly 1"
        )

    def test_two_shifts(self):
        result = run_cli("classify", "1", "2", "3")
        assert result.returncode == 0
        assert result.stdout.strip() == (
            "rigid: no; shifts: 1,3; solutions per puzzle: 1 or 2"
        )

    def test_duplicate_values_exit_1(self):
        result = run_cli("classify", "1", "1", "2")
        assert result.returncode == 1

    def test_out_of_range_exit_1(self):
        result = run_cli("classify", "0", "1", "2")
        assert result.returncode == 1


class TestTable:
    def test_csv_round_trips(self):
        result = run_cli("table")
        assert result.returncode == 0
        assert parse_shift_table_csv(result.stdout) == build_shift_table()
        lines = result.stdout.splitlines()
        assert len(lines) == 85  # header + 84 rows
        assert '"2,3,7",3' in lines
        assert '"4,8,9",4' in lines

    def test_json_matches_table(self):
        result = run_cli("table", "--format", "json")
        rows = json.loads(result.stdout)
        assert len(rows) == 84
        rebuilt = {tuple(r["diagonal"]): frozenset(r["shifts"]) for r in rows}
        assert rebuilt == build_shift_table()


class TestGenerate:
    def test_byte_identical_runs(self):
        args = ("generate", "--regime", "full-diagonal", "--unique",
                "--seed", "7", "--count", "3")
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.returncode == 0
        assert first.stdout == second.stdout
        assert len(first.stdout.splitlines()) == 3

    def test_emitted_puzzles_are_unique(self):
        result = run_cli("generate", "--regime", "full-diagonal", "--unique",
                         "--seed", "7", "--count", "3")
        for line in result.stdout.splitlines():
            clue = ClueSet.from_dict(json.loads(line))
            assert count_solutions(clue) == 1

    def test_none_regime_unique(self):
        result = run_cli("generate", "--regime", "none", "--unique",
                         "--seed", "7", "--count", "1")
        assert result.returncode == 0
        clue = ClueSet.from_dict(json.loads(result.stdout))
        assert clue.prescribed == ()
        assert count_solutions(clue) == 1

    def test_bad_regime_exits_1(self):
        result = run_cli("generate", "--regime", "nope")
        assert result.returncode == 1

    def test_bad_count_exits_1(self):
        result = run_cli("generate", "--count", "0")
        assert result.returncode == 1

    def test_pretty_output(self):
        result = run_cli("generate", "--seed", "1", "--pretty")
        assert result.returncode == 0
        assert result.stdout.count("+----+----+----+") == 4


class TestVerify:
    def test_single_weak_regime(self):
        result = run_cli("verify", "--regime", "top-left", "--threads", "1")
        assert result.returncode == 0
        assert "regime top-left: solvable puzzles: 163387 (expected 163387) PASS" in result.stdout

    def test_requires_a_regime_choice(self):
        result = run_cli("verify")
        assert result.returncode == 1

    def test_mismatch_exits_3_with_detail(self, monkeypatch, capsys):
        # corrupt the census in-process to exercise the failure path
        import fubuki.cli as cli
        from fubuki.census import CensusReport

        def broken_census(regime, threads=None):
            return CensusReport(
                regime=regime,
                total_grids=362880,
                grids_by_solutions={1: 362880},
                puzzles_by_solutions={1: 362880},
            )

        monkeypatch.setattr(cli, "census", broken_census)
        code = cli.main(["verify", "--regime", "none", "--threads", "1"])
        captured = capsys.readouterr()
        assert code == 3
        assert "FAIL" in captured.out
        assert "mismatch" in captured.err and "46147" in captured.err


class TestUsage:
    def test_no_command_exits_1(self):
        result = run_cli()
        assert result.returncode == 1

    def test_unknown_command_exits_1(self):
        result = run_cli("frobnicate")
        assert result.returncode == 1

    def test_help_exits_0(self):
        result = run_cli("--help")
        assert result.returncode == 0
        for cmd in ("solve", "classify", "table", "verify", "generate"):
            assert cmd in result.stdout
