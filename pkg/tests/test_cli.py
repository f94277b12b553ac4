import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fordseq.cli import main
from fordseq.ford import MAX_ORDER_ENV
from fordseq.verify import corrupted_constructor, run_verification

GOLDEN = Path(__file__).parent / "golden"

# published suffix skews, orders 4 and 6, m = 0..n-1
SKEW_ROW_4 = [-1, -3, -3, -1]
SKEW_ROW_6 = [-1, -8, -9, -7, -5, -1]


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestGenerate:
    @pytest.mark.parametrize(
        "argv, expected",
        [
            (["--order", "4"], "0000100110101111\n"),
            (["--order", "1"], "01\n"),
            (["--order", "3", "--method", "greedy"], "00010111\n"),
        ],
    )
    def test_examples(self, argv, expected):
        assert run("generate", *argv) == (0, expected)

    def test_cap_exceeded(self, capsys):
        code, out = run("generate", "--order", "15", "--method", "greedy")
        assert code == 2 and out == ""
        assert "greedy cap" in capsys.readouterr().err

    def test_environment_cap(self, monkeypatch, capsys):
        monkeypatch.setenv(MAX_ORDER_ENV, "5")
        assert run("generate", "--order", "6")[0] == 2
        assert run("generate", "--order", "5")[0] == 0

    def test_usage_error(self, capsys):
        assert run("generate")[0] == 2
        assert run("nonsense")[0] == 2


class TestProfile:
    def test_csv_shape(self):
        code, out = run("profile", "--order", "3")
        assert code == 0
        assert out.endswith("\n") and "\r" not in out
        lines = out.splitlines()
        assert lines[0] == "position,bit,skew,breakpoint"
        assert len(lines) == 1 + 8
        assert all(not line.endswith(",,") for line in lines)
        assert lines[1:] == ["1,0,1,3", "2,0,2,", "3,0,3,", "4,1,2,2", "5,0,3,", "6,1,2,", "7,1,1,1", "8,1,0,0"]

    @pytest.mark.parametrize("n, table_row", [(4, SKEW_ROW_4), (6, SKEW_ROW_6)])
    def test_breakpoints_carry_table_values(self, n, table_row):
        _, out = run("profile", "--order", str(n))
        rows = list(csv.DictReader(io.StringIO(out)))
        labelled = {int(r["breakpoint"]): int(r["skew"]) for r in rows if r["breakpoint"]}
        assert sorted(labelled) == list(range(n + 1))
        # the suffix after breakpoint i keeps the factors with at most i - 1 zeros in a row;
        # the whole sequence has skew 0
        for i in range(1, n + 1):
            assert -labelled[i] == table_row[i - 1]
        assert labelled[0] == 0

    def test_order_six_breakpoint_before_order_one_segment(self):
        _, out = run("profile", "--order", "6")
        rows = list(csv.DictReader(io.StringIO(out)))
        text = "".join(r["bit"] for r in rows)
        end = text.find("001111") + 6
        assert rows[end - 1]["breakpoint"] == "2"
        assert -int(rows[end - 1]["skew"]) == -8

    def test_json(self):
        code, out = run("profile", "--order", "2", "--format", "json")
        data = json.loads(out)
        assert data["order"] == 2
        assert data["rows"][0] == {"position": 1, "bit": 0, "skew": 1, "breakpoint": 2}
        assert [r["breakpoint"] for r in data["rows"]] == [2, None, 1, 0]


class TestTables:
    def test_text_golden(self):
        assert run("tables", "--max-order", "10") == (0, (GOLDEN / "tables_10.txt").read_text())

    def test_csv_golden(self):
        assert run("tables", "--max-order", "10", "--format", "csv") == (0, (GOLDEN / "tables_10.csv").read_text())

    def test_single_row(self):
        _, out = run("tables", "--max-order", "1", "--format", "json")
        assert json.loads(out) == {"order": 1, "rows": [{"n": 1, "skew": [-1], "length": [1]}]}

    def test_json_rows(self):
        _, out = run("tables", "--max-order", "10", "--format", "json")
        data = json.loads(out)
        assert data["rows"][8]["skew"] == [-1, -34, -57, -49, -33, -21, -13, -8, -1]
        assert data["rows"][7]["length"] == [1, 47, 131, 191, 223, 239, 247, 255]

    def test_ascii_only(self):
        _, out = run("tables", "--max-order", "6")
        out.encode("ascii")

    def test_over_cap(self, monkeypatch):
        monkeypatch.setenv(MAX_ORDER_ENV, "8")
        assert run("tables", "--max-order", "9")[0] == 2


class TestSeq:
    def test_examples(self):
        assert run("seq", "G", "--m", "2", "--count", "6") == (0, "1\n1\n2\n3\n5\n8\n")
        assert run("seq", "H", "--m", "2", "--count", "5", "--comma") == (0, "2,1,3,4,7\n")
        assert run("seq", "P", "--m", "3", "--count", "7", "--comma") == (0, "0,1,0,1,2,3,6\n")
        assert run("seq", "F", "--count", "5", "--comma") == (0, "0,1,1,2,3\n")
        assert run("seq", "L", "--count", "3", "--comma") == (0, "2,1,3\n")

    def test_errors(self, capsys):
        assert run("seq", "P", "--m", "1")[0] == 2
        assert run("seq", "G")[0] == 2
        assert run("seq", "F", "--count", "100")[0] == 2


class TestCompositions:
    def test_count(self):
        assert run("compositions", "--n", "5", "--m", "2") == (0, "6\n")
        assert run("compositions", "--n", "1", "--m", "3") == (0, "0\n")

    def test_list(self):
        code, out = run("compositions", "--n", "5", "--m", "2", "--list")
        assert code == 0
        assert set(out.splitlines()) == {"5", "5'", "2+3", "3+2", "3'+2", "2+3'"}
        assert run("compositions", "--n", "4", "--m", "3", "--list")[1] == "2+2\n4\n4'\n4''\n"

    def test_list_cap(self, capsys):
        assert run("compositions", "--n", "30", "--m", "2", "--list")[0] == 2
        assert run("compositions", "--n", "30", "--m", "2")[0] == 0


class TestVerify:
    def test_small_scale_passes(self):
        report = run_verification(8, 4)
        assert report.passed, report.to_text()
        names = [r.name for r in report.results]
        assert names == sorted(names)

    def test_corrupted_sequence_fails(self):
        report = run_verification(6, 3, construct=corrupted_constructor())
        assert not report.passed
        failure = report.first_failure()
        assert failure.counterexample

    def test_cli_default_scale(self):
        code, out = run("verify")
        assert code == 0
        assert out.splitlines()[-1].startswith("overall: PASS")
        assert "tables.reference_values  [1 <= n <= 10]" in out

    def test_cli_fault_injection(self, capsys):
        code, out = run("verify", "--max-order", "6", "--max-m", "3", "--inject-fault", "--format", "json")
        assert code == 1
        data = json.loads(out)
        assert data["passed"] is False
        assert any(c["counterexample"] for c in data["checks"])
        assert "verification failed" in capsys.readouterr().err


@settings(max_examples=1000)
@given(
    st.sampled_from(
        [
            ["generate", "--order"],
            ["profile", "--order"],
            ["tables", "--max-order"],
            ["seq", "H", "--m"],
            ["compositions", "--m", "2", "--n"],
        ]
    ),
    st.integers(1, 7),
)
def test_commands_are_deterministic(prefix, value):
    first = run(*prefix, str(value))
    assert first[0] == 0
    assert run(*prefix, str(value)) == first
    first[1].encode("ascii")


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "fordseq", "generate", "--order", "3"], capture_output=True, text=True, check=True
    )
    assert result.stdout == "00010111\n"
