"""Command-line surface: compute, verify, breakdown, table loading."""

from fractions import Fraction

import pytest

from multicover.cli import load_reference_table, main
from multicover.exact import parse_factored
from multicover.localize import multiple_cover_invariant


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_plain(capsys):
    code, out, _ = run(capsys, "compute", "2")
    assert code == 0
    assert out.strip() == "-1/200"


def test_compute_factored(capsys):
    code, out, _ = run(capsys, "compute", "2", "--factored")
    assert code == 0
    assert out.strip() == "-1/(2^3*5^2)"


def test_compute_output_reparses_exactly(capsys):
    for flags in ([], ["--factored"]):
        code, out, _ = run(capsys, "compute", "3", *flags)
        assert code == 0
        value = parse_factored(out.strip()) if flags else Fraction(out.strip())
        assert value == multiple_cover_invariant(3)


def test_compute_rejects_low_degree(capsys):
    code, out, err = run(capsys, "compute", "1")
    assert code == 2
    assert out == ""
    assert "degree must be at least 2" in err


def test_compute_respects_degree_cap(capsys):
    code, _, err = run(capsys, "compute", "13")
    assert code == 2
    assert "at most 12" in err


def test_breakdown_double_cover(capsys):
    code, out, _ = run(capsys, "compute", "2", "--breakdown")
    assert code == 0
    records = [r for r in out.strip().split("\n\n") if r.startswith("config=")]
    assert len(records) == 4
    assert "factor.zero.smooth[base->1]=-2/3*a^-1" in out
    assert "factor.zero.step1.main=-1/2*a^-3" in out
    assert "factor.zero.smooth[base->1]=-2/5*a^-1" in out
    assert "factor.zero.step1.main=1/2*a^-3" in out
    assert out.strip().endswith("sum=-1/200")
    totals = [
        Fraction(line.split("=", 1)[1])
        for line in out.splitlines()
        if line.startswith("total=")
    ]
    assert sum(totals) == Fraction(-1, 200)


def test_breakdown_record_count_degree_three(capsys):
    # 4 chains per side, frozen by the enumeration regression
    code, out, _ = run(capsys, "compute", "3", "--breakdown")
    assert code == 0
    assert out.count("config=") == 16


def test_verify_single_row(capsys):
    code, out, _ = run(capsys, "verify", "--max-degree", "2")
    assert code == 0
    assert out.strip() == "d=2 PASS"


def test_verify_through_degree_five(capsys):
    code, out, _ = run(capsys, "verify", "--max-degree", "5")
    assert code == 0
    assert out.splitlines() == [f"d={d} PASS" for d in range(2, 6)]


def test_verify_full_table(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert out.splitlines() == [f"d={d} PASS" for d in range(2, 10)]


def test_verify_detects_perturbed_table(tmp_path, capsys):
    table = tmp_path / "table.txt"
    table.write_text("2\t-1/(2^3*5^2)\n3\t-1/(2^3*5^2)\n", encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--max-degree", "3", "--table", str(table))
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "d=2 PASS"
    assert lines[1].startswith("d=3 FAIL")


def test_verify_range_check(capsys):
    code, _, err = run(capsys, "verify", "--max-degree", "10")
    assert code == 2
    assert "between 2 and 9" in err


def test_verify_missing_row(tmp_path, capsys):
    table = tmp_path / "table.txt"
    table.write_text("2\t-1/(2^3*5^2)\n", encoding="utf-8")
    code, _, err = run(capsys, "verify", "--max-degree", "3", "--table", str(table))
    assert code == 2
    assert "no row for d=3" in err


def test_malformed_table_rejected(tmp_path, capsys):
    table = tmp_path / "table.txt"
    table.write_text("2\t-1/(4^3)\n", encoding="utf-8")
    code, _, err = run(capsys, "verify", "--max-degree", "2", "--table", str(table))
    assert code == 2
    assert "cannot load table" in err


def test_shipped_table_shape():
    table = load_reference_table()
    assert sorted(table.rows) == list(range(2, 10))
    assert table.value(2) == Fraction(-1, 200)
    # comments and blank lines are ignored by the loader
    assert table.value(9).denominator % 3**96 == 0
