import json

import pytest

from mx1 import MapParams, chi_table
from mx1.cli import main
from mx1.render import (
    OutputSpec,
    table_from_json_obj,
    table_to_csv,
    table_to_json,
    table_to_json_obj,
)

P3 = MapParams(3)
P5 = MapParams(5)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_table_csv_totals(capsys):
    code, out = run(capsys, "table", "--m", "3", "--kmax", "10", "--format", "csv")
    assert code == 0
    totals = [int(line.split(",")[2]) for line in out.splitlines()
              if line.startswith("#total,")]
    assert totals == [1, 1, 1, 2, 3, 4, 8, 13, 19, 38, 64]


def test_table_json_m5_k20_total(capsys):
    code, out = run(capsys, "table", "--m", "5", "--kmax", "20", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["m"] == 5 and obj["kmax"] == 20
    assert obj["columns"][20]["total"] == "232912"


def test_table_rejects_unsupported_multiplier(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "--m", "7", "--kmax", "3"])
    assert exc.value.code == 2


def test_json_round_trip():
    table = chi_table(25, P5)
    assert table_from_json_obj(table_to_json_obj(table)) == table


def test_output_determinism():
    t1 = chi_table(15, P3)
    t2 = chi_table(15, P3)
    assert table_to_csv(t1) == table_to_csv(t2)
    assert table_to_json(t1) == table_to_json(t2)


def test_fk_checkpoint(capsys):
    code, out = run(capsys, "fk", "--m", "3", "--k", "60", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1].split(",")[1] == "2216134944775156"


def test_fk_k0(capsys):
    code, out = run(capsys, "fk", "--m", "3", "--k", "0")
    assert code == 0
    assert out.splitlines()[1].split(",")[3] == "1"


def test_verify_small(capsys):
    code, out = run(capsys, "verify", "--m", "3", "--kmax", "8")
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:-1]]
    assert all(row[3] == "equal" for row in rows)


def test_verify_m5_reports_surplus_without_failing(capsys):
    code, out = run(capsys, "verify", "--m", "5", "--kmax", "10")
    assert code == 0
    row10 = [line for line in out.splitlines() if line.startswith("10,")][0]
    brute, table = int(row10.split(",")[1]), int(row10.split(",")[2])
    assert table == 266 and brute >= table


def test_verify_ceiling_env(capsys, monkeypatch):
    monkeypatch.setenv("MX1_SIEVE_CEILING", "5")
    code, _ = run(capsys, "verify", "--m", "3", "--kmax", "6")
    assert code == 2
    monkeypatch.setenv("MX1_SIEVE_CEILING", "6")
    code, _ = run(capsys, "verify", "--m", "3", "--kmax", "6")
    assert code == 0


def test_traj(capsys):
    code, out = run(capsys, "traj", "--n", "7", "--m", "3", "--k", "4")
    assert code == 0
    assert out.strip() == "7 11 17 26 13 | word 1110 | chi > 4"


def test_solve_families(capsys):
    code, out = run(capsys, "solve", "--word", "1", "--m", "3")
    assert code == 0
    assert out.strip() == "1 = 2y - 3x; x = 1 + 2q, y = 2 + 3q"
    code, out = run(capsys, "solve", "--word", "0", "--m", "3")
    assert code == 0
    assert out.strip() == "0 = 2y - 1x; x = 2 + 2q, y = 1 + 1q"


def test_solve_rejects_bad_word(capsys):
    code = main(["solve", "--word", "01x", "--m", "3"])
    assert code == 2


def test_write_to_file(tmp_path, capsys):
    dest = tmp_path / "table.csv"
    code = main(["table", "--m", "3", "--kmax", "5", "--out", str(dest)])
    assert code == 0
    text = dest.read_text()
    assert text.startswith("k2,k,count\n")
    assert "\r" not in text


def test_write_failure_exit_code(capsys):
    code = main(["table", "--m", "3", "--kmax", "3",
                 "--out", "/nonexistent-dir/table.csv"])
    assert code == 1


def test_output_spec_validation():
    with pytest.raises(ValueError):
        OutputSpec(format="xml")
    with pytest.raises(ValueError):
        OutputSpec(precision=0)
