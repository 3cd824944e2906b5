import csv
import json
import math

import pytest

from pullin import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_transform_command_frozen(capsys):
    code, out, _ = run_cli(capsys, "transform", "--N", "2", "--alpha", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "transform"
    assert doc["result"]["voltage_factor"] == 12.25
    assert doc["result"]["N_eff"] == 2
    assert doc["result"]["regularity"] == "classical"


def test_branch_command_json(tmp_path, capsys):
    out_file = tmp_path / "branch.json"
    code, out, _ = run_cli(capsys, "branch", "--family", "mems", "--p", "2",
                           "--N", "2", "--m-points", "48", "--out", str(out_file))
    assert code == 0
    assert out == ""  # results went to the file
    doc = json.loads(out_file.read_text())
    res = doc["result"]
    assert res["fold_found"] is True
    assert res["lambda_star"] == pytest.approx(0.789, abs=5e-3)
    assert res["m_star"] == pytest.approx(0.445, abs=5e-3)
    assert len(res["points"]) == 48
    assert res["points"][0]["mu1"] is None


def test_branch_command_deterministic(tmp_path, capsys):
    args = ("branch", "--family", "mems", "--p", "2", "--N", "2",
            "--m-points", "24", "--m-max", "0.9")
    f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(list(args) + ["--out", str(f1)]) == 0
    assert cli.main(list(args) + ["--out", str(f2)]) == 0
    capsys.readouterr()
    assert f1.read_bytes() == f2.read_bytes()


def test_branch_csv_and_json_carry_the_same_numbers(tmp_path, capsys):
    args = ["branch", "--family", "exp", "--N", "3", "--m-points", "16",
            "--m-max", "5.0"]
    jf, cf = tmp_path / "r.json", tmp_path / "r.csv"
    assert cli.main(args + ["--out", str(jf)]) == 0
    assert cli.main(args + ["--format", "csv", "--out", str(cf)]) == 0
    capsys.readouterr()
    points = json.loads(jf.read_text())["result"]["points"]
    rows = list(csv.DictReader(cf.read_text().splitlines()))
    assert len(points) == len(rows)
    for p, row in zip(points, rows):
        assert float(row["m"]) == p["m"]
        assert float(row["lambda"]) == p["lambda"]
        assert row["mu1"] == ""


def test_constants_table(capsys):
    code, out, _ = run_cli(capsys, "constants", "--table", "exp", "--N", "3..5")
    assert code == 0
    entries = json.loads(out)["result"]["entries"]
    assert [e["N"] for e in entries] == [3, 4, 5]
    assert entries[0]["value"] == pytest.approx(1.99154, abs=1e-4)


def test_constants_decay_table(capsys):
    code, out, _ = run_cli(capsys, "constants", "--table", "decay",
                           "--N", "2", "--tau", "2..4:3")
    assert code == 0
    entries = json.loads(out)["result"]["entries"]
    assert entries[0]["value"] == pytest.approx(0.5, rel=1e-12)


def test_bounds_command(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--family", "mems", "--p", "2",
                           "--N", "2")
    assert code == 0
    doc = json.loads(out)
    names = {r["name"]: r for r in doc["result"]["reports"]}
    assert names["pullin_voltage_upper"]["value"] == pytest.approx(0.8568, abs=1e-3)
    assert names["pullin_distance_lower"]["value"] == pytest.approx(1 / 3, rel=1e-9)
    assert "mems_ball_supnorm_bound" in names


def test_invalid_dimension_exits_2(capsys):
    code, out, err = run_cli(capsys, "branch", "--N", "0.5")
    assert code == 2
    assert "invalid input" in err


def test_invalid_m_schedule_exits_2(capsys):
    code, _, err = run_cli(capsys, "branch", "--family", "mems", "--p", "2",
                           "--N", "2", "--m-min", "0.9", "--m-max", "0.5")
    assert code == 2


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["branch", "--no-such-flag", "1"])
    assert exc.value.code == 2


def test_verify_single_criterion(capsys):
    code, out, err = run_cli(capsys, "verify", "--criteria", "cube_bound")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["passed"] is True
    assert doc["result"]["criteria"][0]["name"] == "cube_bound"
    assert "[PASS] cube_bound" in err


def test_verify_unknown_criterion(capsys):
    code, _, err = run_cli(capsys, "verify", "--criteria", "no_such_check")
    assert code == 2
    assert "no_such_check" in err


def test_float_formatting_is_12_significant_digits():
    assert cli._fmt_float(math.pi) == "3.14159265359"
    assert cli._fmt_float(0.789229267914) == "0.789229267914"
    assert cli._fmt_float(float("inf")) == '"inf"'
    assert cli._fmt_float(float("nan")) == '"nan"'
