"""Tests for the commands in cli.py"""

import json

from kflip import cli


def test_present_text(capsys):
    assert cli.main(["present", "--m", "13", "--s", "4"]) == 0
    out = capsys.readouterr().out

    assert "Exterior generators: t1, t2, u1, u2, u3, v" in out


def test_present_json_to_file(tmp_path):
    path = tmp_path / "pres.json"

    assert cli.main(["present", "--m", "13", "--s", "4", "--format", "json", "--out", str(path)]) == 0
    with open(path, "r") as f:
        data = json.load(f)
    assert data["case"]["alpha"] == 6
    assert len(data["relations"]) == 11


def test_invalid_parameters(capsys):
    assert cli.main(["present", "--m", "12", "--s", "3"]) == 2
    assert "Invalid parameters" in capsys.readouterr().err
    assert cli.main(["verify", "--m", "7", "--s", "4"]) == 2
    assert cli.main(["present", "--m", "8", "--s", "2"]) == 2


def test_verify(capsys):
    assert cli.main(["verify", "--m", "13", "--s", "4"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_tables(capsys):
    assert cli.main(["tables", "--m", "13", "--s", "4"]) == 0
    out = capsys.readouterr().out

    assert "Pass rate: 27/30" in out
    assert "[table1/5]" in out

    assert cli.main(["tables", "--m", "14", "--s", "4"]) == 0
    assert capsys.readouterr().out.startswith("Skipped")


def test_grid(capsys):
    assert cli.main(["grid", "--m-max", "9", "--s-max", "2"]) == 0
    out = capsys.readouterr().out

    assert out.startswith("Skipped ")
    assert "OddTwo" in out


def test_verify_partial_case(capsys):
    assert cli.main(["verify", "--m", "8", "--s", "2"]) == 0
    assert "EvenTwo: PASS" in capsys.readouterr().out
