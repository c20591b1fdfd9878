import json

import pytest

from tropmoduli import cli
from tropmoduli.exactnum import OMEGA, CycScalar, ValScalar, valuation


def test_parse_laurent_terms():
    x = cli.parse_laurent("3 + w*t^2 - 1/2*t^-1")
    assert valuation(x) == -1
    expected = ValScalar.const(3) + ValScalar.monomial(OMEGA, 2) - ValScalar.monomial(CycScalar.rational(1) / 2, -1)
    assert x == expected
    assert cli.parse_laurent("t") == ValScalar.monomial(1, 1)
    assert cli.parse_laurent("-t^3") == ValScalar.monomial(-1, 3)
    assert cli.parse_laurent("(1 - w)*t") == ValScalar.monomial(1 - OMEGA, 1)
    assert cli.parse_laurent("2w^2") == ValScalar.const(2 * OMEGA * OMEGA)


def test_parse_points_separators_and_comments():
    pts = cli.parse_points("0; t  # cherry\n1\n\n1+t^2")
    assert len(pts) == 4
    assert valuation(pts[3] - pts[2]) == 2


@pytest.mark.parametrize("text,line,col", [("0\n1 + * t", 2, 5), ("t^", 1, 3), ("x", 1, 1)])
def test_parse_errors_report_position(text, line, col):
    with pytest.raises(cli.ParseError) as e:
        cli.parse_points(text)
    assert e.value.line == line and e.value.column == col


def test_curve_presets(tmp_path, capsys):
    assert cli.main(["curve", "--preset", "snowflake", "--out", str(tmp_path)]) == cli.EXIT_OK
    res = json.loads(capsys.readouterr().out)
    assert res["type"] == 7 and sorted(res["lengths"]) == ["2", "4", "6"]
    assert (tmp_path / "snowflake_tree.dot").read_text().startswith("graph tree")
    assert (tmp_path / "snowflake_curve.dot").exists()
    assert cli.main(["curve", "--preset", "star"]) == cli.EXIT_OK
    assert json.loads(capsys.readouterr().out)["type"] == 1
    assert cli.main(["curve", "--preset", "lambda-t"]) == cli.EXIT_OK
    res = json.loads(capsys.readouterr().out)
    assert (res["edge"], res["val_j"]) == ("1", "-2")


def test_curve_from_file(tmp_path, capsys):
    f = tmp_path / "pts.txt"
    f.write_text("0\nt^2\nt\n1\n3\n3+t^3\n")
    assert cli.main(["curve", str(f)]) == cli.EXIT_OK
    res = json.loads(capsys.readouterr().out)
    assert res["type"] == 6 and res["burkhardt_cone"] == "aab"
    f.write_text("0\n1\n1\n2\n3\n4\n")
    assert cli.main(["curve", str(f)]) == cli.EXIT_FAIL
    f.write_text("0\n1 +\n")
    assert cli.main(["curve", str(f)]) == cli.EXIT_USAGE


def test_usage_errors(capsys):
    assert cli.main([]) == cli.EXIT_USAGE
    assert cli.main(["curve"]) == cli.EXIT_USAGE
    assert cli.main(["curve", "--preset", "nope"]) == cli.EXIT_USAGE
    assert cli.main(["bergman", "--arrangement", "nope"]) == cli.EXIT_USAGE
    assert cli.main(["bergman", "--arrangement", "e7"]) == cli.EXIT_USAGE
    assert cli.main(["push", "--map", "nope"]) == cli.EXIT_USAGE
    assert cli.main(["verify", "--suite", "nope"]) == cli.EXIT_USAGE


def test_bergman_writes_files(tmp_path, capsys):
    assert cli.main(["bergman", "--arrangement", "m0n5", "--out", str(tmp_path)]) == cli.EXIT_OK
    assert "(25, 105, 105)" in capsys.readouterr().out
    csv = (tmp_path / "m0n5_fvector.csv").read_text()
    assert "25" in csv and "105" in csv
    first = (tmp_path / "m0n5_fan.json").read_text()
    cli.main(["bergman", "--arrangement", "m0n5", "--out", str(tmp_path)])
    assert (tmp_path / "m0n5_fan.json").read_text() == first


def test_push_igusa(tmp_path, capsys):
    assert cli.main(["push", "--map", "igusa", "--out", str(tmp_path)]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "(25, 105, 105)" in out and "{2: 105}" in out
    assert (tmp_path / "igusa_fan.json").exists()


def test_suite_result_jsonl():
    res = cli.run_suite("fast", only=["1", "5"])
    assert [c.checkName for c in res.checks] == ["1 Berg(M0N6)", "5 group orders"]
    rows = [json.loads(x) for x in res.to_jsonl().splitlines()]
    assert set(rows[0]) == {"checkName", "expected", "actual", "pass", "seconds"}
    assert res.passed and res.first_failure() is None


def test_verify_names_first_failure(monkeypatch, capsys):
    def broken(seed):
        return 1, 2

    monkeypatch.setattr(cli, "CHECKS", [("0 broken", "fast", broken)] + cli.CHECKS[:1])
    assert cli.main(["verify", "--suite", "fast"]) == cli.EXIT_FAIL
    assert "first failing check: 0 broken" in capsys.readouterr().out
