import json

import pytest
from click.testing import CliRunner

from axialalg.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def _make(runner, tmp_path, name, *args):
    path = tmp_path / name
    r = runner.invoke(main, ["make", *args, "--out", str(path)])
    assert r.exit_code == 0, r.output
    return str(path)


def test_make_writes_deterministic_file(runner, tmp_path):
    f1 = _make(runner, tmp_path, "u1.json", "U", "--n", "3", "--lambda", "3", "--field", "Q")
    f2 = _make(runner, tmp_path, "u2.json", "U", "--n", "3", "--lambda", "3", "--field", "Q")
    assert open(f1).read() == open(f2).read()
    doc = json.load(open(f1))
    assert doc["dim"] == 3 and doc["basis"] == ["e1", "e2", "e3"]


def test_make_to_stdout(runner):
    r = runner.invoke(main, ["make", "exc3", "--lambda", "3", "--field", "Fp:7"])
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert doc["field"] == {"kind": "Fp", "p": 7}


def test_make_bad_parameters_exit_2(runner):
    r = runner.invoke(main, ["make", "U", "--n", "2", "--lambda", "1"])
    assert r.exit_code == 2
    r = runner.invoke(main, ["make", "U", "--n", "2", "--lambda", "3", "--field", "Fp:9"])
    assert r.exit_code == 2
    r = runner.invoke(main, ["make", "B", "--lambda", "3", "--phi", "7"])
    assert r.exit_code == 2


def test_analyze_ok_exit_0(runner, tmp_path):
    f = _make(runner, tmp_path, "u.json", "U", "--n", "3", "--lambda", "3", "--field", "Q")
    r = runner.invoke(main, ["analyze", f, "--max-axes", "24"])
    assert r.exit_code == 0
    assert "verdict: ok" in r.output
    assert "flexible: yes" in r.output


def test_analyze_json_byte_identical(runner, tmp_path):
    f = _make(runner, tmp_path, "e.json", "exc3", "--lambda", "3", "--field", "Fp:7")
    r1 = runner.invoke(main, ["analyze", f, "--json", "--idempotents"])
    r2 = runner.invoke(main, ["analyze", f, "--json", "--idempotents"])
    assert r1.exit_code == 0 and r2.exit_code == 0
    assert r1.output == r2.output
    body = json.loads(r1.output)
    assert body["verdict"] == "ok"
    assert body["report"]["idempotents"]["comparison"] == "equal"


def test_analyze_corrupted_table_exit_1(runner, tmp_path):
    f = _make(runner, tmp_path, "e.json", "exc3", "--lambda", "3", "--field", "Fp:7")
    doc = json.load(open(f))
    doc["table"][2][2] = [[2, "1"]]  # y*y = y breaks the fusion rules
    bad = tmp_path / "bad.json"
    json.dump(doc, open(bad, "w"))
    r = runner.invoke(main, ["analyze", str(bad)])
    assert r.exit_code == 1
    assert "fusion" in r.output
    assert "verdict: violations" in r.output


def test_analyze_missing_file_exit_2(runner, tmp_path):
    r = runner.invoke(main, ["analyze", str(tmp_path / "absent.json")])
    assert r.exit_code == 2


def test_analyze_parse_error_reports_position(runner, tmp_path):
    f = tmp_path / "broken.json"
    f.write_text('{"field": {"kind": "Q"',)
    r = runner.invoke(main, ["analyze", str(f)])
    assert r.exit_code == 2
    assert "line" in r.output and "column" in r.output


def test_analyze_rejects_unknown_fields(runner, tmp_path):
    f = _make(runner, tmp_path, "u.json", "U", "--n", "2", "--lambda", "3", "--field", "Q")
    doc = json.load(open(f))
    doc["junk"] = 1
    bad = tmp_path / "junk.json"
    json.dump(doc, open(bad, "w"))
    r = runner.invoke(main, ["analyze", str(bad)])
    assert r.exit_code == 2


def test_idempotents_command(runner, tmp_path):
    f = _make(runner, tmp_path, "e.json", "exc3", "--lambda", "3", "--field", "Fp:7")
    r = runner.invoke(main, ["idempotents", f])
    assert r.exit_code == 0
    assert "brute force total: 16" in r.output
    assert "comparison: equal" in r.output
    assert "[formula]" in r.output


def test_decompose_command(runner, tmp_path):
    f = _make(runner, tmp_path, "e.json", "exc3", "--lambda", "3", "--field", "Fp:7")
    r = runner.invoke(main, ["decompose", f, "--json"])
    assert r.exit_code == 0
    body = json.loads(r.output)
    assert body["pairwise_products_zero"] is True


def test_frobenius_command(runner, tmp_path):
    f = _make(runner, tmp_path, "b.json", "B", "--lambda", "1/2", "--phi", "2", "--field", "Q")
    r = runner.invoke(main, ["frobenius", f, "--max-axes", "24"])
    assert r.exit_code == 0
    assert "radical dim: 0" in r.output
    assert "closed" in r.output


def test_graph_command(runner, tmp_path):
    f = _make(runner, tmp_path, "e.json", "exc3", "--lambda", "2", "--field", "Fp:5")
    out = tmp_path / "g.dot"
    r = runner.invoke(main, ["graph", f, "--out", str(out)])
    assert r.exit_code == 0
    text = out.read_text()
    assert text.startswith("graph axial {") and "--" in text
