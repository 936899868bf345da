import io
import json

import pytest

from heightcensus import cli
from heightcensus import io as hio
from heightcensus.algnum import surd
from heightcensus.census import census_A


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_census_b_sqrt10(capsys):
    code, out, _ = run(capsys, "census-b", "--degree", "2", "--k", "0", "--max-height", "sqrt(10)")
    assert code == 0
    rows = hio.read_csv(io.StringIO(out))
    assert [r.key for r in rows] == [surd(n, 1, 2) for n in range(1, 11)]


def test_census_b_decimal_is_exact(capsys):
    # 3.16^2 < 10, so sqrt(10) is excluded under exact comparison
    code, out, _ = run(capsys, "census-b", "--degree", "2", "--k", "0", "--max-height", "3.16")
    assert code == 0
    assert len(out.strip().splitlines()) == 1 + 9


def test_orbit_golden(capsys):
    code, out, _ = run(capsys, "orbit", "--minpoly", "-1,-1,1", "--root-index", "1", "--max-steps", "6", "--eps", "0.001")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t") == ["0", "-1,-1,1", "1.61803398874989484820458683437", "2"]
    assert any(line.startswith("classification\tTendingToOne") for line in lines)


def test_family(capsys):
    code, out, _ = run(capsys, "family", "--name", "eisenstein", "--params", "5", "3")
    assert code == 0 and out.strip() == "-2,0,0,5"
    code, out, _ = run(capsys, "family", "--name", "quartic", "--params", "2")
    assert code == 0 and len(out.strip().splitlines()) == 10


def test_bad_flags_exit_2(capsys):
    code, _, err = run(capsys, "census-a", "--degree", "2")
    assert code == 2 and json.loads(err)["error"] == "usage"
    code, _, err = run(capsys, "census-a", "--degree", "2", "--k", "5", "--max-height", "2")
    assert code == 2 and "message" in json.loads(err)
    code, _, err = run(capsys, "nonsense")
    assert code == 2


def test_verify_multiplicativity(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "multiplicativity")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_failure_exit_1(capsys, monkeypatch):
    from heightcensus.verify import SuiteResult

    def broken():
        r = SuiteResult("broken")
        r.add("always", False, "planted")
        return r

    monkeypatch.setitem(cli.SUITES, "lemma22", broken)
    code, _, err = run(capsys, "verify", "--suite", "lemma22")
    assert code == 1 and json.loads(err)["error"] == "suite-failed"


def test_json_roundtrip(tmp_path, capsys):
    out = tmp_path / "a.json"
    code, _, _ = run(capsys, "census-a", "--degree", "2", "--k", "1", "--max-height", "2", "--format", "json", "--out", str(out))
    assert code == 0
    with open(out, encoding="utf-8") as fh:
        back = hio.read_json(fh)
    assert back == census_A(1, 2, 2)


def test_csv_roundtrip_and_lf():
    recs = census_A(0, 2, 2)
    text = hio.records_text(recs, "csv")
    assert "\r" not in text
    assert hio.read_csv(io.StringIO(text)) == recs


def test_slopes(tmp_path, capsys):
    csv_path = tmp_path / "b.csv"
    gp = tmp_path / "b.dat"
    run(capsys, "census-b", "--degree", "2", "--k", "0", "--max-height", "sqrt(40)", "--out", str(csv_path))
    code, out, _ = run(capsys, "slopes", "--input", str(csv_path), "--window", "all", "--gnuplot", str(gp))
    assert code == 0
    est = json.loads(out)
    assert est["slope"] == pytest.approx(2.0, abs=1e-9)
    assert gp.read_text().splitlines()[0].startswith("#")
