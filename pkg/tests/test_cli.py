from __future__ import annotations

import json

import pytest

import lieverdict.cli as cli
from lieverdict.cli import main
from lieverdict.fixtures import fixture_path
from lieverdict.verdicts import InvariantBreach


def run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out), out


def test_lpa_r_infty(capsys):
    code, rep, _ = run_json(capsys, "lpa", "--field", "Q", fixture_path("r_infty"))
    assert code == 0
    assert rep["simple"]["verdict"] == "Simple" and rep["lie"]["verdict"] == "Simple"
    assert rep["theorems"]


def test_groupoid_pair2_over_f2(capsys):
    code, rep, _ = run_json(capsys, "groupoid", "--field", "Fp:2", fixture_path("pair2"))
    assert code == 0
    assert rep["effective"]["value"] and rep["minimal"]["value"]
    assert rep["lie"]["verdict"] == "NotSimple"


def test_oracle_grid(capsys):
    code, rep, _ = run_json(capsys, "oracle", "--primes", "2,3,5", "--max-n", "4")
    assert code == 0
    assert len(rep["rows"]) == 9
    assert all(r["agree"] for r in rep["rows"])
    for r in rep["rows"]:
        n, p = int(r["groupoid"][1:]), int(r["field"].split(":")[1])
        assert r["theorem"] == r["oracle"] == ("Simple" if n % p else "NotSimple")


def test_text_format(capsys):
    assert main(["lpa", fixture_path("e2"), "--field", "Fp:2"]) == 0
    out = capsys.readouterr().out
    assert "NotSimple" in out


@pytest.mark.parametrize("argv, code", [
    (["groupoid", fixture_path("z2")], 2),
    (["lpa", fixture_path("toeplitz")], 2),
    (["ep", fixture_path("nhaus")], 2),
    (["ep", fixture_path("swap")], 0),
    (["ep", fixture_path("triv2")], 0),
    (["lpa", fixture_path("r3"), "--field", "Fp:2"], 0),
])
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code
    capsys.readouterr()


@pytest.mark.parametrize("argv", [
    ["lpa", fixture_path("r2")],
    ["groupoid", fixture_path("pair3"), "--field", "Fp:3"],
    ["ep", fixture_path("swap")],
    ["ep", fixture_path("nhaus")],
    ["oracle", "--max-n", "3"],
])
def test_reports_deterministic_and_round_trip(capsys, argv):
    code1, rep1, out1 = run_json(capsys, *argv)
    code2, _, out2 = run_json(capsys, *argv)
    assert code1 == code2 and out1 == out2
    assert json.dumps(rep1, indent=2) + "\n" == out1


def test_bad_inputs_exit_2(capsys, tmp_path):
    assert main(["lpa", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": ["v"], "edges": [{"name": "e", "src": "v", "rng": "w"}]}))
    assert main(["lpa", str(bad)]) == 2
    assert main(["lpa", fixture_path("r2"), "--field", "Fp:4"]) == 2
    assert main(["oracle", "--primes", "2,x"]) == 2
    err = capsys.readouterr().err
    assert err.count("error") >= 4


def test_invariant_breach_exit_3(capsys, monkeypatch):
    def boom(cfg):
        raise InvariantBreach("theorem and oracle disagree")

    monkeypatch.setitem(cli.RUNNERS, "oracle", boom)
    assert main(["oracle"]) == 3
    assert "invariant breach" in capsys.readouterr().err
