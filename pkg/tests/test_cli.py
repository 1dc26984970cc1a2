"""
Tests for the command-line front end: reports, exit codes and file round trips
"""

import json

import pytest

from src.cli import EXIT_INVALID, EXIT_OK, run


@pytest.fixture
def config(tmp_path):
    path = tmp_path / "app.json"
    path.write_text(json.dumps({"logging": {"level": "WARNING", "file": False}, "engine": {"threads": 1}}))
    return str(path)


def _json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_gm_table(config, capsys):
    code = run(["gm", "--config", config, "--host", "Kn:5", "--pattern", "K13", "--k", "9", "--H", "K1_4", "--format", "table"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert "value" in out
    assert "18" in out


def test_gm_reports_formula_agreement(config, capsys):
    assert run(["gm", "--config", config, "--host", "Kn:5", "--pattern", "K13", "--k", "9", "--H", "K1_4"]) == EXIT_OK
    data = _json(capsys)
    assert data["value"] == 18
    assert data["formula_agreement"] is True
    assert data["witness"]["colors"][:2] == [1, 1]


def test_formula(config, capsys):
    argv = ["formula", "--config", config, "--setting", "bipartite", "--pattern", "P5", "--t", "4", "--offset", "-1"]
    assert run(argv + ["--H", "K1_7"]) == EXIT_OK
    data = _json(capsys)
    assert data["value"] == 270
    assert data["colors"] == 15
    assert data["vacuous"] is False


def test_formula_failed_hypotheses_exit_invalid(config, capsys):
    argv = ["formula", "--config", config, "--pattern", "K13", "--t", "4", "--offset", "-1", "--H", "P3"]
    assert run(argv) == EXIT_INVALID
    assert "error:" in capsys.readouterr().err


def test_count_copies(config, capsys):
    assert run(["count-copies", "--config", config, "--host", "Kn:5", "--pattern", "P5"]) == EXIT_OK
    data = _json(capsys)
    assert (data["copies"], data["fox"], data["closed_form"]) == (60, 60, 60)


def test_count_containing(config, capsys):
    assert run(["count-containing", "--config", config, "--host", "Kn:6", "--pattern", "P4plus", "--edges", "0,1"]) == EXIT_OK
    data = _json(capsys)
    assert (data["count"], data["adjacent"], data["method"]) == (24, True, "lemma")

    assert run(["count-containing", "--config", config, "--host", "Kn:5", "--pattern", "K13", "--edges", "0,1"]) == EXIT_OK
    data = _json(capsys)
    assert (data["count"], data["method"]) == (2, "oracle")


def test_enumerate_csv(config, capsys):
    assert run(["enumerate", "--config", config, "--host", "Kn:4", "--k", "5", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "classes,host,k,orbit_total,profile"
    assert ",Kn:4,5,1800," in lines[1]


def test_gr_search(config, capsys):
    argv = ["gr", "--config", config, "--pattern", "P4", "--H", "P3", "--k", "3", "--n-range", "3..5", "--format", "csv"]
    assert run(argv) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,verdict,classes_examined"
    assert [line.split(",")[:2] for line in lines[1:]] == [["3", "bad"], ["4", "bad"], ["5", "good"]]


def test_structure_roundtrip(config, tmp_path, capsys):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"structure": 1, "sizes": [1, 2, 2]}))
    coloring = tmp_path / "out" / "coloring.json"
    assert run(["generate-structure", "--config", config, "--structure", str(spec), "--out", str(coloring)]) == EXIT_OK

    assert run(["classify", "--config", config, "--coloring", str(coloring)]) == EXIT_OK
    data = _json(capsys)
    assert data["matched"] == 1
    assert data["witness"] is None

    assert run(["count-colored", "--config", config, "--host", "Kn:5", "--coloring", str(coloring), "--pattern", "K13"]) == EXIT_OK
    assert _json(capsys)["rainbow"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["count-copies", "--host", "K5", "--pattern", "P4"],
        ["count-copies", "--host", "Kn:5", "--pattern", "Q4"],
        ["count-containing", "--host", "Kn:5", "--pattern", "P4", "--edges", "0,0"],
        ["gm", "--host", "Kn:4", "--pattern", "K13", "--H", "P3", "--k", "7"],
        ["gm", "--host", "Kn:4", "--pattern", "K13", "--H", "P3", "--k", "5", "--threads", "0"],
        ["formula", "--setting", "bipartite", "--pattern", "P4plus", "--t", "4", "--H", "P3"],
    ],
)
def test_invalid_input_exits_2(config, capsys, argv):
    assert run(argv[:1] + ["--config", config] + argv[1:]) == EXIT_INVALID
    assert capsys.readouterr().err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    assert run(["count-copies", "--host", "Kn:5", "--pattern", "P4", "--bogus"]) == EXIT_INVALID
    assert run(["formula", "--pattern", "P5", "--t", "4", "--offset", "1"]) == EXIT_INVALID
    assert run([]) == EXIT_INVALID


def test_help_exits_0(capsys):
    assert run(["--help"]) == EXIT_OK
    assert "count-copies" in capsys.readouterr().out


def test_bad_config_exits_2(tmp_path, capsys):
    path = tmp_path / "app.json"
    path.write_text(json.dumps({"engine": {"threads": 0}}))
    assert run(["count-copies", "--config", str(path), "--host", "Kn:5", "--pattern", "P4"]) == EXIT_INVALID
    assert run(["count-copies", "--config", str(tmp_path / "none.json"), "--host", "Kn:5", "--pattern", "P4"]) == EXIT_INVALID
