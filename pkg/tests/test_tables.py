"""
Tests for the table rebuild: closed form against search, cell by cell
"""

import json

import pytest

from src.host import HostKind
from src.patterns import RainbowTarget, star
from src.tables import conforming_h, verify_cell, verify_tables

COMPLETE = HostKind.COMPLETE
BIPARTITE = HostKind.COMPLETE_BIPARTITE


def test_conforming_h():
    assert conforming_h(0) == star(2)
    assert conforming_h(-1) == star(3)
    assert conforming_h(-2) == star(4)


def test_verify_cell_agrees():
    cell = verify_cell(COMPLETE, RainbowTarget.K13, 4, -1)
    assert (cell.formula, cell.search, cell.agree) == (3, 3, True)
    assert cell.setting == "Kn"
    assert not cell.vacuous

    cell = verify_cell(BIPARTITE, RainbowTarget.P4, 3, 0)
    assert (cell.formula, cell.search, cell.agree) == (36, 36, True)


def test_verify_cell_vacuous():
    # the bound K_{1,3} has fewer edges than H needs
    cell = verify_cell(BIPARTITE, RainbowTarget.K13, 3, -2)
    assert cell.vacuous
    assert (cell.formula, cell.search, cell.agree) == (4, 4, True)


def test_verify_cell_writes_the_witness(tmp_path):
    cell = verify_cell(COMPLETE, RainbowTarget.K13, 4, -2, witness_dir=str(tmp_path / "witnesses"))
    assert cell.search == 1
    with open(cell.witness_file) as file:
        data = json.load(file)
    assert data["host"] == "Kn:4"
    assert data["k"] == 4
    assert cell.witness_file.endswith("Kn_K13_-2_4.json")


def test_verify_tables_restricted():
    ranges = {
        (COMPLETE, RainbowTarget.K13): (4, 4),
        (COMPLETE, RainbowTarget.P4PLUS): (5, 5),
        (COMPLETE, RainbowTarget.P4): (4, 4),
        (COMPLETE, RainbowTarget.P5): (5, 5),
    }
    report = verify_tables(ranges, settings=(COMPLETE,), offsets=(-1,))
    assert [(cell.family, cell.search) for cell in report.cells] == [
        ("K13", 3),
        ("P4plus", 52),
        ("P4", 8),
        ("P5", 48),
    ]
    assert report.passed
    assert report.cells[1].published == 50
    assert report.to_dict()["passed"] is True


@pytest.mark.slow
def test_complete_tables_reproduced():
    report = verify_tables(settings=(COMPLETE,), offsets=(-1, -2))
    assert report.passed
    values = {(cell.family, cell.offset, cell.t): cell.search for cell in report.cells}
    assert values[("K13", -1, 4)] == 3
    assert values[("K13", -1, 5)] == 18
    assert values[("K13", -2, 4)] == 1
    assert values[("K13", -2, 5)] == 14
    assert values[("P4", -1, 4)] == 8
    assert values[("P4", -2, 4)] == 4
    assert values[("P5", -2, 5)] == 36
    assert values[("P5", -2, 6)] == 288
    published = {(cell.family, cell.offset, cell.t): cell.published for cell in report.cells}
    assert published[("P5", -2, 5)] == 38


@pytest.mark.slow
def test_bipartite_tables_reproduced():
    report = verify_tables(settings=(BIPARTITE,), offsets=(-1, -2))
    assert report.passed
    values = {(cell.family, cell.offset, cell.t): cell.search for cell in report.cells}
    assert values[("K13", -1, 3)] == 5
    assert values[("K13", -1, 4)] == 30
    assert values[("K13", -2, 3)] == 4
    assert values[("K13", -2, 4)] == 28
    assert values[("K13", -2, 5)] == 93
