"""
Tests for the repeated-class colorings, the f-values and the damage formulas
"""

import pytest

from src.counting import count_colored
from src.errors import UnsupportedCaseError, ValidationError
from src.host import HostGraph, HostKind
from src.patterns import RainbowTarget, builtin_pattern
from src.proof_cases import (
    F_CASES,
    PlacementShape,
    TRIPLE_SHAPES,
    damage_formula,
    f_case_coloring,
    f_value,
    shape_coloring,
    shape_fits,
)

F_COMPLETE = {
    4: (4, 3, 2, 1, 3, 3),
    5: (20, 18, 16, 14, 16, 16),
    6: (60, 57, 54, 51, 53, 54),
    7: (140, 136, 132, 128, 130, 132),
}

F_BIPARTITE = {
    3: (6, 5, 4, 5, 5),
    4: (32, 30, 28, 28, 28),
    5: (100, 97, 94, 93, 94),
    6: (240, 236, 232, 230, 232),
}


@pytest.mark.parametrize(
    "setting, table",
    [(HostKind.COMPLETE, F_COMPLETE), (HostKind.COMPLETE_BIPARTITE, F_BIPARTITE)],
)
def test_f_values(setting, table):
    for t, expected in table.items():
        assert tuple(f_value(setting, index, t) for index in range(1, len(expected) + 1)) == expected


def test_f_value_rejects_out_of_range():
    with pytest.raises(ValidationError):
        f_value(HostKind.COMPLETE, 7, 5)
    with pytest.raises(ValidationError):
        f_value(HostKind.COMPLETE_BIPARTITE, 6, 5)
    with pytest.raises(ValidationError):
        f_value(HostKind.COMPLETE, 1, 3)
    with pytest.raises(ValidationError):
        f_value(HostKind.COMPLETE_BIPARTITE, 1, 2)


@pytest.mark.parametrize(
    "setting, sizes",
    [(HostKind.COMPLETE, [4, 5, 6, 7]), (HostKind.COMPLETE_BIPARTITE, [3, 4, 5])],
)
def test_f_values_count_rainbow_stars(setting, sizes):
    k13 = builtin_pattern("K13")
    for t in sizes:
        host = HostGraph(setting, t)
        for index in F_CASES[setting]:
            try:
                c = f_case_coloring(setting, index, t)
            except UnsupportedCaseError:
                continue
            assert c.k == host.m - 2
            assert count_colored(host, c, k13).rainbow == f_value(setting, index, t), (t, index)


def test_f_case_coloring_needs_room():
    with pytest.raises(UnsupportedCaseError):
        f_case_coloring(HostKind.COMPLETE, 6, 4)
    with pytest.raises(UnsupportedCaseError):
        f_case_coloring(HostKind.COMPLETE_BIPARTITE, 5, 3)
    with pytest.raises(ValidationError):
        f_case_coloring(HostKind.COMPLETE_BIPARTITE, 6, 4)


def test_f_case_coloring_falls_back_to_two_pairs():
    # three disjoint edges do not fit K_4
    c = f_case_coloring(HostKind.COMPLETE, 1, 4)
    assert sorted(len(edges) for edges in c.classes().values()) == [1, 1, 2, 2]


def test_shape_fits():
    assert not shape_fits(HostGraph.complete(5), PlacementShape.THREE_MATCHING)
    assert shape_fits(HostGraph.complete(6), PlacementShape.THREE_MATCHING)
    assert not shape_fits(HostGraph.bipartite(6), PlacementShape.TRIANGLE)
    assert shape_fits(HostGraph.bipartite(3), PlacementShape.STAR)
    assert not shape_fits(HostGraph.bipartite(3), PlacementShape.ADJACENT_PAIRS_SHARED_CENTER)


def test_shape_coloring():
    c = shape_coloring(HostGraph.complete(4), PlacementShape.TRIANGLE)
    assert c.colors == (1, 1, 2, 1, 3, 4)
    with pytest.raises(ValidationError):
        shape_coloring(HostGraph.bipartite(4), PlacementShape.TRIANGLE)
    with pytest.raises(ValidationError):
        shape_coloring(HostGraph.complete(5), PlacementShape.THREE_MATCHING)


DAMAGE_CASES = (
    [(HostKind.COMPLETE, target, t) for target in RainbowTarget if target is not RainbowTarget.K13 for t in (5, 6, 7)]
    + [(HostKind.COMPLETE, RainbowTarget.P4, 4)]
    + [(HostKind.COMPLETE_BIPARTITE, target, t) for target in (RainbowTarget.P4, RainbowTarget.P5) for t in (3, 4, 5)]
)


@pytest.mark.parametrize("setting, target, t", DAMAGE_CASES)
def test_damage_formula_counts_spoiled_copies(setting, target, t):
    host = HostGraph(setting, t)
    p = target.pattern()
    for shape in TRIPLE_SHAPES:
        if not shape_fits(host, shape):
            continue
        report = count_colored(host, shape_coloring(host, shape), p)
        assert damage_formula(setting, target, shape, t) == report.total - report.rainbow, shape


def test_damage_formula_unsupported():
    with pytest.raises(UnsupportedCaseError):
        damage_formula(HostKind.COMPLETE, RainbowTarget.P4, PlacementShape.DISJOINT_PAIRS, 6)
    with pytest.raises(UnsupportedCaseError):
        damage_formula(HostKind.COMPLETE, RainbowTarget.K13, PlacementShape.STAR, 6)
    with pytest.raises(UnsupportedCaseError):
        damage_formula(HostKind.COMPLETE_BIPARTITE, RainbowTarget.P4PLUS, PlacementShape.STAR, 4)
    with pytest.raises(UnsupportedCaseError):
        damage_formula(HostKind.COMPLETE_BIPARTITE, RainbowTarget.P4, PlacementShape.TRIANGLE, 4)
