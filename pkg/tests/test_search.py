"""
Tests for the exhaustive searches: GM minimisation, bounded gr verification and the
guaranteed-rainbow thresholds
"""

import pytest

from src.colorings import all_profiles
from src.errors import ValidationError
from src.formulas import FormulaQuery, gm_formula
from src.host import HostGraph, HostKind
from src.patterns import RainbowTarget, builtin_pattern, star
from src.search import Verdict, apply_pool, gm_search, gr_search, rainbow_threshold_check

COMPLETE = HostKind.COMPLETE
BIPARTITE = HostKind.COMPLETE_BIPARTITE


def _square(a, b):
    return a * b


def test_apply_pool_keeps_order():
    arguments = [(i, i) for i in range(6)]
    assert apply_pool(_square, arguments) == [0, 1, 4, 9, 16, 25]
    assert apply_pool(_square, arguments, threads=2) == [0, 1, 4, 9, 16, 25]


def test_gm_star_with_one_repeated_pair():
    report = gm_search(builtin_pattern("K13"), star(4), 9, COMPLETE, 5)
    assert report.value == 18
    assert (report.rainbow, report.mono) == (18, 0)
    assert report.witness.colors == (1, 1, 2, 3, 4, 5, 6, 7, 8, 9)
    assert report.classes_examined == 2


@pytest.mark.parametrize(
    "setting, target, t, h",
    [
        (COMPLETE, RainbowTarget.K13, 4, "P3"),
        (COMPLETE, RainbowTarget.P4, 4, "P3"),
        (COMPLETE, RainbowTarget.P5, 5, "P3"),
        (BIPARTITE, RainbowTarget.P4, 2, "P3"),
        (BIPARTITE, RainbowTarget.K13, 3, "P3"),
        (BIPARTITE, RainbowTarget.K13, 4, "P3"),
    ],
)
def test_gm_with_every_color_distinct_counts_all_copies(setting, target, t, h):
    host = HostGraph(setting, t)
    report = gm_search(target.pattern(), builtin_pattern(h), host.m, setting, t)
    formula = gm_formula(FormulaQuery.from_t(setting, target, t, 0, builtin_pattern(h)), strict=False)
    assert report.value == formula.value
    assert report.classes_examined == 1


@pytest.mark.parametrize(
    "setting, target, t, offset, h, expected",
    [
        (COMPLETE, RainbowTarget.K13, 4, -1, "P4", 3),
        (COMPLETE, RainbowTarget.K13, 4, -2, "P5", 1),
        (COMPLETE, RainbowTarget.P4, 4, -1, "P4", 8),
        (BIPARTITE, RainbowTarget.K13, 3, -1, "K1_3", 5),
        (BIPARTITE, RainbowTarget.P4, 3, -1, "K1_3", 32),
    ],
)
def test_gm_search_matches_closed_form(setting, target, t, offset, h, expected):
    host = HostGraph(setting, t)
    report = gm_search(target.pattern(), builtin_pattern(h), host.m + offset, setting, t)
    assert report.value == expected
    formula = gm_formula(FormulaQuery.from_t(setting, target, t, offset, builtin_pattern(h)), strict=False)
    assert formula.value == expected


@pytest.mark.parametrize(
    "setting, n, k, g, h",
    [
        (COMPLETE, 5, 8, "P5", "P3"),
        (BIPARTITE, 3, 7, "P4", "P3"),
    ],
)
def test_gm_is_the_least_single_profile_value(setting, n, k, g, h):
    g, h = builtin_pattern(g), builtin_pattern(h)
    full = gm_search(g, h, k, setting, n)
    host = HostGraph(setting, n)
    by_profile = [gm_search(g, h, k, setting, n, profile=profile) for profile in all_profiles(host.m, k)]
    assert len(by_profile) == 2
    assert full.value == min(report.value for report in by_profile)
    assert full.classes_examined == sum(report.classes_examined for report in by_profile)


def test_gm_single_profile_values():
    g, h = builtin_pattern("P5"), builtin_pattern("P3")
    values = [gm_search(g, h, 8, COMPLETE, 5, profile=profile).value for profile in all_profiles(10, 8)]
    assert sorted(values) == [36, 39]


def test_gm_search_per_class_records():
    report = gm_search(builtin_pattern("K13"), builtin_pattern("P4"), 5, COMPLETE, 4, keep_classes=True)
    assert report.value == 3
    assert [record.orbit_size for record in report.per_class] == [12 * 120, 3 * 120]
    assert [record.total for record in report.per_class] == [3, 4]
    assert report.to_dict()["per_class"][0]["colors"] == [1, 1, 2, 3, 4, 5]


def test_gm_search_rejects_too_many_colors():
    with pytest.raises(ValidationError):
        gm_search(builtin_pattern("K13"), builtin_pattern("P3"), 7, COMPLETE, 4)


def test_gm_search_is_independent_of_threads():
    args = (builtin_pattern("K13"), builtin_pattern("P4"), 5, COMPLETE, 5)
    assert gm_search(*args, threads=2) == gm_search(*args, threads=1)


def test_gr_search_p4_against_p3():
    report = gr_search(builtin_pattern("P4"), builtin_pattern("P3"), 3, COMPLETE, (2, 5))
    assert [row.verdict for row in report.rows] == [Verdict.INFEASIBLE, Verdict.BAD, Verdict.BAD, Verdict.GOOD]
    assert report.least_good == 5
    assert report.rows[2].witness is not None
    assert report.to_dict()["label"] == "bounded verification"


def test_gr_search_star():
    report = gr_search(builtin_pattern("K13"), star(3), 4, COMPLETE, (4, 5))
    assert [row.verdict for row in report.rows] == [Verdict.GOOD, Verdict.GOOD]
    assert report.least_good == 4


def test_gr_search_bipartite():
    report = gr_search(builtin_pattern("P4"), builtin_pattern("K13"), 3, BIPARTITE, (2, 3))
    assert report.least_good == 2
    assert report.to_dict()["setting"] == "complete_bipartite"


def test_gr_search_threads_agree():
    args = (builtin_pattern("P4"), builtin_pattern("P3"), 3, COMPLETE, (3, 5))
    assert gr_search(*args, threads=3) == gr_search(*args, threads=1)


def test_gr_search_rejects_empty_range():
    with pytest.raises(ValidationError):
        gr_search(builtin_pattern("P4"), builtin_pattern("P3"), 3, COMPLETE, (5, 4))


@pytest.mark.slow
def test_threshold_star_on_k5():
    report = rainbow_threshold_check(COMPLETE, 5, builtin_pattern("K13"))
    assert report.threshold == 4
    assert [row.k for row in report.rows] == list(range(2, 11))
    assert report.sharpness.colors == (1, 1, 1, 1, 2, 1, 1, 1, 1, 3)


@pytest.mark.slow
def test_threshold_path_on_k5():
    report = rainbow_threshold_check(COMPLETE, 5, builtin_pattern("P5"))
    assert report.threshold == 6
    assert report.sharpness is not None
    assert report.sharpness.k == 5


@pytest.mark.parametrize("name, expected", [("P4", 4), ("P5", 5), ("K13", 5)])
def test_threshold_on_k33(name, expected):
    report = rainbow_threshold_check(BIPARTITE, 3, builtin_pattern(name))
    assert report.threshold == expected
    assert report.sharpness.k == expected - 1
    assert not report.rows[expected - 3].all_rainbow
