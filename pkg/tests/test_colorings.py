"""
Tests for exact colorings: validation, canonical forms and class enumeration
"""

import math

import pytest
from hypothesis import given, settings, strategies as st

from src.colorings import (
    ColorClassProfile,
    EdgeColoring,
    all_profiles,
    apply_edge_permutation,
    canonicalize,
    enumerate_exact_colorings,
    first_occurrence,
    from_classes,
    is_matching_triple,
    permute_colors,
    rainbow_coloring,
    validate,
)
from src.errors import GuardExceededError, ValidationError
from src.host import HostGraph

K4 = HostGraph.complete(4)

STIRLING_6 = {1: 1, 2: 31, 3: 90, 4: 65, 5: 15, 6: 1}


@st.composite
def exact_colorings(draw, host: HostGraph = K4, max_colors: int = 4):
    raw = draw(st.lists(st.integers(1, max_colors), min_size=host.m, max_size=host.m))
    colors = first_occurrence(raw)
    return EdgeColoring(host, max(colors), colors)


def test_validate_reports_every_violation():
    k22 = HostGraph.bipartite(2)
    assert validate(EdgeColoring(k22, 2, (1, 2, 1))) == ["length 3 != 4 edges of K_{2,2}"]
    assert validate(EdgeColoring(k22, 3, (1, 1, 2, 2))) == ["color 3 unused"]
    assert validate(EdgeColoring(k22, 2, (1, 2, 3, 2))) == ["labels out of range 1..2: [3]"]
    assert validate(EdgeColoring(k22, 5, (1, 2, 3, 4))) == ["k = 5 exceeds the 4 edges of K_{2,2}", "color 5 unused"]
    assert validate(rainbow_coloring(K4)) == []


def test_coloring_json_roundtrip():
    c = EdgeColoring(K4, 3, (1, 2, 3, 3, 2, 1))
    assert EdgeColoring.from_dict(c.to_dict()) == c
    with pytest.raises(ValidationError):
        EdgeColoring.from_dict({"k": 3, "colors": [1, 2, 3]})
    with pytest.raises(ValidationError):
        EdgeColoring.from_dict({"host": "K4", "colors": [1]})


def test_classes_and_profile():
    c = EdgeColoring(K4, 3, (1, 2, 3, 3, 2, 1))
    assert c.classes() == {1: (0, 5), 2: (1, 4), 3: (2, 3)}
    assert c.profile == ColorClassProfile((2, 2, 2))


def test_profile_text():
    assert ColorClassProfile.from_text("2", 6, 5).sizes == (2, 1, 1, 1, 1)
    assert ColorClassProfile.from_text("{3,1,1}", 5, 3).sizes == (3, 1, 1)
    assert str(ColorClassProfile((1, 3, 1))) == "{3,1,1}"
    with pytest.raises(ValidationError):
        ColorClassProfile.from_text("2;2", 6, 4)
    with pytest.raises(ValidationError):
        ColorClassProfile.from_text("3,3", 6, 5)
    with pytest.raises(ValidationError):
        ColorClassProfile((2, 0))


def test_all_profiles():
    assert [p.sizes for p in all_profiles(6, 3)] == [(4, 1, 1), (3, 2, 1), (2, 2, 2)]
    assert sum(p.partition_count for p in all_profiles(6, 3)) == STIRLING_6[3]
    assert ColorClassProfile((2, 1, 1, 1, 1)).partition_count == 15
    with pytest.raises(ValidationError):
        all_profiles(3, 4)


def test_enumerate_single_class_when_k_equals_m():
    classes = list(enumerate_exact_colorings(K4, 6))
    assert len(classes) == 1
    assert classes[0].orbit_size == math.factorial(6)
    assert classes[0].coloring.colors == (1, 2, 3, 4, 5, 6)


def test_enumerate_one_repeated_pair():
    profile = ColorClassProfile((2, 1, 1, 1, 1))
    classes = list(enumerate_exact_colorings(K4, 5, profile))
    by_colors = {item.coloring.colors: item.orbit_size for item in classes}
    # edges 0, 1 share vertex 0; edges 2, 3 are (0,3) and (1,2)
    assert by_colors == {(1, 1, 2, 3, 4, 5): 12 * 120, (1, 2, 3, 3, 4, 5): 3 * 120}


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_orbit_sizes_sum_to_surjections(k):
    total = sum(item.orbit_size for item in enumerate_exact_colorings(K4, k))
    assert total == math.factorial(k) * STIRLING_6[k]


@pytest.mark.parametrize("k", [2, 3, 4])
def test_orbit_sizes_on_bipartite_host(k):
    host = HostGraph.bipartite(2)
    stirling_4 = {2: 7, 3: 6, 4: 1}
    total = sum(item.orbit_size for item in enumerate_exact_colorings(host, k))
    assert total == math.factorial(k) * stirling_4[k]


def test_representatives_are_valid_and_canonical():
    for item in enumerate_exact_colorings(K4, 3):
        assert validate(item.coloring) == []
        assert canonicalize(item.coloring) == item.coloring


def test_shards_partition_the_classes():
    full = [item.coloring.colors for item in enumerate_exact_colorings(K4, 3)]
    sharded = [
        item.coloring.colors for index in range(3) for item in enumerate_exact_colorings(K4, 3, shard=(index, 3))
    ]
    assert sorted(sharded) == sorted(full)
    assert len(sharded) == len(full)


def test_enumeration_errors():
    with pytest.raises(ValidationError):
        enumerate_exact_colorings(K4, 7)
    with pytest.raises(ValidationError):
        enumerate_exact_colorings(K4, 3, ColorClassProfile((2, 2, 1)))
    with pytest.raises(ValidationError):
        enumerate_exact_colorings(K4, 3, shard=(3, 3))


def test_enumeration_guards():
    with pytest.raises(GuardExceededError) as info:
        enumerate_exact_colorings(HostGraph.complete(8), 20)
    assert info.value.guard == "enumeration.complete_n"

    with pytest.raises(GuardExceededError) as info:
        enumerate_exact_colorings(HostGraph.complete(7), 3)
    assert info.value.guard == "enumeration.partitions"

    # one repeated pair on K_7 stays within the extended guard
    profile = ColorClassProfile((2,) + (1,) * 19)
    assert sum(1 for _ in enumerate_exact_colorings(HostGraph.complete(7), 20, profile)) == 2


def test_is_matching_triple():
    assert is_matching_triple(EdgeColoring(K4, 3, (1, 2, 3, 3, 2, 1)))
    assert not is_matching_triple(EdgeColoring(K4, 3, (1, 1, 2, 2, 3, 3)))
    assert not is_matching_triple(EdgeColoring(HostGraph.complete(5), 3, (1, 2, 3, 3, 2, 1, 1, 1, 1, 1)))


def test_from_classes():
    c = from_classes(K4, [[0, 5]])
    assert c.colors == (1, 2, 3, 4, 5, 1)
    assert c.k == 5
    with pytest.raises(ValidationError):
        from_classes(K4, [[0, 1], [1, 2]])
    with pytest.raises(ValidationError):
        from_classes(K4, [[0, 6]])


@settings(max_examples=100, deadline=None)
@given(c=exact_colorings(), perm_index=st.integers(0, 23), shift=st.integers(0, 3))
def test_canonicalize_is_invariant(c, perm_index, shift):
    edge_perm = K4.edge_permutations[perm_index]
    relabel = {color: (color - 1 + shift) % c.k + 1 for color in range(1, c.k + 1)}
    moved = permute_colors(apply_edge_permutation(c, edge_perm), relabel)
    assert canonicalize(moved) == canonicalize(c)


@settings(max_examples=100, deadline=None)
@given(c=exact_colorings())
def test_canonicalize_is_idempotent_and_enumerated(c):
    canonical = canonicalize(c)
    assert canonicalize(canonical) == canonical
    assert canonical.colors in {item.coloring.colors for item in enumerate_exact_colorings(K4, c.k)}
