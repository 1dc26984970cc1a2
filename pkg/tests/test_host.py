"""
Tests for the host graphs: edge indexing, adjacency and automorphisms
"""

import itertools

import networkx as nx
import pytest

from src.errors import GuardExceededError, ValidationError
from src.host import HostGraph, HostKind, Side, edge_index, edges_adjacent, host_automorphisms


@pytest.mark.parametrize(
    "host, u, v, expected",
    [
        (HostGraph.complete(4), 0, 1, 0),
        (HostGraph.complete(4), 0, 3, 2),
        (HostGraph.complete(4), 2, 3, 5),
        (HostGraph.complete(4), 3, 2, 5),
        (HostGraph.bipartite(3), (Side.U, 0), (Side.V, 0), 0),
        (HostGraph.bipartite(3), (Side.U, 2), (Side.V, 1), 7),
        (HostGraph.bipartite(3), (Side.V, 1), (Side.U, 2), 7),
    ],
)
def test_edge_index(host, u, v, expected):
    assert edge_index(host, u, v) == expected


@pytest.mark.parametrize("host", [HostGraph.complete(n) for n in range(2, 8)] + [HostGraph.bipartite(n) for n in range(1, 5)])
def test_edge_index_is_a_bijection(host):
    seen = set()
    for e in range(host.m):
        u, v = host.endpoints(e)
        assert host.edge_index(u, v) == e
        seen.add(e)
    assert seen == set(range(host.m))


def test_edge_index_rejects_bad_pairs():
    with pytest.raises(ValidationError):
        HostGraph.complete(4).edge_index(1, 1)
    with pytest.raises(ValidationError):
        HostGraph.complete(4).edge_index(0, 4)
    with pytest.raises(ValidationError):
        HostGraph.bipartite(3).edge_index((Side.U, 0), (Side.U, 1))
    with pytest.raises(ValidationError):
        HostGraph.bipartite(3).edge_index((Side.U, 0), (Side.V, 3))
    with pytest.raises(ValidationError):
        HostGraph.bipartite(3).edge_index(0, 1)


def test_edges_adjacent():
    k4 = HostGraph.complete(4)
    assert edges_adjacent(k4, 0, 1)
    assert not edges_adjacent(k4, 0, 5)

    k33 = HostGraph.bipartite(3)
    assert edges_adjacent(k33, 0, 1)  # share u0
    assert edges_adjacent(k33, 0, 3)  # share v0
    assert not edges_adjacent(k33, 0, 4)

    with pytest.raises(ValidationError):
        edges_adjacent(k4, 2, 2)
    with pytest.raises(ValidationError):
        edges_adjacent(k4, 0, 6)


@pytest.mark.parametrize("host", [HostGraph.complete(5), HostGraph.bipartite(3)])
def test_edges_adjacent_matches_line_graph(host):
    line = nx.line_graph(host.to_networkx())
    node = {frozenset(edge): edge for edge in line.nodes}
    for e1, e2 in itertools.combinations(range(host.m), 2):
        a, b = node[frozenset(host.edges[e1])], node[frozenset(host.edges[e2])]
        assert host.edges_adjacent(e1, e2) == line.has_edge(a, b)


@pytest.mark.parametrize(
    "host, order",
    [
        (HostGraph.complete(4), 24),
        (HostGraph.bipartite(2), 8),
        (HostGraph.bipartite(3), 72),
    ],
)
def test_automorphism_group_order(host, order):
    automorphisms = host_automorphisms(host)
    assert len(automorphisms) == order == host.automorphism_order
    assert len(set(automorphisms)) == order
    assert automorphisms[0] == tuple(range(host.vertex_count))


def test_automorphisms_preserve_edges():
    host = HostGraph.bipartite(2)
    edges = {frozenset(edge) for edge in host.edges}
    for perm in host.host_automorphisms():
        assert {frozenset((perm[a], perm[b])) for a, b in host.edges} == edges


def test_edge_permutations_are_permutations():
    host = HostGraph.complete(4)
    for edge_perm in host.edge_permutations:
        assert sorted(edge_perm) == list(range(host.m))
    assert host.edge_permutations[0] == tuple(range(host.m))


def test_materialize_guard():
    with pytest.raises(GuardExceededError) as info:
        HostGraph.complete(9).host_automorphisms()
    assert info.value.guard == "automorphisms.complete_n"
    assert info.value.size == 9
    with pytest.raises(GuardExceededError):
        HostGraph.bipartite(6).host_automorphisms()

    # iteration stays available above the guard
    first = next(HostGraph.complete(9).iter_automorphisms())
    assert first == tuple(range(9))


@pytest.mark.parametrize(
    "text, kind, n",
    [
        ("Kn:5", HostKind.COMPLETE, 5),
        ("Knn:3", HostKind.COMPLETE_BIPARTITE, 3),
        (" Kn : 7 ", HostKind.COMPLETE, 7),
    ],
)
def test_from_descriptor(text, kind, n):
    host = HostGraph.from_descriptor(text)
    assert (host.kind, host.n) == (kind, n)
    assert HostGraph.from_descriptor(host.descriptor) == host


@pytest.mark.parametrize("text", ["K5", "Kn:", "Kn:1", "Knn:0", "Km:4", ""])
def test_from_descriptor_rejects(text):
    with pytest.raises(ValidationError):
        HostGraph.from_descriptor(text)


def test_sizes():
    assert HostGraph.complete(6).m == 15
    assert HostGraph.bipartite(4).m == 16
    assert HostGraph.bipartite(4).vertex_count == 8
    assert str(HostGraph.bipartite(4)) == "K_{4,4}"
    assert str(HostGraph.complete(6)) == "K_6"
