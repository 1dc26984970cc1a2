"""
Small target graphs (rainbow G and monochromatic H), their automorphism orders,
their copies inside a host and the subgraph bounds used by the hypotheses.

File: patterns.py
Author: @cvlt
Date: 2024-11-05
Copyright: 2024, 2BiTS Srl., All rights reserved.

No part of this document must be reproduced in any form - including copied,
transcribed, printed, or by any electronic means - without specific written
permission from 2BiTS Srl.

A copy of a pattern is a distinct set of host edge ids that is the image of some
embedding. Embeddings that differ by a pattern automorphism give the same copy and
are reported once, so len(enumerate_copies(K_n, p)) = |V(p)|! C(n, |V(p)|) / |Aut(p)|.
"""

# ==============================================================================
# PACKAGES
# ==============================================================================

# ------------------------------------------------------------------------------
# STANDARD PACKAGES
# ------------------------------------------------------------------------------
import itertools
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterator, Optional, Sequence

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------
import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------
from src.errors import (
    GuardExceededError,
    PatternHostMismatchError,
    UnboundedHypothesisError,
    UnsupportedCaseError,
    ValidationError,
)
from src.host import HostGraph, HostKind

# ==============================================================================
# CONSTANTS
# ==============================================================================
MAX_PATTERN_VERTICES = 8  # counting targets and aut_order
MAX_CONTAINED_VERTICES = 12  # h in contains_subgraph
MAX_BOUND_VERTICES = 64  # K_{(k-1)x2} at k = C(7,2) already needs 40 vertices

PATH_NAME = re.compile(r"^P(\d+)$", re.IGNORECASE)
STAR_NAME = re.compile(r"^K1_(\d+)$", re.IGNORECASE)
MULTIPARTITE_NAME = re.compile(r"^Kmulti_(\d+)x(\d+)$", re.IGNORECASE)
MATCHING_NAME = re.compile(r"^M(\d+)$", re.IGNORECASE)


# ==============================================================================
# Enumeratives
# ==============================================================================
class RainbowTarget(Enum):
    """
    The rainbow graphs G the multiplicity theorems are stated for.
    """

    P4 = "P4"
    P5 = "P5"
    K13 = "K13"
    P4PLUS = "P4plus"

    @classmethod
    def parse(cls, text: str) -> "RainbowTarget":
        for target in cls:
            if target.value.lower() == text.strip().lower():
                return target
        raise ValidationError(f"unsupported rainbow target '{text}' (expected P4, P5, K13 or P4plus)")

    def pattern(self) -> "PatternGraph":
        return builtin_pattern(self.value)


# ==============================================================================
# CLASSES
# ==============================================================================
@dataclass(frozen=True)
class PatternGraph:
    """
    A small simple graph without isolated vertices.

    Attributes:
        vertex_count (int): Number of vertices, labelled 0..vertex_count-1.
        edges (tuple[tuple[int, int], ...]): Edges as (a, b) with a < b, sorted.
        bipartition (Optional[tuple[int, ...]]): Side (0 or 1) of every vertex, if tagged.
        name (Optional[str]): Builtin identifier, if any.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    bipartition: Optional[tuple[int, ...]] = None
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.vertex_count, int) or self.vertex_count < 2:
            raise ValidationError(f"a pattern needs at least 2 vertices, got {self.vertex_count!r}")
        if self.vertex_count > MAX_BOUND_VERTICES:
            raise GuardExceededError("pattern.vertices", self.vertex_count, MAX_BOUND_VERTICES)

        normalized = []
        for edge in self.edges:
            if len(edge) != 2:
                raise ValidationError(f"edge {edge!r} must have exactly two endpoints")
            a, b = int(edge[0]), int(edge[1])
            if a == b:
                raise ValidationError(f"loop at vertex {a} is not allowed")
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValidationError(f"edge ({a}, {b}) has an endpoint outside 0..{self.vertex_count - 1}")
            normalized.append((min(a, b), max(a, b)))
        if len(set(normalized)) != len(normalized):
            raise ValidationError("duplicate edges are not allowed")
        normalized.sort()
        object.__setattr__(self, "edges", tuple(normalized))

        covered = {v for edge in normalized for v in edge}
        if len(covered) != self.vertex_count:
            isolated = sorted(set(range(self.vertex_count)) - covered)
            raise ValidationError(f"isolated vertices are not allowed: {isolated}")

        if self.bipartition is not None:
            sides = tuple(int(side) for side in self.bipartition)
            if len(sides) != self.vertex_count or any(side not in (0, 1) for side in sides):
                raise ValidationError("bipartition must give side 0 or 1 for every vertex")
            if any(sides[a] == sides[b] for a, b in normalized):
                raise ValidationError("every edge must cross the bipartition")
            object.__setattr__(self, "bipartition", sides)

    def __str__(self) -> str:
        return self.name or f"pattern({self.vertex_count}v, {self.edge_count}e)"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbours: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for a, b in self.edges:
            neighbours[a].add(b)
            neighbours[b].add(a)
        return tuple(frozenset(n) for n in neighbours)

    @cached_property
    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    @property
    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.graph)

    @property
    def is_complete(self) -> bool:
        return self.edge_count == self.vertex_count * (self.vertex_count - 1) // 2

    def is_isomorphic(self, other: "PatternGraph") -> bool:
        return self.vertex_count == other.vertex_count and nx.is_isomorphic(self.graph, other.graph)

    def to_dict(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": [list(edge) for edge in self.edges],
            "bipartition": list(self.bipartition) if self.bipartition is not None else None,
            "name": self.name,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PatternGraph":
        """Build a pattern from its JSON form.

        Raises:
            ValidationError: Missing keys or an invalid graph.
        """
        try:
            vertices = data["vertices"]
            edges = data["edges"]
        except (KeyError, TypeError) as e:
            raise ValidationError(f"pattern JSON is missing field {e}") from e
        return cls(
            vertex_count=vertices,
            edges=tuple(tuple(edge) for edge in edges),
            bipartition=data.get("bipartition"),
            name=data.get("name"),
        )


# ==============================================================================
# FUNCTIONS
# ==============================================================================
def path(vertices: int, name: Optional[str] = None) -> PatternGraph:
    return PatternGraph(vertices, tuple((i, i + 1) for i in range(vertices - 1)), name=name or f"P{vertices}")


def star(leaves: int, name: Optional[str] = None) -> PatternGraph:
    return PatternGraph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)), name=name or f"K1_{leaves}")


def multipartite(parts: int, size: int, name: Optional[str] = None) -> PatternGraph:
    """The balanced complete multipartite graph K_{parts x size}."""
    if parts < 2 or size < 1:
        raise ValidationError(f"K_(parts x size) needs parts >= 2 and size >= 1, got {parts}x{size}")
    vertex_count = parts * size
    if vertex_count > MAX_BOUND_VERTICES:
        raise GuardExceededError("pattern.vertices", vertex_count, MAX_BOUND_VERTICES)
    edges = tuple((a, b) for a, b in itertools.combinations(range(vertex_count), 2) if a // size != b // size)
    return PatternGraph(vertex_count, edges, name=name or f"Kmulti_{parts}x{size}")


def matching(count: int, name: Optional[str] = None) -> PatternGraph:
    return PatternGraph(2 * count, tuple((2 * i, 2 * i + 1) for i in range(count)), name=name or f"M{count}")


def builtin_pattern(name: str) -> PatternGraph:
    """Expand a builtin pattern name.

    Accepted names: P2..P8, K13, P4plus, K3, S3plus, K1_<k>, Kmulti_<parts>x<size>, M<j>.

    Args:
        name (str): The builtin identifier (case insensitive).

    Returns:
        PatternGraph: The expanded pattern.

    Raises:
        ValidationError: If the name is unknown or its parameters are out of range.
    """
    key = name.strip()
    match key.lower():
        case "k13":
            return star(3, name="K13")
        case "p4plus":
            return PatternGraph(5, ((0, 1), (1, 2), (2, 3), (1, 4)), name="P4plus")
        case "k3":
            return PatternGraph(3, ((0, 1), (0, 2), (1, 2)), name="K3")
        case "s3plus":
            return PatternGraph(4, ((0, 1), (0, 2), (1, 2), (0, 3)), name="S3plus")

    if (found := PATH_NAME.match(key)) is not None:
        vertices = int(found.group(1))
        if not 2 <= vertices <= MAX_PATTERN_VERTICES:
            raise ValidationError(f"path P{vertices} is outside P2..P{MAX_PATTERN_VERTICES}")
        return path(vertices)
    if (found := STAR_NAME.match(key)) is not None:
        leaves = int(found.group(1))
        if leaves < 1:
            raise ValidationError("a star needs at least one leaf")
        return star(leaves)
    if (found := MULTIPARTITE_NAME.match(key)) is not None:
        return multipartite(int(found.group(1)), int(found.group(2)))
    if (found := MATCHING_NAME.match(key)) is not None:
        count = int(found.group(1))
        if count < 1:
            raise ValidationError("a matching needs at least one edge")
        return matching(count)

    raise ValidationError(f"unknown builtin pattern '{name}'")


def _check_counting_size(p: PatternGraph) -> None:
    if p.vertex_count > MAX_PATTERN_VERTICES:
        raise GuardExceededError("pattern.counting_vertices", p.vertex_count, MAX_PATTERN_VERTICES)


@lru_cache(maxsize=256)
def _aut_order(vertex_count: int, edges: tuple[tuple[int, int], ...]) -> int:
    edge_set = set(edges)
    degrees = [0] * vertex_count
    for a, b in edges:
        degrees[a] += 1
        degrees[b] += 1

    order = 0
    for perm in itertools.permutations(range(vertex_count)):
        if any(degrees[perm[v]] != degrees[v] for v in range(vertex_count)):
            continue
        if all((min(perm[a], perm[b]), max(perm[a], perm[b])) in edge_set for a, b in edges):
            order += 1
    return order


def aut_order(p: PatternGraph) -> int:
    """Order of the automorphism group of p, by brute force over vertex permutations.

    Raises:
        GuardExceededError: If p has more than 8 vertices.
    """
    _check_counting_size(p)
    return _aut_order(p.vertex_count, p.edges)


def _search_order(p: PatternGraph) -> tuple[int, ...]:
    """Breadth-first vertex order, so every vertex after a component root has a placed neighbour."""
    order: list[int] = []
    seen: set[int] = set()
    for root in range(p.vertex_count):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            vertex = queue.pop(0)
            order.append(vertex)
            for neighbour in sorted(p.adjacency[vertex]):
                if neighbour not in seen:
                    seen.add(neighbour)
                    queue.append(neighbour)
    return tuple(order)


def _embeddings(host: HostGraph, p: PatternGraph, lowest: int) -> Iterator[tuple[int, ...]]:
    order = _search_order(p)
    placed_before = [tuple(w for w in p.adjacency[v] if w in order[:i]) for i, v in enumerate(order)]
    image = [-1] * p.vertex_count
    used = [False] * host.vertex_count

    if host.is_bipartite and p.bipartition is not None:
        side_choices = [tuple(side ^ swap for side in p.bipartition) for swap in (0, 1)]
    else:
        side_choices = [None]

    def extend(i: int, sides: Optional[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
        if i == len(order):
            yield tuple(image)
            return
        vertex = order[i]
        for candidate in range(lowest, host.vertex_count):
            if used[candidate]:
                continue
            if sides is not None and host.side_of(candidate).value != sides[vertex]:
                continue
            if all(host.joined(image[w], candidate) for w in placed_before[i]):
                image[vertex] = candidate
                used[candidate] = True
                yield from extend(i + 1, sides)
                used[candidate] = False
                image[vertex] = -1

    for sides in side_choices:
        yield from extend(0, sides)


@lru_cache(maxsize=128)
def _copies(host: HostGraph, p: PatternGraph, lowest: int) -> tuple[tuple[int, ...], ...]:
    found: set[tuple[int, ...]] = set()
    for image in _embeddings(host, p, lowest):
        found.add(tuple(sorted(host.edge_id(image[a], image[b]) for a, b in p.edges)))
    logging.debug(f"{len(found)} copies of {p} in {host}")
    return tuple(sorted(found))


def enumerate_copies(host: HostGraph, p: PatternGraph, first_vertex: Optional[int] = None) -> list[tuple[int, ...]]:
    """Every distinct copy of p in the host, as sorted tuples of edge ids.

    Args:
        host (HostGraph): The host graph.
        p (PatternGraph): The pattern, at most 8 vertices.
        first_vertex (Optional[int]): Work-splitting key. When given, only the copies
            whose smallest covered (flat) host vertex is first_vertex are returned, so the
            shards 0..vertex_count-1 partition the full list.

    Returns:
        list[tuple[int, ...]]: The copies in lexicographic order.

    Raises:
        PatternHostMismatchError: If the host is bipartite and p is not.
        GuardExceededError: If p has more than 8 vertices.
    """
    _check_counting_size(p)
    if host.is_bipartite and not p.is_bipartite:
        raise PatternHostMismatchError(f"{p} is not bipartite and cannot live in {host}")
    if p.vertex_count > host.vertex_count:
        return []

    if first_vertex is None:
        return list(_copies(host, p, 0))

    if not 0 <= first_vertex < host.vertex_count:
        raise ValidationError(f"first_vertex {first_vertex} out of range 0..{host.vertex_count - 1}")
    return [
        copy
        for copy in _copies(host, p, first_vertex)
        if min(v for e in copy for v in host.edges[e]) == first_vertex
    ]


def contains_subgraph(bound: PatternGraph, h: PatternGraph) -> bool:
    """True iff h is isomorphic to a (not necessarily induced) subgraph of bound.

    Raises:
        GuardExceededError: If h has more than 12 vertices.
    """
    if h.vertex_count > MAX_CONTAINED_VERTICES:
        raise GuardExceededError("contains_subgraph.h_vertices", h.vertex_count, MAX_CONTAINED_VERTICES)
    if h.vertex_count > bound.vertex_count or h.edge_count > bound.edge_count:
        return False
    return GraphMatcher(bound.graph, h.graph).subgraph_is_monomorphic()


def bound_graph(setting: HostKind, target: RainbowTarget, colors: int) -> PatternGraph:
    """The graph H must embed in for the gr / GM theorem of (setting, target) at the given color count.

    Complete host, K13 or P4plus: K_{(c-1)x2}. Bipartite host, P4: K_{1,c}. Bipartite
    host, P5 or K13: K_{1,ceil((c-1)/2)}. For GM at offset j the caller passes c = k + j.

    Raises:
        UnboundedHypothesisError: Complete host with P4 or P5 (no subgraph bound).
        UnsupportedCaseError: P4plus on a bipartite host.
        ValidationError: If colors is too small to build the bound.
    """
    match (setting, target):
        case (HostKind.COMPLETE, RainbowTarget.K13 | RainbowTarget.P4PLUS):
            if colors < 3:
                raise ValidationError(f"K_((c-1)x2) needs c >= 3, got {colors}")
            return multipartite(colors - 1, 2)
        case (HostKind.COMPLETE, RainbowTarget.P4 | RainbowTarget.P5):
            raise UnboundedHypothesisError(f"the complete-host {target.value} theorem puts no subgraph bound on H")
        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P4):
            if colors < 1:
                raise ValidationError(f"K_(1,c) needs c >= 1, got {colors}")
            return star(colors)
        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P5 | RainbowTarget.K13):
            leaves = -(-(colors - 1) // 2)
            if leaves < 1:
                raise ValidationError(f"K_(1,ceil((c-1)/2)) needs c >= 2, got {colors}")
            return star(leaves)

    raise UnsupportedCaseError(f"no bound graph for {target.value} on a {setting.name.lower()} host")


def recognize(p: PatternGraph, candidates: Sequence[str]) -> Optional[str]:
    """The first builtin name in candidates that p is isomorphic to, if any."""
    for name in candidates:
        if p.is_isomorphic(builtin_pattern(name)):
            return name
    return None


# ==============================================================================
# MAIN
# ==============================================================================
if __name__ == "__main__":
    """
    This block is executed only if the file is run as a script.
    If this file is imported as a module in another script, this block will not
    be executed.
    """
