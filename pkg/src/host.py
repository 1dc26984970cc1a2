"""
Host graphs K_n and K_{n,n}: edge indexing, edge adjacency and automorphisms

File: host.py
Author: @cvlt
Date: 2024-11-04
Copyright: 2024, 2BiTS Srl., All rights reserved.

No part of this document must be reproduced in any form - including copied,
transcribed, printed, or by any electronic means - without specific written
permission from 2BiTS Srl.

Edge indexing is fixed because the coloring file format depends on it:
    - K_n: edge {i, j} with i < j is its rank in the lexicographic order of pairs.
    - K_{n,n}: edge (u_i, v_j) is i * n + j.

Internally vertices are "flat" integers: 0..n-1 for K_n; u_i -> i and v_j -> n + j for
K_{n,n}. The public VertexId of a bipartite host is the pair (Side, position).
"""

# ==============================================================================
# PACKAGES
# ==============================================================================

# ------------------------------------------------------------------------------
# STANDARD PACKAGES
# ------------------------------------------------------------------------------
import itertools
import logging
import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator, Union

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------
import networkx as nx

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------
from src.errors import GuardExceededError, ValidationError

# ==============================================================================
# CONSTANTS
# ==============================================================================
MAX_COMPLETE_MATERIALIZE = 8
MAX_BIPARTITE_MATERIALIZE = 5

DESCRIPTOR_PATTERN = re.compile(r"^\s*(Knn|Kn)\s*:\s*(\d+)\s*$")


# ==============================================================================
# Enumeratives
# ==============================================================================
class HostKind(Enum):
    """
    The two host families. The value is the descriptor prefix.
    """

    COMPLETE = "Kn"
    COMPLETE_BIPARTITE = "Knn"


class Side(Enum):
    """
    Side of a balanced complete bipartite host.
    """

    U = 0
    V = 1


VertexId = Union[int, tuple[Side, int]]


# ==============================================================================
# CLASSES
# ==============================================================================
@dataclass(frozen=True)
class HostGraph:
    """
    A complete graph K_n or a balanced complete bipartite graph K_{n,n}.

    Attributes:
        kind (HostKind): Host family.
        n (int): Total vertex count for K_n, vertex count per side for K_{n,n}.
    """

    kind: HostKind
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise ValidationError(f"host size must be an integer, got {self.n!r}")
        if self.kind is HostKind.COMPLETE and self.n < 2:
            raise ValidationError(f"K_n requires n >= 2, got {self.n}")
        if self.kind is HostKind.COMPLETE_BIPARTITE and self.n < 1:
            raise ValidationError(f"K_{{n,n}} requires n >= 1, got {self.n}")

    # --------------------------------------------------------------------------
    # Construction helpers
    # --------------------------------------------------------------------------
    @classmethod
    def complete(cls, n: int) -> "HostGraph":
        return cls(HostKind.COMPLETE, n)

    @classmethod
    def bipartite(cls, n: int) -> "HostGraph":
        return cls(HostKind.COMPLETE_BIPARTITE, n)

    @classmethod
    def from_descriptor(cls, text: str) -> "HostGraph":
        """Parse a host descriptor "Kn:<n>" or "Knn:<n>".

        Args:
            text (str): The descriptor.

        Returns:
            HostGraph: The described host.

        Raises:
            ValidationError: If the descriptor is malformed.
        """
        match = DESCRIPTOR_PATTERN.match(text or "")
        if match is None:
            raise ValidationError(f"malformed host descriptor '{text}' (expected Kn:<n> or Knn:<n>)")
        return cls(HostKind(match.group(1)), int(match.group(2)))

    @property
    def descriptor(self) -> str:
        return f"{self.kind.value}:{self.n}"

    def __str__(self) -> str:
        if self.is_bipartite:
            return f"K_{{{self.n},{self.n}}}"
        return f"K_{self.n}"

    # --------------------------------------------------------------------------
    # Sizes
    # --------------------------------------------------------------------------
    @property
    def is_bipartite(self) -> bool:
        return self.kind is HostKind.COMPLETE_BIPARTITE

    @property
    def vertex_count(self) -> int:
        return 2 * self.n if self.is_bipartite else self.n

    @property
    def m(self) -> int:
        if self.is_bipartite:
            return self.n * self.n
        return self.n * (self.n - 1) // 2

    # --------------------------------------------------------------------------
    # Vertices and edges
    # --------------------------------------------------------------------------
    def flat(self, vertex: VertexId) -> int:
        """Convert a public vertex id into the flat integer used internally.

        Raises:
            ValidationError: If the vertex does not belong to this host.
        """
        if self.is_bipartite:
            if not (isinstance(vertex, tuple) and len(vertex) == 2 and isinstance(vertex[0], Side)):
                raise ValidationError(f"bipartite vertex must be (Side, position), got {vertex!r}")
            side, position = vertex
            if not 0 <= position < self.n:
                raise ValidationError(f"vertex position {position} out of range 0..{self.n - 1}")
            return position if side is Side.U else self.n + position

        if not isinstance(vertex, int) or not 0 <= vertex < self.n:
            raise ValidationError(f"vertex {vertex!r} out of range 0..{self.n - 1}")
        return vertex

    def unflat(self, flat_vertex: int) -> VertexId:
        if self.is_bipartite:
            return (Side.U, flat_vertex) if flat_vertex < self.n else (Side.V, flat_vertex - self.n)
        return flat_vertex

    def side_of(self, flat_vertex: int) -> Side:
        return Side.U if flat_vertex < self.n else Side.V

    def joined(self, a: int, b: int) -> bool:
        """True iff flat vertices a and b are adjacent in the host."""
        if a == b:
            return False
        if self.is_bipartite:
            return (a < self.n) != (b < self.n)
        return True

    def edge_id(self, a: int, b: int) -> int:
        """Edge index of the edge between two flat vertices (no validation)."""
        if self.is_bipartite:
            if a > b:
                a, b = b, a
            return a * self.n + (b - self.n)
        if a > b:
            a, b = b, a
        return a * (2 * self.n - a - 1) // 2 + (b - a - 1)

    def edge_index(self, u: VertexId, v: VertexId) -> int:
        """Index of the edge between u and v.

        Args:
            u (VertexId): First endpoint.
            v (VertexId): Second endpoint.

        Returns:
            int: The edge index in 0..m-1.

        Raises:
            ValidationError: Same vertex, same side on a bipartite host, or out of range.
        """
        a, b = self.flat(u), self.flat(v)
        if a == b:
            raise ValidationError(f"an edge needs two distinct vertices, got {u!r} twice")
        if not self.joined(a, b):
            raise ValidationError(f"vertices {u!r} and {v!r} lie on the same side")
        return self.edge_id(a, b)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Flat endpoints of every edge, ordered by edge index."""
        if self.is_bipartite:
            return tuple((i, self.n + j) for i in range(self.n) for j in range(self.n))
        return tuple(itertools.combinations(range(self.n), 2))

    def _check_edge(self, e: int) -> None:
        if not isinstance(e, int) or not 0 <= e < self.m:
            raise ValidationError(f"edge index {e!r} out of range 0..{self.m - 1}")

    def endpoints(self, e: int) -> tuple[VertexId, VertexId]:
        """Inverse of edge_index."""
        self._check_edge(e)
        a, b = self.edges[e]
        return self.unflat(a), self.unflat(b)

    def edges_adjacent(self, e1: int, e2: int) -> bool:
        """True iff the two (distinct) edges share an endpoint.

        Raises:
            ValidationError: If the edge ids are equal or out of range.
        """
        self._check_edge(e1)
        self._check_edge(e2)
        if e1 == e2:
            raise ValidationError(f"edges_adjacent needs two distinct edges, got {e1} twice")
        return bool(set(self.edges[e1]) & set(self.edges[e2]))

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        """For each flat vertex, the edge ids incident to it in increasing order."""
        incident: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for e, (a, b) in enumerate(self.edges):
            incident[a].append(e)
            incident[b].append(e)
        return tuple(tuple(ids) for ids in incident)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for vertex in range(self.vertex_count):
            graph.add_node(vertex, side=self.side_of(vertex).value if self.is_bipartite else 0)
        graph.add_edges_from(self.edges)
        return graph

    # --------------------------------------------------------------------------
    # Automorphisms
    # --------------------------------------------------------------------------
    @property
    def automorphism_order(self) -> int:
        if self.is_bipartite:
            return 2 * math.factorial(self.n) ** 2
        return math.factorial(self.n)

    def iter_automorphisms(self) -> Iterator[tuple[int, ...]]:
        """Lazily yield every automorphism as a permutation of flat vertices.

        The identity comes first. For K_{n,n} the side swap is included, so the group
        has order 2 * (n!)^2.
        """
        if not self.is_bipartite:
            yield from itertools.permutations(range(self.n))
            return

        n = self.n
        for swap in (False, True):
            for sigma in itertools.permutations(range(n)):
                for tau in itertools.permutations(range(n)):
                    if swap:
                        yield tuple(n + s for s in sigma) + tuple(tau)
                    else:
                        yield tuple(sigma) + tuple(n + t for t in tau)

    def check_materialize_guard(self) -> None:
        """Raise GuardExceededError if the automorphism group is too large to store."""
        if self.is_bipartite and self.n > MAX_BIPARTITE_MATERIALIZE:
            raise GuardExceededError("automorphisms.bipartite_n", self.n, MAX_BIPARTITE_MATERIALIZE)
        if not self.is_bipartite and self.n > MAX_COMPLETE_MATERIALIZE:
            raise GuardExceededError("automorphisms.complete_n", self.n, MAX_COMPLETE_MATERIALIZE)

    def host_automorphisms(self) -> list[tuple[int, ...]]:
        """The full automorphism group, materialized.

        Raises:
            GuardExceededError: Above n = 8 (complete) or n = 5 (bipartite); use
                iter_automorphisms() instead.
        """
        self.check_materialize_guard()
        return list(self.iter_automorphisms())

    @cached_property
    def edge_permutations(self) -> tuple[tuple[int, ...], ...]:
        """Edge permutations induced by host_automorphisms, identity first."""
        self.check_materialize_guard()
        logging.debug(f"Materializing {self.automorphism_order} edge permutations of {self}")
        return tuple(
            tuple(self.edge_id(perm[a], perm[b]) for a, b in self.edges) for perm in self.iter_automorphisms()
        )


# ==============================================================================
# FUNCTIONS
# ==============================================================================
def host_automorphisms(host: HostGraph) -> list[tuple[int, ...]]:
    return host.host_automorphisms()


def edges_adjacent(host: HostGraph, e1: int, e2: int) -> bool:
    return host.edges_adjacent(e1, e2)


def edge_index(host: HostGraph, u: VertexId, v: VertexId) -> int:
    return host.edge_index(u, v)


# ==============================================================================
# MAIN
# ==============================================================================
if __name__ == "__main__":
    """
    This block is executed only if the file is run as a script.
    If this file is imported as a module in another script, this block will not
    be executed.
    """
