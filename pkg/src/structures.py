"""
Colored Structures 1-5: generators and classifiers for the extremal colorings
without rainbow P4, P5, K13 or P4plus

File: structures.py
Author: @cvlt
Date: 2024-11-08
Copyright: 2024, 2BiTS Srl., All rights reserved.

No part of this document must be reproduced in any form - including copied,
transcribed, printed, or by any electronic means - without specific written
permission from 2BiTS Srl.

Structures 1 and 2 live on K_n, structures 3, 4 and 5 on K_{n,n}. Inside a spec the
color playing the distinguished role is always 1 and part i (0-based) owns color i + 1.
Bipartite parts are positions 0..n-1 on the U side, or on the V side when swap_sides
is set; other_parts are positions on the opposite side.
"""

# ==============================================================================
# PACKAGES
# ==============================================================================

# ------------------------------------------------------------------------------
# STANDARD PACKAGES
# ------------------------------------------------------------------------------
import itertools
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------
import networkx as nx

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------
from src.colorings import EdgeColoring, first_occurrence, require_valid
from src.counting import rainbow_copy
from src.errors import ValidationError
from src.host import HostGraph
from src.patterns import PatternGraph

# ==============================================================================
# CONSTANTS
# ==============================================================================
COMPLETE_STRUCTURES = (1, 2)
BIPARTITE_STRUCTURES = (3, 4, 5)


# ==============================================================================
# CLASSES
# ==============================================================================
@dataclass(frozen=True)
class StructureSpec:
    """
    Parameters instantiating one colored structure.

    Attributes:
        structure_id (int): 1..5.
        n (int): Host size (per side for the bipartite structures).
        parts (tuple[tuple[int, ...], ...]): Structure 1: V_1..V_k. Structure 3: U_1..U_k.
            Structure 4: (U_1, U_2). Structure 5: U_1..U_k.
        other_parts (tuple[tuple[int, ...], ...]): Structures 4 and 5: V_1..V_k.
        choices (tuple[tuple[int, ...], ...]): Structures 1 and 5, per part: the colors of the
            edges inside V_i (resp. between U_i and V_i) in lexicographic order. One value
            colors the whole block, an empty tuple means color i + 1 (color 1 for i = 0).
        center (Optional[int]): Structure 2: the vertex v.
        center_colors (tuple[int, ...]): Structure 2: colors of the edges at v, by
            increasing other endpoint. K_n - v has color 1.
        swap_sides (bool): Bipartite structures: parts live on the V side.
    """

    structure_id: int
    n: int
    parts: tuple[tuple[int, ...], ...] = ()
    other_parts: tuple[tuple[int, ...], ...] = ()
    choices: tuple[tuple[int, ...], ...] = ()
    center: Optional[int] = None
    center_colors: tuple[int, ...] = ()
    swap_sides: bool = False

    def __post_init__(self):
        object.__setattr__(self, "parts", _as_blocks(self.parts))
        object.__setattr__(self, "other_parts", _as_blocks(self.other_parts))
        object.__setattr__(self, "choices", tuple(tuple(int(c) for c in block) for block in self.choices))
        object.__setattr__(self, "center_colors", tuple(int(c) for c in self.center_colors))

    @property
    def host(self) -> HostGraph:
        if self.structure_id in COMPLETE_STRUCTURES:
            return HostGraph.complete(self.n)
        return HostGraph.bipartite(self.n)

    @classmethod
    def from_sizes(
        cls,
        structure_id: int,
        sizes: Sequence[int],
        other_sizes: Sequence[int] = (),
        choices: Sequence[Sequence[int]] = (),
        center_colors: Sequence[int] = (),
        swap_sides: bool = False,
    ) -> "StructureSpec":
        """Lay parts out on consecutive positions.

        For structure 2, sizes is (n,) and the center is vertex 0.
        """
        if structure_id == 2:
            if len(sizes) != 1:
                raise ValidationError("structure 2 takes a single size, the host n")
            return cls(2, int(sizes[0]), center=0, center_colors=tuple(center_colors))
        parts = _consecutive(sizes)
        other_parts = _consecutive(other_sizes)
        return cls(
            structure_id=structure_id,
            n=sum(sizes),
            parts=parts,
            other_parts=other_parts,
            choices=tuple(tuple(block) for block in choices),
            swap_sides=swap_sides,
        )

    def to_dict(self) -> dict:
        return {
            "structure": self.structure_id,
            "n": self.n,
            "parts": [list(part) for part in self.parts],
            "other_parts": [list(part) for part in self.other_parts],
            "choices": [list(block) for block in self.choices],
            "center": self.center,
            "center_colors": list(self.center_colors),
            "swap_sides": self.swap_sides,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "StructureSpec":
        """Build a spec from JSON. Either explicit parts or "sizes" / "other_sizes" are accepted.

        Raises:
            ValidationError: Missing structure id or malformed fields.
        """
        try:
            structure_id = int(data["structure"])
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"structure JSON needs an integer 'structure' field: {e}") from e

        if "sizes" in data:
            return cls.from_sizes(
                structure_id,
                data["sizes"],
                data.get("other_sizes", ()),
                data.get("choices", ()),
                data.get("center_colors", ()),
                bool(data.get("swap_sides", False)),
            )
        try:
            return cls(
                structure_id=structure_id,
                n=int(data["n"]),
                parts=data.get("parts", ()),
                other_parts=data.get("other_parts", ()),
                choices=data.get("choices", ()),
                center=data.get("center"),
                center_colors=data.get("center_colors", ()),
                swap_sides=bool(data.get("swap_sides", False)),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"malformed structure JSON: {e}") from e


@dataclass(frozen=True)
class StructureVerdict:
    """
    Outcome of classify_structure.

    Attributes:
        matched (Optional[int]): The structure id, or None.
        spec (Optional[StructureSpec]): The recovered partition when matched.
        witness (Optional[tuple[int, ...]]): A rainbow copy, when no structure matched and
            a pattern was given.
    """

    matched: Optional[int]
    spec: Optional[StructureSpec] = None
    witness: Optional[tuple[int, ...]] = None

    def to_dict(self) -> dict:
        return {
            "matched": self.matched,
            "spec": self.spec.to_dict() if self.spec is not None else None,
            "witness": list(self.witness) if self.witness is not None else None,
        }


# ==============================================================================
# FUNCTIONS
# ==============================================================================
def _as_blocks(blocks) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(int(v) for v in block)) for block in blocks)


def _consecutive(sizes: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    blocks, start = [], 0
    for size in sizes:
        if int(size) < 0:
            raise ValidationError(f"part sizes must be >= 0, got {size}")
        blocks.append(tuple(range(start, start + int(size))))
        start += int(size)
    return tuple(blocks)


def _check_partition(blocks: Sequence[tuple[int, ...]], n: int, what: str) -> None:
    covered = [v for block in blocks for v in block]
    if sorted(covered) != list(range(n)):
        raise ValidationError(f"{what} must partition positions 0..{n - 1}, got {[list(b) for b in blocks]}")


def _check_min_sizes(blocks: Sequence[tuple[int, ...]], first_may_be_empty: bool, what: str) -> None:
    for index, block in enumerate(blocks):
        if not block and not (index == 0 and first_may_be_empty):
            raise ValidationError(f"{what}_{index + 1} must be non-empty")


def _block_colors(choice: tuple[int, ...], count: int, allowed: set[int], default: int, what: str) -> list[int]:
    if not choice:
        sequence = [default] * count
    elif len(choice) == 1:
        sequence = list(choice) * count
    elif len(choice) == count:
        sequence = list(choice)
    else:
        raise ValidationError(f"{what}: expected 1 or {count} colors, got {len(choice)}")
    if any(color not in allowed for color in sequence):
        raise ValidationError(f"{what}: colors must be in {sorted(allowed)}, got {sorted(set(sequence))}")
    return sequence


def _compress(raw: Sequence[int]) -> tuple[int, ...]:
    """Map the used labels onto 1..k, preserving their order."""
    rank = {label: index + 1 for index, label in enumerate(sorted(set(raw)))}
    return tuple(rank[label] for label in raw)


def _flat_pair(host: HostGraph, spec: StructureSpec, part_position: int, other_position: int) -> int:
    """Edge id between a position on the parts side and one on the opposite side."""
    u, v = (part_position, host.n + other_position)
    if spec.swap_sides:
        u, v = other_position, host.n + part_position
    return host.edge_id(u, v)


def generate_structure(spec: StructureSpec) -> EdgeColoring:
    """Realize a structure spec as an exact coloring.

    Args:
        spec (StructureSpec): The structure parameters.

    Returns:
        EdgeColoring: The coloring, its labels compressed onto 1..k.

    Raises:
        ValidationError: The requested parts or sizes break the structure's rules.
    """
    host = spec.host
    raw = [1] * host.m

    match spec.structure_id:
        case 1:
            _check_partition(spec.parts, spec.n, "V")
            if spec.choices and len(spec.choices) != len(spec.parts):
                raise ValidationError("structure 1 needs one choice per part")
            for index, part in enumerate(spec.parts):
                pairs = list(itertools.combinations(part, 2))
                choice = spec.choices[index] if spec.choices else ()
                own = 1 if index == 0 else index + 1
                sequence = _block_colors(choice, len(pairs), {1, own}, own, f"V_{index + 1}")
                for (a, b), color in zip(pairs, sequence):
                    raw[host.edge_id(a, b)] = color

        case 2:
            if spec.center is None or not 0 <= spec.center < spec.n:
                raise ValidationError(f"structure 2 needs a center in 0..{spec.n - 1}")
            if spec.n < 3:
                raise ValidationError("structure 2 needs n >= 3")
            others = [v for v in range(spec.n) if v != spec.center]
            if len(spec.center_colors) != len(others):
                raise ValidationError(f"structure 2 needs {len(others)} center colors, got {len(spec.center_colors)}")
            if any(color < 1 for color in spec.center_colors):
                raise ValidationError("structure 2 center colors must be >= 1")
            for v, color in zip(others, spec.center_colors):
                raw[host.edge_id(spec.center, v)] = color

        case 3:
            _check_partition(spec.parts, spec.n, "U")
            _check_min_sizes(spec.parts, False, "U")
            for index, part in enumerate(spec.parts):
                for u in part:
                    for v in range(spec.n):
                        raw[_flat_pair(host, spec, u, v)] = index + 1

        case 4:
            if len(spec.parts) != 2:
                raise ValidationError("structure 4 needs parts = (U_1, U_2)")
            _check_partition(spec.parts, spec.n, "U")
            if not spec.parts[0]:
                raise ValidationError("structure 4 needs |U_1| >= 1")
            _check_partition(spec.other_parts, spec.n, "V")
            _check_min_sizes(spec.other_parts, True, "V")
            for index, part in enumerate(spec.other_parts):
                for v in part:
                    for u in spec.parts[0]:
                        raw[_flat_pair(host, spec, u, v)] = index + 1

        case 5:
            if len(spec.other_parts) != len(spec.parts):
                raise ValidationError("structure 5 needs as many V parts as U parts")
            _check_partition(spec.parts, spec.n, "U")
            _check_partition(spec.other_parts, spec.n, "V")
            _check_min_sizes(spec.parts, True, "U")
            _check_min_sizes(spec.other_parts, True, "V")
            if spec.choices and len(spec.choices) != len(spec.parts):
                raise ValidationError("structure 5 needs one choice per part")
            for index, (us, vs) in enumerate(zip(spec.parts, spec.other_parts)):
                pairs = [(u, v) for u in us for v in vs]
                choice = spec.choices[index] if spec.choices else ()
                own = index + 1
                sequence = _block_colors(choice, len(pairs), {1, own}, own, f"U_{own}V_{own}")
                for (u, v), color in zip(pairs, sequence):
                    raw[_flat_pair(host, spec, u, v)] = color

        case _:
            raise ValidationError(f"unknown structure id {spec.structure_id} (expected 1..5)")

    colors = _compress(raw)
    return require_valid(EdgeColoring(host, max(colors), colors))


def _role_labels(colors: Sequence[int], distinguished: int) -> dict[int, int]:
    """Map the distinguished color to 1 and the others to 2.. in increasing order."""
    labels = {distinguished: 1}
    for color in sorted(set(colors) - {distinguished}):
        labels[color] = len(labels) + 1
    return labels


def _match_structure_1(c: EdgeColoring) -> Optional[StructureSpec]:
    host = c.host
    for role in sorted(set(c.colors)):
        graph = nx.Graph()
        graph.add_edges_from(host.edges[e] for e, color in enumerate(c.colors) if color != role)
        by_color: dict[int, set[int]] = {}
        consistent = True
        for component in nx.connected_components(graph):
            used = {c.colors[host.edge_id(a, b)] for a, b in graph.subgraph(component).edges}
            if len(used) != 1:
                consistent = False
                break
            by_color.setdefault(used.pop(), set()).update(component)
        if not consistent:
            continue

        labels = _role_labels(c.colors, role)
        inner = set().union(*by_color.values()) if by_color else set()
        parts = [tuple(v for v in range(host.n) if v not in inner)]
        parts += [tuple(sorted(by_color[color])) for color in sorted(by_color, key=labels.get)]
        choices = [
            tuple(labels[c.colors[host.edge_id(a, b)]] for a, b in itertools.combinations(part, 2)) for part in parts
        ]
        return StructureSpec(1, host.n, parts=tuple(parts), choices=tuple(choices))
    return None


def _match_structure_2(c: EdgeColoring) -> Optional[StructureSpec]:
    host = c.host
    if host.n < 3:
        return None
    for center in range(host.n):
        rest = {c.colors[e] for e, (a, b) in enumerate(host.edges) if center not in (a, b)}
        if len(rest) != 1:
            continue
        labels = _role_labels(c.colors, rest.pop())
        others = [v for v in range(host.n) if v != center]
        center_colors = tuple(labels[c.colors[host.edge_id(center, v)]] for v in others)
        return StructureSpec(2, host.n, center=center, center_colors=center_colors)
    return None


def _side_color(c: EdgeColoring, swap: bool, part_position: int, other_position: int) -> int:
    n = c.host.n
    if swap:
        return c.colors[c.host.edge_id(other_position, n + part_position)]
    return c.colors[c.host.edge_id(part_position, n + other_position)]


def _match_structure_3(c: EdgeColoring) -> Optional[StructureSpec]:
    n = c.host.n
    for swap in (False, True):
        rows = [{_side_color(c, swap, u, v) for v in range(n)} for u in range(n)]
        if any(len(row) != 1 for row in rows):
            continue
        owner = [row.pop() for row in rows]
        order = sorted(set(owner))
        parts = tuple(tuple(u for u in range(n) if owner[u] == color) for color in order)
        return StructureSpec(3, n, parts=parts, swap_sides=swap)
    return None


def _match_structure_4(c: EdgeColoring) -> Optional[StructureSpec]:
    n = c.host.n
    for role in sorted(set(c.colors)):
        for swap in (False, True):
            rows = [tuple(_side_color(c, swap, u, v) for v in range(n)) for u in range(n)]
            first = [u for u in range(n) if any(color != role for color in rows[u])] or [0]
            if len({rows[u] for u in first}) != 1:
                continue
            labels = _role_labels(c.colors, role)
            groups: dict[int, list[int]] = {color: [] for color in labels}
            for v, color in enumerate(rows[first[0]]):
                groups[color].append(v)
            v_parts = tuple(tuple(groups[color]) for color in sorted(labels, key=labels.get))
            if any(not part for part in v_parts[1:]):
                continue
            second = tuple(u for u in range(n) if u not in first)
            return StructureSpec(4, n, parts=(tuple(first), second), other_parts=v_parts, swap_sides=swap)
    return None


def _match_structure_5(c: EdgeColoring) -> Optional[StructureSpec]:
    host, n = c.host, c.host.n
    for role in sorted(set(c.colors)):
        u_owner: dict[int, int] = {}
        v_owner: dict[int, int] = {}
        consistent = True
        for e, color in enumerate(c.colors):
            if color == role:
                continue
            a, b = host.edges[e]
            if u_owner.setdefault(a, color) != color or v_owner.setdefault(b - n, color) != color:
                consistent = False
                break
        if not consistent:
            continue

        labels = _role_labels(c.colors, role)
        order = sorted(labels, key=labels.get)
        u_parts = [tuple(u for u in range(n) if u_owner.get(u, role) == color) for color in order]
        v_parts = [tuple(v for v in range(n) if v_owner.get(v, role) == color) for color in order]
        choices = tuple(
            tuple(labels[c.colors[host.edge_id(u, n + v)]] for u in us for v in vs)
            for us, vs in zip(u_parts, v_parts)
        )
        return StructureSpec(5, n, parts=tuple(u_parts), other_parts=tuple(v_parts), choices=choices)
    return None


def classify_structure(c: EdgeColoring, pattern: Optional[PatternGraph] = None) -> StructureVerdict:
    """Recognize the colored structure c realizes, if any.

    Complete hosts are tested for structure 1 then 2, bipartite hosts for 3, 4 then 5.
    Every color is tried in the distinguished role and, where it matters, both sides in
    the role of U. The first match wins.

    Args:
        c (EdgeColoring): An exact coloring.
        pattern (Optional[PatternGraph]): When given and nothing matches, a rainbow copy
            of it is attached as witness.

    Returns:
        StructureVerdict: The match with its recovered partition, or no match.
    """
    require_valid(c)
    if c.host.is_bipartite:
        matchers = ((3, _match_structure_3), (4, _match_structure_4), (5, _match_structure_5))
    else:
        matchers = ((1, _match_structure_1), (2, _match_structure_2))

    for structure_id, matcher in matchers:
        spec = matcher(c)
        if spec is not None:
            logging.debug(f"{c.host}, k={c.k}: structure {structure_id}")
            return StructureVerdict(structure_id, spec)

    witness = rainbow_copy(c.host, c, pattern) if pattern is not None else None
    return StructureVerdict(None, witness=witness)


def same_up_to_relabeling(a: EdgeColoring, b: EdgeColoring) -> bool:
    return a.host == b.host and first_occurrence(a.colors) == first_occurrence(b.colors)


# ==============================================================================
# MAIN
# ==============================================================================
if __name__ == "__main__":
    """
    This block is executed only if the file is run as a script.
    If this file is imported as a module in another script, this block will not
    be executed.
    """
