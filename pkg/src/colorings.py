"""
Exact k-edge-colorings of a host: validation, color-class profiles, enumeration of
one representative per class under color relabeling and host automorphisms, and
canonical forms.

File: colorings.py
Author: @cvlt
Date: 2024-11-06
Copyright: 2024, 2BiTS Srl., All rights reserved.

No part of this document must be reproduced in any form - including copied,
transcribed, printed, or by any electronic means - without specific written
permission from 2BiTS Srl.

Colors are 1-based. A color sequence is in first-occurrence form when walking the edges
in index order meets the colors as 1, 2, 3, ... The canonical form of a coloring is the
lexicographically least first-occurrence sequence over all host automorphisms.
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
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping, NamedTuple, Optional, Sequence

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------
from src.errors import GuardExceededError, ValidationError
from src.host import HostGraph

# ==============================================================================
# CONSTANTS
# ==============================================================================
BASE_COMPLETE_N = 6
EXTENDED_COMPLETE_N = 7
BASE_BIPARTITE_N = 4
EXTENDED_BIPARTITE_N = 5
MAX_EXTENDED_REPEATED_CLASSES = 3
MAX_SCANNED_PARTITIONS = 2_500_000

PROFILE_TEXT = re.compile(r"^\{?\s*\d+(\s*,\s*\d+)*\s*\}?$")


# ==============================================================================
# CLASSES
# ==============================================================================
@dataclass(frozen=True)
class EdgeColoring:
    """
    A k-edge-coloring of a host, one color per edge index.

    Attributes:
        host (HostGraph): The colored host.
        k (int): Declared number of colors.
        colors (tuple[int, ...]): Color of every edge, by edge index.
    """

    host: HostGraph
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(color) for color in self.colors))

    def classes(self) -> dict[int, tuple[int, ...]]:
        """Edge ids of every color class, keyed by color."""
        grouped: dict[int, list[int]] = {}
        for e, color in enumerate(self.colors):
            grouped.setdefault(color, []).append(e)
        return {color: tuple(edges) for color, edges in sorted(grouped.items())}

    @property
    def profile(self) -> "ColorClassProfile":
        return ColorClassProfile(tuple(Counter(self.colors).values()))

    def to_dict(self) -> dict:
        return {"host": self.host.descriptor, "k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_dict(cls, data: dict) -> "EdgeColoring":
        """Build a coloring from its JSON form. The result is not validated.

        Raises:
            ValidationError: Missing keys or a malformed host descriptor.
        """
        try:
            host = HostGraph.from_descriptor(data["host"])
            colors = data["colors"]
            k = data.get("k", max(colors) if colors else 0)
        except (KeyError, TypeError) as e:
            raise ValidationError(f"coloring JSON is missing field {e}") from e
        return cls(host, int(k), tuple(colors))


@dataclass(frozen=True)
class ColorClassProfile:
    """
    Multiset of color class sizes, stored in non-increasing order.

    Attributes:
        sizes (tuple[int, ...]): Class sizes; their sum is m and their count is k.
    """

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(sorted((int(size) for size in self.sizes), reverse=True))
        if not sizes or sizes[-1] < 1:
            raise ValidationError(f"profile parts must all be >= 1, got {self.sizes!r}")
        object.__setattr__(self, "sizes", sizes)

    def __str__(self) -> str:
        return "{" + ",".join(str(size) for size in self.sizes) + "}"

    @property
    def m(self) -> int:
        return sum(self.sizes)

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def repeated(self) -> tuple[int, ...]:
        """Sizes of the classes with two or more edges."""
        return tuple(size for size in self.sizes if size > 1)

    @property
    def partition_count(self) -> int:
        """Number of set partitions of the m edges with this profile."""
        count = math.factorial(self.m)
        for size, multiplicity in Counter(self.sizes).items():
            count //= math.factorial(size) ** multiplicity * math.factorial(multiplicity)
        return count

    def check(self, m: int, k: int) -> None:
        if self.m != m or self.k != k:
            raise ValidationError(f"profile {self} does not split {m} edges into {k} classes")

    @classmethod
    def from_text(cls, text: str, m: int, k: int) -> "ColorClassProfile":
        """Parse "2,2" or "{3,1,1}", padding with singleton classes up to k parts.

        Raises:
            ValidationError: Malformed text or a profile inconsistent with (m, k).
        """
        if not PROFILE_TEXT.match(text.strip()):
            raise ValidationError(f"malformed profile '{text}'")
        sizes = [int(part) for part in re.findall(r"\d+", text)]
        if len(sizes) > k:
            raise ValidationError(f"profile '{text}' has more than {k} parts")
        profile = cls(tuple(sizes + [1] * (k - len(sizes))))
        profile.check(m, k)
        return profile


class ColoringClass(NamedTuple):
    coloring: EdgeColoring
    orbit_size: int


# ==============================================================================
# FUNCTIONS
# ==============================================================================
def validate(c: EdgeColoring) -> list[str]:
    """Diagnose a coloring. An empty list means it is a valid exact k-coloring.

    Args:
        c (EdgeColoring): The coloring to check.

    Returns:
        list[str]: One message per violation.
    """
    violations = []
    m = c.host.m
    if len(c.colors) != m:
        violations.append(f"length {len(c.colors)} != {m} edges of {c.host}")
    if c.k < 1:
        violations.append(f"k must be >= 1, got {c.k}")
    if c.k > m:
        violations.append(f"k = {c.k} exceeds the {m} edges of {c.host}")

    out_of_range = sorted({color for color in c.colors if not 1 <= color <= c.k})
    if out_of_range:
        violations.append(f"labels out of range 1..{c.k}: {out_of_range}")

    used = set(c.colors)
    for color in range(1, c.k + 1):
        if color not in used:
            violations.append(f"color {color} unused")
    return violations


def require_valid(c: EdgeColoring) -> EdgeColoring:
    violations = validate(c)
    if violations:
        raise ValidationError("invalid coloring: " + "; ".join(violations))
    return c


def first_occurrence(colors: Sequence[int]) -> tuple[int, ...]:
    """Relabel colors 1, 2, ... in order of first appearance along the edge order."""
    labels: dict[int, int] = {}
    return tuple(labels.setdefault(color, len(labels) + 1) for color in colors)


def permute_colors(c: EdgeColoring, mapping: Mapping[int, int]) -> EdgeColoring:
    """Apply a bijection of color labels."""
    return EdgeColoring(c.host, c.k, tuple(mapping[color] for color in c.colors))


def apply_edge_permutation(c: EdgeColoring, edge_perm: Sequence[int]) -> EdgeColoring:
    """Move the color of edge e to edge edge_perm[e]."""
    moved = [0] * len(c.colors)
    for e, color in enumerate(c.colors):
        moved[edge_perm[e]] = color
    return EdgeColoring(c.host, c.k, tuple(moved))


def canonicalize(c: EdgeColoring) -> EdgeColoring:
    """The orbit representative of c under host automorphisms and color relabeling.

    Raises:
        ValidationError: If c is not a valid exact coloring.
        GuardExceededError: If the host automorphism group is too large to materialize.
    """
    require_valid(c)
    best: Optional[tuple[int, ...]] = None
    for edge_perm in c.host.edge_permutations:
        moved = [0] * len(c.colors)
        for e, color in enumerate(c.colors):
            moved[edge_perm[e]] = color
        candidate = first_occurrence(moved)
        if best is None or candidate < best:
            best = candidate
    return EdgeColoring(c.host, c.k, best)


def from_classes(host: HostGraph, groups: Sequence[Sequence[int]]) -> EdgeColoring:
    """Color each group of edge ids with one shared color and every other edge with its own.

    The result is exact by construction and its labels are in first-occurrence form.

    Raises:
        ValidationError: Overlapping groups or edge ids out of range.
    """
    owner: dict[int, int] = {}
    for index, group in enumerate(groups):
        for e in group:
            if not 0 <= e < host.m:
                raise ValidationError(f"edge id {e} out of range 0..{host.m - 1}")
            if e in owner:
                raise ValidationError(f"edge id {e} appears in two groups")
            owner[e] = index
    keys = [owner.get(e, -1 - e) for e in range(host.m)]
    colors = first_occurrence(keys)
    return EdgeColoring(host, max(colors), colors)


def rainbow_coloring(host: HostGraph) -> EdgeColoring:
    return EdgeColoring(host, host.m, tuple(range(1, host.m + 1)))


def is_matching_triple(c: EdgeColoring) -> bool:
    """True iff c is K_4 with three colors, each color class a perfect matching."""
    if c.host.is_bipartite or c.host.n != 4 or c.k != 3 or validate(c):
        return False
    for edges in c.classes().values():
        if len(edges) != 2 or c.host.edges_adjacent(edges[0], edges[1]):
            return False
    return True


def all_profiles(m: int, k: int) -> list[ColorClassProfile]:
    """Every multiset of k positive class sizes summing to m, largest first."""
    if not 1 <= k <= m:
        raise ValidationError(f"no exact {k}-coloring of {m} edges exists")

    def parts(total: int, count: int, largest: int) -> Iterator[tuple[int, ...]]:
        if count == 0:
            if total == 0:
                yield ()
            return
        for size in range(min(largest, total - (count - 1)), 0, -1):
            if size * count < total:
                break
            for rest in parts(total - size, count - 1, size):
                yield (size,) + rest

    return [ColorClassProfile(sizes) for sizes in parts(m, k, m)]


def _check_enumeration_guard(host: HostGraph, profiles: Sequence[ColorClassProfile]) -> None:
    if host.is_bipartite:
        base, extended, guard = BASE_BIPARTITE_N, EXTENDED_BIPARTITE_N, "enumeration.bipartite_n"
    else:
        base, extended, guard = BASE_COMPLETE_N, EXTENDED_COMPLETE_N, "enumeration.complete_n"

    if host.n > base:
        few_repeated = all(len(p.repeated) <= MAX_EXTENDED_REPEATED_CLASSES for p in profiles)
        if host.n > extended or not few_repeated:
            raise GuardExceededError(guard, host.n, extended if few_repeated else base)

    scanned = sum(p.partition_count for p in profiles)
    if scanned > MAX_SCANNED_PARTITIONS:
        raise GuardExceededError("enumeration.partitions", scanned, MAX_SCANNED_PARTITIONS)


def _repeated_blocks(
    available: tuple[int, ...], sizes: tuple[int, ...], previous: Optional[tuple[int, ...]]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Disjoint blocks of the given sizes; equal-size neighbours come ordered by their least edge."""
    if not sizes:
        yield ()
        return
    size = sizes[0]
    for block in itertools.combinations(available, size):
        if previous is not None and len(previous) == size and block[0] < previous[0]:
            continue
        rest = tuple(e for e in available if e not in block)
        for tail in _repeated_blocks(rest, sizes[1:], block):
            yield (block,) + tail


def _blocks_image(blocks: tuple[tuple[int, ...], ...], edge_perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(edge_perm[e] for e in block)) for block in blocks))


def _blocks_sequence(m: int, blocks: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    owner = {e: index for index, block in enumerate(blocks) for e in block}
    return first_occurrence([owner.get(e, -1 - e) for e in range(m)])


def enumerate_exact_colorings(
    host: HostGraph,
    k: int,
    profile: Optional[ColorClassProfile] = None,
    shard: Optional[tuple[int, int]] = None,
) -> Iterator[ColoringClass]:
    """One representative per class of exact k-colorings, with the class size.

    Two colorings are in the same class when a host automorphism followed by a color
    relabeling maps one onto the other. The orbit sizes over all classes add up to
    k! S(m, k) (or to k! times the partition count of the profile).

    Args:
        host (HostGraph): The host graph.
        k (int): Number of colors.
        profile (Optional[ColorClassProfile]): Restrict to one class-size profile.
        shard (Optional[tuple[int, int]]): (index, count); keep only the classes whose
            color-1 edge set, read as a bitmask, is index modulo count.

    Returns:
        Iterator[ColoringClass]: Representatives in first-occurrence form.

    Raises:
        ValidationError: k infeasible for the host or the profile inconsistent.
        GuardExceededError: The host or the partition count is above the guards.
    """
    m = host.m
    if not 1 <= k <= m:
        raise ValidationError(f"no exact {k}-coloring of {host} exists (m = {m})")
    if profile is not None:
        profile.check(m, k)
    profiles = [profile] if profile is not None else all_profiles(m, k)
    if shard is not None and not 0 <= shard[0] < shard[1]:
        raise ValidationError(f"invalid shard {shard}")

    _check_enumeration_guard(host, profiles)
    host.check_materialize_guard()
    return _iter_classes(host, k, profiles, shard)


def _iter_classes(
    host: HostGraph, k: int, profiles: Sequence[ColorClassProfile], shard: Optional[tuple[int, int]]
) -> Iterator[ColoringClass]:
    m = host.m
    edge_perms = host.edge_permutations
    labelled = math.factorial(k)
    emitted = 0

    for profile in profiles:
        seen: set[tuple[tuple[int, ...], ...]] = set()
        for blocks in _repeated_blocks(tuple(range(m)), profile.repeated, None):
            key = tuple(sorted(blocks))
            if key in seen:
                continue
            orbit = {_blocks_image(key, edge_perm) for edge_perm in edge_perms}
            seen.update(orbit)
            representative = min(_blocks_sequence(m, member) for member in orbit)

            if shard is not None:
                mask = sum(1 << e for e, color in enumerate(representative) if color == 1)
                if mask % shard[1] != shard[0]:
                    continue
            emitted += 1
            yield ColoringClass(EdgeColoring(host, k, representative), len(orbit) * labelled)

        logging.debug(f"{host}, k={k}, profile {profile}: {len(seen)} partitions scanned")
    logging.debug(f"{host}, k={k}: {emitted} classes emitted")


# ==============================================================================
# MAIN
# ==============================================================================
if __name__ == "__main__":
    """
    This block is executed only if the file is run as a script.
    If this file is imported as a module in another script, this block will not
    be executed.
    """
