"""
Copy counting: the closed-form totals, the edge-pair counting lemmas with their
brute-force oracle, and rainbow / monochromatic counters on colored hosts

File: counting.py
Author: @cvlt
Date: 2024-11-07
Copyright: 2024, 2BiTS Srl., All rights reserved.

No part of this document must be reproduced in any form - including copied,
transcribed, printed, or by any electronic means - without specific written
permission from 2BiTS Srl.
"""

# ==============================================================================
# PACKAGES
# ==============================================================================

# ------------------------------------------------------------------------------
# STANDARD PACKAGES
# ------------------------------------------------------------------------------
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------
from src.colorings import EdgeColoring, require_valid
from src.errors import UnsupportedCaseError, ValidationError
from src.host import HostGraph, HostKind
from src.patterns import PatternGraph, RainbowTarget, aut_order, enumerate_copies, recognize

# ==============================================================================
# CONSTANTS
# ==============================================================================
LEMMA_PATTERNS = ("P4", "P5", "P4plus")

# Smallest t each counting lemma is stated for, per (host kind, pattern).
LEMMA_MIN_T = {
    (HostKind.COMPLETE, "P4"): 4,
    (HostKind.COMPLETE, "P5"): 5,
    (HostKind.COMPLETE, "P4plus"): 5,
    (HostKind.COMPLETE_BIPARTITE, "P4"): 3,
    (HostKind.COMPLETE_BIPARTITE, "P5"): 3,
}


# ==============================================================================
# CLASSES
# ==============================================================================
@dataclass(frozen=True)
class CountReport:
    """
    Classification of every copy of a pattern under one coloring.

    Attributes:
        total (int): Number of copies.
        rainbow (int): Copies whose edges all have distinct colors.
        mono (dict[int, int]): Monochromatic copies, per color.
        other (int): Everything else.
    """

    total: int
    rainbow: int
    mono: dict[int, int] = field(default_factory=dict)
    other: int = 0

    @property
    def mono_total(self) -> int:
        return sum(self.mono.values())

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "rainbow": self.rainbow,
            "mono": {str(color): count for color, count in sorted(self.mono.items())},
            "other": self.other,
        }


# ==============================================================================
# FUNCTIONS
# ==============================================================================
def fox_count(n: int, p: PatternGraph) -> int:
    """Number of copies of p in K_n: |V(p)|! C(n, |V(p)|) / |Aut(p)|.

    Args:
        n (int): Host size, at least 2.
        p (PatternGraph): The pattern.

    Returns:
        int: The copy count, 0 when n < |V(p)|.
    """
    if n < 2:
        raise ValidationError(f"fox_count needs n >= 2, got {n}")
    vertices = p.vertex_count
    if n < vertices:
        return 0
    return math.factorial(vertices) * math.comb(n, vertices) // aut_order(p)


def num_closed_form(setting: HostKind, target: RainbowTarget, t: int) -> int:
    """Number of copies of a rainbow target in K_t or K_{t,t}, by the closed forms.

    Raises:
        UnsupportedCaseError: P4plus on a bipartite host.
    """
    match (setting, target):
        case (HostKind.COMPLETE, RainbowTarget.K13):
            return t * math.comb(t - 1, 3)
        case (HostKind.COMPLETE, RainbowTarget.P4):
            return 12 * math.comb(t, 4)
        case (HostKind.COMPLETE, RainbowTarget.P5 | RainbowTarget.P4PLUS):
            return 60 * math.comb(t, 5)
        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P4):
            return t * t * (t - 1) * (t - 1)
        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P5):
            return t * t * (t - 1) * (t - 1) * max(t - 2, 0)
        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.K13):
            return 2 * t * math.comb(t, 3)
    raise UnsupportedCaseError(f"no closed form for {target.value} on a {setting.name.lower()} host")


def basic_lower_bound(setting: HostKind, k: int) -> int:
    """Least n whose host has at least k edges, in exact integer arithmetic."""
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    if setting is HostKind.COMPLETE_BIPARTITE:
        n = math.isqrt(k)
        return n if n * n >= k else n + 1

    n = max(2, (1 + math.isqrt(8 * k)) // 2)
    while n * (n - 1) // 2 < k:
        n += 1
    while n > 2 and (n - 1) * (n - 2) // 2 >= k:
        n -= 1
    return n


def count_containing(host: HostGraph, p: PatternGraph, e1: int, e2: int) -> int:
    """Number of copies of p that contain both e1 and e2, by the counting lemmas.

    Only the lemma-backed cases are answered: P4, P5 and P4plus in K_t, P4 and P5 in
    K_{t,t}. Anything else belongs to count_containing_oracle.

    Args:
        host (HostGraph): The host K_t or K_{t,t}.
        p (PatternGraph): A graph isomorphic to P4, P5 or P4plus.
        e1 (int): First edge id.
        e2 (int): Second edge id, different from e1.

    Returns:
        int: The copy count.

    Raises:
        ValidationError: Equal or out-of-range edge ids.
        UnsupportedCaseError: No lemma covers (host, p) at this size.
    """
    adjacent = host.edges_adjacent(e1, e2)
    name = recognize(p, LEMMA_PATTERNS)
    t = host.n

    minimum = LEMMA_MIN_T.get((host.kind, name))
    if minimum is None:
        raise UnsupportedCaseError(f"no counting lemma for {p} in {host}")
    if t < minimum:
        raise UnsupportedCaseError(f"the {name} counting lemma needs t >= {minimum}, got {host}")

    match (host.kind, name, adjacent):
        case (HostKind.COMPLETE, "P4", False):
            return 4
        case (HostKind.COMPLETE, "P4", True):
            return 2 * (t - 3)
        case (HostKind.COMPLETE, "P5", False):
            return 12 * (t - 4)
        case (HostKind.COMPLETE, "P5", True):
            return 3 * (t - 3) * (t - 4)
        case (HostKind.COMPLETE, "P4plus", False):
            return 8 * (t - 4)
        case (HostKind.COMPLETE, "P4plus", True):
            return 4 * (t - 3) * (t - 4)
        case (HostKind.COMPLETE_BIPARTITE, "P4", False):
            return 2
        case (HostKind.COMPLETE_BIPARTITE, "P4", True):
            return 2 * (t - 1)
        case (HostKind.COMPLETE_BIPARTITE, "P5", False):
            return 6 * (t - 2)
        case (HostKind.COMPLETE_BIPARTITE, "P5", True):
            return 3 * (t - 1) * (t - 2)
    raise UnsupportedCaseError(f"no counting lemma for {p} in {host}")


def count_containing_oracle(host: HostGraph, p: PatternGraph, required: Iterable[int]) -> int:
    """Number of copies of p containing every edge of required, by enumeration."""
    wanted = set(required)
    if not wanted:
        raise ValidationError("count_containing_oracle needs at least one required edge")
    for e in wanted:
        if not isinstance(e, int) or not 0 <= e < host.m:
            raise ValidationError(f"edge index {e!r} out of range 0..{host.m - 1}")
    return sum(1 for copy in enumerate_copies(host, p) if wanted.issubset(copy))


def _check_coloring(host: HostGraph, c: EdgeColoring) -> None:
    if c.host != host:
        raise ValidationError(f"coloring lives on {c.host}, not on {host}")
    require_valid(c)


def count_colored(host: HostGraph, c: EdgeColoring, p: PatternGraph) -> CountReport:
    """Classify every copy of p under c as rainbow, monochromatic or other.

    Single-edge patterns are counted as monochromatic only.
    """
    _check_coloring(host, c)
    colors = c.colors
    rainbow = other = total = 0
    mono: Counter = Counter()
    for copy in enumerate_copies(host, p):
        total += 1
        seen = {colors[e] for e in copy}
        if len(seen) == 1:
            mono[colors[copy[0]]] += 1
        elif len(seen) == len(copy):
            rainbow += 1
        else:
            other += 1
    return CountReport(total=total, rainbow=rainbow, mono=dict(sorted(mono.items())), other=other)


def rainbow_copy(host: HostGraph, c: EdgeColoring, p: PatternGraph) -> Optional[tuple[int, ...]]:
    """The first rainbow copy of p in enumeration order, or None."""
    _check_coloring(host, c)
    if p.edge_count < 2:
        return None
    for copy in enumerate_copies(host, p):
        if len({c.colors[e] for e in copy}) == len(copy):
            return copy
    return None


def has_rainbow(host: HostGraph, c: EdgeColoring, p: PatternGraph) -> bool:
    return rainbow_copy(host, c, p) is not None


def rainbow_and_mono(host: HostGraph, c: EdgeColoring, g: PatternGraph, h: PatternGraph) -> tuple[int, int]:
    """Rainbow copies of g and monochromatic copies of h under c, the GM summand."""
    rainbow = count_colored(host, c, g).rainbow
    mono = count_colored(host, c, h).mono_total
    logging.debug(f"{c.colors}: rainbow {g} = {rainbow}, mono {h} = {mono}")
    return rainbow, mono
