"""
Colorings with one or two repeated color classes, as analysed case by case when
computing GM_{k-1} and GM_{k-2}, and the closed forms attached to each case

File: proof_cases.py
Author: @cvlt
Date: 2024-11-11
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
import math
from enum import Enum
from typing import Sequence

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------
from src.colorings import EdgeColoring, from_classes
from src.errors import UnsupportedCaseError, ValidationError
from src.host import HostGraph, HostKind
from src.patterns import RainbowTarget


# ==============================================================================
# Enumeratives
# ==============================================================================
class PlacementShape(Enum):
    """
    Shape formed by the repeated color classes of a coloring with k = m - 1 or m - 2.
    """

    # one class of three edges
    THREE_MATCHING = "3P2"
    PATH_AND_EDGE = "P3+P2"
    STAR = "K13"
    TRIANGLE = "K3"
    PATH = "P4"
    # two classes of two edges
    DISJOINT_PAIRS = "disjoint-pairs"
    ADJACENT_AND_DISJOINT = "adjacent-and-disjoint"
    ADJACENT_PAIRS_SHARED_CENTER = "shared-center"
    ADJACENT_PAIRS_CROSSED = "crossed"
    # one class of two edges
    PAIR_DISJOINT = "pair-disjoint"
    PAIR_ADJACENT = "pair-adjacent"

    @property
    def is_single_triple(self) -> bool:
        return self in TRIPLE_SHAPES


TRIPLE_SHAPES = (
    PlacementShape.THREE_MATCHING,
    PlacementShape.PATH_AND_EDGE,
    PlacementShape.STAR,
    PlacementShape.TRIANGLE,
    PlacementShape.PATH,
)

# ==============================================================================
# CONSTANTS
# ==============================================================================
# Vertex pairs of every repeated class. Complete hosts use vertices 0..t-1, bipartite
# hosts use (i, j) for the edge u_i v_j.
COMPLETE_PLACEMENTS = {
    PlacementShape.THREE_MATCHING: (((0, 1), (2, 3), (4, 5)),),
    PlacementShape.PATH_AND_EDGE: (((0, 1), (1, 2), (3, 4)),),
    PlacementShape.STAR: (((0, 1), (0, 2), (0, 3)),),
    PlacementShape.TRIANGLE: (((0, 1), (0, 2), (1, 2)),),
    PlacementShape.PATH: (((0, 1), (1, 2), (2, 3)),),
    PlacementShape.DISJOINT_PAIRS: (((0, 1), (2, 3)), ((0, 2), (1, 3))),
    PlacementShape.ADJACENT_AND_DISJOINT: (((0, 1), (0, 2)), ((0, 3), (1, 2))),
    PlacementShape.ADJACENT_PAIRS_SHARED_CENTER: (((0, 1), (0, 2)), ((0, 3), (0, 4))),
    PlacementShape.ADJACENT_PAIRS_CROSSED: (((0, 1), (0, 2)), ((1, 3), (2, 3))),
    PlacementShape.PAIR_DISJOINT: (((0, 1), (2, 3)),),
    PlacementShape.PAIR_ADJACENT: (((0, 1), (0, 2)),),
}

BIPARTITE_PLACEMENTS = {
    PlacementShape.THREE_MATCHING: (((0, 0), (1, 1), (2, 2)),),
    PlacementShape.PATH_AND_EDGE: (((0, 0), (0, 1), (1, 2)),),
    PlacementShape.STAR: (((0, 0), (0, 1), (0, 2)),),
    PlacementShape.PATH: (((0, 0), (1, 0), (1, 1)),),
    PlacementShape.DISJOINT_PAIRS: (((0, 0), (1, 1)), ((0, 1), (1, 0))),
    PlacementShape.ADJACENT_AND_DISJOINT: (((0, 0), (0, 1)), ((1, 0), (2, 1))),
    PlacementShape.ADJACENT_PAIRS_SHARED_CENTER: (((0, 0), (0, 1)), ((0, 2), (0, 3))),
    PlacementShape.ADJACENT_PAIRS_CROSSED: (((0, 0), (0, 1)), ((1, 0), (1, 1))),
    PlacementShape.PAIR_DISJOINT: (((0, 0), (1, 1)),),
    PlacementShape.PAIR_ADJACENT: (((0, 0), (0, 1)),),
}

# Shapes tried in order for the coloring behind each f-value.
F_CASES = {
    HostKind.COMPLETE: {
        1: (PlacementShape.THREE_MATCHING, PlacementShape.DISJOINT_PAIRS),
        2: (PlacementShape.PATH_AND_EDGE, PlacementShape.ADJACENT_AND_DISJOINT),
        3: (PlacementShape.PATH, PlacementShape.ADJACENT_PAIRS_CROSSED),
        4: (PlacementShape.TRIANGLE,),
        5: (PlacementShape.STAR,),
        6: (PlacementShape.ADJACENT_PAIRS_SHARED_CENTER,),
    },
    HostKind.COMPLETE_BIPARTITE: {
        1: (PlacementShape.THREE_MATCHING, PlacementShape.DISJOINT_PAIRS),
        2: (PlacementShape.PATH_AND_EDGE, PlacementShape.ADJACENT_AND_DISJOINT),
        3: (PlacementShape.PATH, PlacementShape.ADJACENT_PAIRS_CROSSED),
        4: (PlacementShape.STAR,),
        5: (PlacementShape.ADJACENT_PAIRS_SHARED_CENTER,),
    },
}

F_MIN_T = {HostKind.COMPLETE: 4, HostKind.COMPLETE_BIPARTITE: 3}


# ==============================================================================
# FUNCTIONS
# ==============================================================================
def _sat_comb(a: int, b: int) -> int:
    """C(a, b), taken as 0 whenever a < b."""
    return math.comb(a, b) if a >= b >= 0 else 0


def _sat_sub(a: int, b: int) -> int:
    """a - b, taken as 0 whenever a < b."""
    return a - b if a >= b else 0


def place_classes(host: HostGraph, classes: Sequence[Sequence[int]]) -> EdgeColoring:
    """Give every group of edge ids one shared color and every other edge its own."""
    return from_classes(host, classes)


def _placements(host: HostGraph, shape: PlacementShape) -> tuple:
    table = BIPARTITE_PLACEMENTS if host.is_bipartite else COMPLETE_PLACEMENTS
    if shape not in table:
        raise ValidationError(f"shape {shape.value} does not exist in {host}")
    return table[shape]


def shape_fits(host: HostGraph, shape: PlacementShape) -> bool:
    try:
        groups = _placements(host, shape)
    except ValidationError:
        return False
    return all(a < host.n and b < host.n for group in groups for a, b in group)


def shape_coloring(host: HostGraph, shape: PlacementShape) -> EdgeColoring:
    """A concrete coloring of the host whose repeated classes form the shape.

    Raises:
        ValidationError: The shape does not exist in the host or the host is too small.
    """
    groups = _placements(host, shape)
    if not shape_fits(host, shape):
        raise ValidationError(f"{host} is too small for shape {shape.value}")
    if host.is_bipartite:
        edges = [[host.edge_id(i, host.n + j) for i, j in group] for group in groups]
    else:
        edges = [[host.edge_id(a, b) for a, b in group] for group in groups]
    return place_classes(host, edges)


def f_value(setting: HostKind, index: int, t: int) -> int:
    """The rainbow-K13 count f_index(t) of the k = m - 2 case analysis.

    Complete hosts have f_1..f_6 (t >= 4), bipartite hosts f_1..f_5 (t >= 3). The
    binomials and differences saturate at 0.

    Raises:
        ValidationError: Index or t out of range.
    """
    if index not in F_CASES[setting]:
        raise ValidationError(f"no f_{index} for a {setting.name.lower()} host")
    if t < F_MIN_T[setting]:
        raise ValidationError(f"f-values need t >= {F_MIN_T[setting]}, got {t}")

    if setting is HostKind.COMPLETE:
        base = math.comb(t - 1, 3)
        match index:
            case 1:
                return t * base
            case 2:
                return (t - 1) * base + _sat_comb(t - 3, 3) + 2 * _sat_comb(t - 3, 2)
            case 3:
                return (t - 2) * base + 2 * _sat_comb(t - 3, 3) + 4 * _sat_comb(t - 3, 2)
            case 4:
                return (t - 3) * base + 3 * _sat_comb(t - 3, 3) + 6 * _sat_comb(t - 3, 2)
            case 5:
                return (t - 1) * base + _sat_comb(t - 4, 3) + 3 * _sat_comb(t - 4, 2)
            case 6:
                return (t - 1) * base + _sat_comb(t - 5, 3) + 4 * _sat_comb(t - 5, 2) + 4 * _sat_sub(t, 5)

    base = math.comb(t, 3)
    match index:
        case 1:
            return 2 * t * base
        case 2:
            return (2 * t - 1) * base + _sat_comb(t - 2, 3) + 2 * _sat_comb(t - 2, 2)
        case 3:
            return (2 * t - 2) * base + 2 * _sat_comb(t - 2, 3) + 4 * _sat_comb(t - 2, 2)
        case 4:
            return (2 * t - 1) * base + _sat_comb(t - 3, 3) + 3 * _sat_comb(t - 3, 2)
        case 5:
            return (2 * t - 1) * base + _sat_comb(t - 4, 3) + 4 * _sat_comb(t - 4, 2) + 4 * _sat_sub(t, 4)
    raise ValidationError(f"no f_{index} for a {setting.name.lower()} host")


def f_case_coloring(setting: HostKind, index: int, t: int) -> EdgeColoring:
    """The coloring counted by f_index(t): the first listed shape that fits K_t / K_{t,t}.

    Raises:
        ValidationError: Index out of range.
        UnsupportedCaseError: No listed shape fits a host this small.
    """
    if index not in F_CASES[setting]:
        raise ValidationError(f"no f_{index} for a {setting.name.lower()} host")
    host = HostGraph(setting, t)
    for shape in F_CASES[setting][index]:
        if shape_fits(host, shape):
            return shape_coloring(host, shape)
    raise UnsupportedCaseError(f"no construction for f_{index} in {host}")


def damage_formula(setting: HostKind, target: RainbowTarget, shape: PlacementShape, t: int) -> int:
    """Copies of the target that contain two or more edges of one size-3 color class.

    Raises:
        UnsupportedCaseError: Two-class shapes, P4plus or K13 targets on bipartite
            hosts, or a triangle on a bipartite host.
    """
    if not shape.is_single_triple:
        raise UnsupportedCaseError(f"damage formulas cover one class of three edges, not {shape.value}")

    match (setting, target, shape):
        case (HostKind.COMPLETE, RainbowTarget.P4, PlacementShape.THREE_MATCHING):
            return 12
        case (HostKind.COMPLETE, RainbowTarget.P4, PlacementShape.PATH_AND_EDGE):
            return 2 * (t + 1)
        case (HostKind.COMPLETE, RainbowTarget.P4, PlacementShape.STAR | PlacementShape.TRIANGLE):
            return 6 * (t - 3)
        case (HostKind.COMPLETE, RainbowTarget.P4, PlacementShape.PATH):
            return 2 * (2 * t - 5)

        case (HostKind.COMPLETE, RainbowTarget.P5, PlacementShape.THREE_MATCHING):
            return 36 * (t - 4)
        case (HostKind.COMPLETE, RainbowTarget.P5, PlacementShape.PATH_AND_EDGE):
            return 3 * (t + 5) * (t - 4) - 8
        case (HostKind.COMPLETE, RainbowTarget.P5, PlacementShape.STAR | PlacementShape.TRIANGLE):
            return 9 * (t - 3) * (t - 4)
        case (HostKind.COMPLETE, RainbowTarget.P5, PlacementShape.PATH):
            return 2 * (3 * t - 5) * (t - 4)

        case (HostKind.COMPLETE, RainbowTarget.P4PLUS, PlacementShape.THREE_MATCHING):
            return 24 * (t - 4)
        case (HostKind.COMPLETE, RainbowTarget.P4PLUS, PlacementShape.PATH_AND_EDGE):
            return 4 * (t + 1) * (t - 4) - 4
        case (HostKind.COMPLETE, RainbowTarget.P4PLUS, PlacementShape.STAR):
            return 6 * (2 * t - 7) * (t - 4)
        case (HostKind.COMPLETE, RainbowTarget.P4PLUS, PlacementShape.TRIANGLE):
            return 12 * (t - 3) * (t - 4)
        case (HostKind.COMPLETE, RainbowTarget.P4PLUS, PlacementShape.PATH):
            return 4 * (2 * t - 5) * (t - 4)

        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P4, PlacementShape.THREE_MATCHING):
            return 6
        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P4, PlacementShape.PATH_AND_EDGE):
            return 2 * (t + 1)
        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P4, PlacementShape.STAR):
            return 6 * (t - 1)
        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P4, PlacementShape.PATH):
            return 4 * (t - 1)

        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P5, PlacementShape.THREE_MATCHING):
            return 18 * (t - 2)
        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P5, PlacementShape.PATH_AND_EDGE):
            return 3 * (t + 3) * (t - 2) - 4
        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P5, PlacementShape.STAR):
            return 9 * (t - 1) * (t - 2)
        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P5, PlacementShape.PATH):
            return 2 * (3 * t - 2) * (t - 2)

    raise UnsupportedCaseError(f"no damage formula for {target.value} / {shape.value} on a {setting.name.lower()} host")
