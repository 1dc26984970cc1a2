"""
Closed forms for gr / bgr and GM / bi-GM, with the theorem hypotheses they rest on

File: formulas.py
Author: @cvlt
Date: 2024-11-12
Copyright: 2024, 2BiTS Srl., All rights reserved.

No part of this document must be reproduced in any form - including copied,
transcribed, printed, or by any electronic means - without specific written
permission from 2BiTS Srl.

A query carries the base color count k and an offset j in {0, -1, -2}: the value
asked for is GM_{k+j}(G:H) where k = C(t,2) (complete) or k = t^2 (bipartite), so the
host is K_t or K_{t,t} and k + j colors are used. The K13 families evaluate their
binomials with the saturating convention C(a,b) = 0 for a < b; every other family
rejects t outside its stated range.
"""

# ==============================================================================
# PACKAGES
# ==============================================================================

# ------------------------------------------------------------------------------
# STANDARD PACKAGES
# ------------------------------------------------------------------------------
import logging
import math
from dataclasses import dataclass
from typing import Optional

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------
from src.counting import basic_lower_bound, num_closed_form
from src.errors import HypothesisError, UnboundedHypothesisError, UnsupportedCaseError, ValidationError
from src.host import HostKind
from src.patterns import PatternGraph, RainbowTarget, bound_graph, contains_subgraph

# ==============================================================================
# CONSTANTS
# ==============================================================================
OFFSETS = (0, -1, -2)

# |E(H)| >= 2, 3, 4 for GM_k, GM_{k-1}, GM_{k-2}.
MIN_H_EDGES = {0: 2, -1: 3, -2: 4}

# Smallest base k each GM theorem is stated for, per offset.
MIN_BASE_K = {
    (HostKind.COMPLETE, RainbowTarget.K13): {0: 6, -1: 6, -2: 6},
    (HostKind.COMPLETE, RainbowTarget.P4PLUS): {0: 10, -1: 10, -2: 10},
    (HostKind.COMPLETE, RainbowTarget.P4): {0: 6, -1: 6, -2: 6},
    (HostKind.COMPLETE, RainbowTarget.P5): {0: 10, -1: 10, -2: 10},
    (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P4): {0: 4, -1: 4, -2: 9},
    (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P5): {0: 9, -1: 9, -2: 9},
    (HostKind.COMPLETE_BIPARTITE, RainbowTarget.K13): {0: 9, -1: 9, -2: 9},
}


# ==============================================================================
# CLASSES
# ==============================================================================
@dataclass(frozen=True)
class FormulaQuery:
    """
    One formula evaluation request.

    Attributes:
        setting (HostKind): Complete or bipartite host.
        target (RainbowTarget): The rainbow graph G.
        k (int): Base color count; for GM queries C(t,2) or t^2.
        offset (int): 0, -1 or -2.
        h (Optional[PatternGraph]): The monochromatic graph H.
    """

    setting: HostKind
    target: RainbowTarget
    k: int
    offset: int = 0
    h: Optional[PatternGraph] = None

    def __post_init__(self):
        if self.offset not in OFFSETS:
            raise ValidationError(f"offset must be 0, -1 or -2, got {self.offset}")
        if self.k < 1:
            raise ValidationError(f"k must be >= 1, got {self.k}")

    @classmethod
    def from_t(
        cls, setting: HostKind, target: RainbowTarget, t: int, offset: int = 0, h: Optional[PatternGraph] = None
    ) -> "FormulaQuery":
        if t < 2:
            raise ValidationError(f"t must be >= 2, got {t}")
        k = t * t if setting is HostKind.COMPLETE_BIPARTITE else math.comb(t, 2)
        return cls(setting, target, k, offset, h)

    @property
    def colors(self) -> int:
        return self.k + self.offset

    @property
    def t(self) -> Optional[int]:
        """The t with k = C(t,2) or k = t^2, if there is one."""
        if self.setting is HostKind.COMPLETE_BIPARTITE:
            root = math.isqrt(self.k)
            return root if root * root == self.k else None
        t = basic_lower_bound(HostKind.COMPLETE, self.k)
        return t if math.comb(t, 2) == self.k else None


@dataclass(frozen=True)
class HypothesisCheck:
    description: str
    passed: bool

    def to_dict(self) -> dict:
        return {"condition": self.description, "passed": self.passed}


@dataclass(frozen=True)
class FormulaResult:
    """
    A closed-form value with the branch taken and the hypotheses checked.

    Attributes:
        value (int): The formula value.
        branch (str): The piecewise case taken.
        hypotheses (tuple[HypothesisCheck, ...]): Every checked condition.
        published (Optional[int]): The printed value, when it differs from value.
        vacuous (bool): Evaluated with strict=False although some hypothesis fails.
    """

    value: int
    branch: str
    hypotheses: tuple[HypothesisCheck, ...] = ()
    published: Optional[int] = None
    vacuous: bool = False

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "branch": self.branch,
            "hypotheses": [check.to_dict() for check in self.hypotheses],
            "published": self.published,
            "vacuous": self.vacuous,
        }


# ==============================================================================
# FUNCTIONS
# ==============================================================================
def _sat_comb(a: int, b: int) -> int:
    return math.comb(a, b) if a >= b >= 0 else 0


def _bound_check(setting: HostKind, target: RainbowTarget, colors: int, h: Optional[PatternGraph]) -> list:
    try:
        bound = bound_graph(setting, target, colors)
    except UnboundedHypothesisError:
        return []
    except ValidationError as e:
        return [HypothesisCheck(f"bound graph exists ({e})", False)]
    if h is None:
        return [HypothesisCheck(f"H given for the bound {bound}", False)]
    return [HypothesisCheck(f"H is a subgraph of {bound}", contains_subgraph(bound, h))]


def _check_supported(setting: HostKind, target: RainbowTarget) -> None:
    if setting is HostKind.COMPLETE_BIPARTITE and target is RainbowTarget.P4PLUS:
        raise UnsupportedCaseError("P4plus has no bipartite formula")


def gr_hypotheses(q: FormulaQuery) -> list[HypothesisCheck]:
    """The conditions of the gr / bgr theorem for q, evaluated (diagnostic, never raises on failure)."""
    _check_supported(q.setting, q.target)
    c = q.colors
    checks = []
    match (q.setting, q.target):
        case (HostKind.COMPLETE, RainbowTarget.K13 | RainbowTarget.P4):
            checks.append(HypothesisCheck(f"k = {c} >= 4", c >= 4))
        case (HostKind.COMPLETE, RainbowTarget.P4PLUS | RainbowTarget.P5):
            checks.append(HypothesisCheck(f"k = {c} >= 5", c >= 5))
        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P4):
            checks.append(HypothesisCheck(f"k = {c} >= 3", c >= 3))
        case (HostKind.COMPLETE_BIPARTITE, _):
            checks.append(HypothesisCheck(f"k = {c} >= 5", c >= 5))

    if q.setting is HostKind.COMPLETE and q.target is RainbowTarget.P5:
        if q.h is None:
            checks.append(HypothesisCheck("H given", False))
        else:
            vertices = q.h.vertex_count
            checks.append(HypothesisCheck(f"k = {c} >= |V(H)| = {vertices}", c >= vertices))
    elif c >= 1:
        checks += _bound_check(q.setting, q.target, c, q.h)
    return checks


def _require(checks: list[HypothesisCheck], what: str, strict: bool) -> bool:
    failed = [check.description for check in checks if not check.passed]
    if failed and strict:
        raise HypothesisError(f"hypotheses of {what} fail", failed)
    return bool(failed)


def gr_formula(q: FormulaQuery, strict: bool = True) -> FormulaResult:
    """gr_k(G:H) or bgr_k(G:H) by its closed form.

    The color count is q.k + q.offset. The radical value is the least n whose host has
    at least that many edges, computed in integers.

    Raises:
        HypothesisError: A hypothesis fails and strict is set.
        UnsupportedCaseError: P4plus on a bipartite host.
    """
    checks = gr_hypotheses(q)
    vacuous = _require(checks, f"gr for {q.target.value}", strict)
    c = q.colors
    radical = basic_lower_bound(q.setting, max(c, 1))

    match (q.setting, q.target):
        case (HostKind.COMPLETE, RainbowTarget.K13 | RainbowTarget.P4):
            value, branch = radical, "least n with C(n,2) >= k"
        case (HostKind.COMPLETE, RainbowTarget.P4PLUS):
            if c in (5, 6):
                value, branch = 5, "5 <= k <= 6"
            else:
                value, branch = radical, "k >= 7: least n with C(n,2) >= k"
        case (HostKind.COMPLETE, RainbowTarget.P5):
            vertices = q.h.vertex_count if q.h is not None else 0
            if c >= vertices + 1:
                value, branch = max(radical, 5), "k >= |V(H)| + 1"
            elif q.h is not None and q.h.is_complete:
                value, branch = (vertices - 1) ** 2 + 1, "k = |V(H)|, H complete"
            else:
                value, branch = vertices + 1, "k = |V(H)|, H not complete"
        case _:
            value, branch = radical, "least n with n^2 >= k"

    logging.debug(f"gr {q.setting.name} {q.target.value} k={c}: {value} ({branch})")
    return FormulaResult(value, branch, tuple(checks), vacuous=vacuous)


def gm_hypotheses(q: FormulaQuery) -> list[HypothesisCheck]:
    """The conditions of the GM / bi-GM theorem for q, evaluated (diagnostic)."""
    _check_supported(q.setting, q.target)
    checks = []
    minimum = MIN_BASE_K[(q.setting, q.target)][q.offset]
    if q.setting is HostKind.COMPLETE and q.target is RainbowTarget.P5 and q.h is not None:
        minimum = max(minimum, q.h.vertex_count + 1 - q.offset)
    checks.append(HypothesisCheck(f"k = {q.k} >= {minimum}", q.k >= minimum))

    min_edges = MIN_H_EDGES[q.offset]
    if q.h is None:
        checks.append(HypothesisCheck(f"H given with |E(H)| >= {min_edges}", False))
    else:
        checks.append(HypothesisCheck(f"|E(H)| = {q.h.edge_count} >= {min_edges}", q.h.edge_count >= min_edges))

    if q.colors >= 1:
        checks += _bound_check(q.setting, q.target, q.colors, q.h)
    return checks


def is_vacuous(setting: HostKind, target: RainbowTarget, k: int, offset: int) -> bool:
    """True iff no H at all satisfies the GM hypotheses: the bound graph has too few edges."""
    try:
        bound = bound_graph(setting, target, k + offset)
    except (UnboundedHypothesisError, ValidationError):
        return False
    return bound.edge_count < MIN_H_EDGES[offset]


def _complete_k13(t: int, offset: int) -> tuple[int, str]:
    match offset:
        case 0:
            return t * math.comb(t - 1, 3), "t C(t-1,3)"
        case -1:
            if t == 4:
                return 3, "t = 4"
            if t == 5:
                return 18, "t = 5"
            return (t - 1) * math.comb(t - 1, 3) + _sat_comb(t - 3, 3) + 2 * _sat_comb(t - 3, 2), "t >= 6"
        case _:
            if t == 4:
                return 1, "t = 4"
            if t == 5:
                return 14, "t = 5"
            return (t - 3) * math.comb(t - 1, 3) + 3 * _sat_comb(t - 3, 3) + 6 * _sat_comb(t - 3, 2), "t >= 6"


def _bipartite_k13(t: int, offset: int) -> tuple[int, str]:
    match offset:
        case 0:
            return 2 * t * math.comb(t, 3), "2t C(t,3)"
        case -1:
            if t == 3:
                return 5, "t = 3"
            if t == 4:
                return 30, "t = 4"
            return (2 * t - 1) * math.comb(t, 3) + _sat_comb(t - 2, 3) + 2 * _sat_comb(t - 2, 2), "t >= 5"
        case _:
            if t == 3:
                return 4, "t = 3"
            if t == 4:
                return 28, "t = 4"
            if t == 5:
                return 93, "t = 5"
            return (2 * t - 1) * math.comb(t, 3) + _sat_comb(t - 3, 3) + 3 * _sat_comb(t - 3, 2), "t >= 6"


def _gm_value(setting: HostKind, target: RainbowTarget, t: int, offset: int) -> tuple[int, str, Optional[int]]:
    """(value, branch, published value when it differs)."""
    total = num_closed_form(setting, target, t)
    if offset == 0:
        return total, "every copy rainbow", None

    match (setting, target):
        case (HostKind.COMPLETE, RainbowTarget.K13):
            return (*_complete_k13(t, offset), None)
        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.K13):
            return (*_bipartite_k13(t, offset), None)

        case (HostKind.COMPLETE, RainbowTarget.P4):
            if offset == -1:
                if t == 4:
                    return 8, "t = 4", None
                return total - 2 * (t - 3), "t >= 5: 12 C(t,4) - 2(t-3)", None
            if t == 4:
                return 4, "t = 4", None
            return total - 6 * (t - 3), "t >= 5: 12 C(t,4) - 6(t-3)", None

        case (HostKind.COMPLETE, RainbowTarget.P4PLUS):
            spoiled = (t - 3) * (t - 4)
            if offset == -1:
                return total - 4 * spoiled, "60 C(t,5) - 4(t-3)(t-4)", total - 5 * spoiled
            return total - 12 * spoiled, "60 C(t,5) - 12(t-3)(t-4)", total - 15 * spoiled

        case (HostKind.COMPLETE, RainbowTarget.P5):
            if offset == -1:
                if t <= 6:
                    return total - 12 * (t - 4), "5 <= t <= 6: 60 C(t,5) - 12(t-4)", None
                return total - 3 * (t - 3) * (t - 4), "t >= 7: 60 C(t,5) - 3(t-3)(t-4)", None
            if t == 5:
                return 36, "t = 5", 38
            if t == 6:
                return 288, "t = 6", None
            return total - 9 * (t - 3) * (t - 4), "t >= 7: 60 C(t,5) - 9(t-3)(t-4)", None

        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P4):
            factor = 2 if offset == -1 else 6
            return total - factor * (t - 1), f"t^2(t-1)^2 - {factor}(t-1)", None

        case (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P5):
            factor = 3 if offset == -1 else 9
            return total - factor * (t - 1) * (t - 2), f"t^2(t-1)^2(t-2) - {factor}(t-1)(t-2)", None

    raise UnsupportedCaseError(f"no GM formula for {target.value} on a {setting.name.lower()} host")


def gm_formula(q: FormulaQuery, strict: bool = True) -> FormulaResult:
    """GM_{k+offset}(G:H) or bi-GM by its closed form.

    Args:
        q (FormulaQuery): The query; q.k must be C(t,2) or t^2.
        strict (bool): When False, a failing hypothesis does not block the value and the
            result is flagged vacuous.

    Returns:
        FormulaResult: The value, its branch and the checked hypotheses.

    Raises:
        ValidationError: q.k is not C(t,2) / t^2.
        HypothesisError: A hypothesis fails and strict is set.
        UnsupportedCaseError: P4plus on a bipartite host.
    """
    _check_supported(q.setting, q.target)
    t = q.t
    if t is None:
        form = "t^2" if q.setting is HostKind.COMPLETE_BIPARTITE else "C(t,2)"
        raise ValidationError(f"k = {q.k} is not of the form {form}")

    checks = gm_hypotheses(q)
    vacuous = _require(checks, f"GM for {q.target.value} at offset {q.offset}", strict)
    value, branch, published = _gm_value(q.setting, q.target, t, q.offset)
    logging.debug(f"GM {q.setting.name} {q.target.value} t={t} offset={q.offset}: {value} ({branch})")
    return FormulaResult(value, branch, tuple(checks), published=published, vacuous=vacuous)
