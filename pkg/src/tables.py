"""
Verification harness: rebuilds the GM / bi-GM result tables cell by cell, closed form
against exhaustive search

File: tables.py
Author: @cvlt
Date: 2024-11-14
Copyright: 2024, 2BiTS Srl., All rights reserved.

No part of this document must be reproduced in any form - including copied,
transcribed, printed, or by any electronic means - without specific written
permission from 2BiTS Srl.

The complete host carries the K13, P4plus, P4 and P5 families, the bipartite host
the K13, P4 and P5 families. Every cell is evaluated with the conforming H = K_{1,j}, where j is the
edge minimum of the offset, so the hypotheses hold whenever any H can satisfy them.
"""

# ==============================================================================
# PACKAGES
# ==============================================================================

# ------------------------------------------------------------------------------
# STANDARD PACKAGES
# ------------------------------------------------------------------------------
import json
import logging
import os
from dataclasses import dataclass
from typing import Optional, Sequence

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------
from src.formulas import MIN_H_EDGES, OFFSETS, FormulaQuery, gm_formula, gr_formula, is_vacuous
from src.host import HostKind
from src.patterns import PatternGraph, RainbowTarget, star
from src.search import gm_search

# ==============================================================================
# CONSTANTS
# ==============================================================================
TABLE_FAMILIES = {
    HostKind.COMPLETE: (
        (HostKind.COMPLETE, RainbowTarget.K13),
        (HostKind.COMPLETE, RainbowTarget.P4PLUS),
        (HostKind.COMPLETE, RainbowTarget.P4),
        (HostKind.COMPLETE, RainbowTarget.P5),
    ),
    HostKind.COMPLETE_BIPARTITE: (
        (HostKind.COMPLETE_BIPARTITE, RainbowTarget.K13),
        (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P4),
        (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P5),
    ),
}

DEFAULT_T_RANGES = {
    (HostKind.COMPLETE, RainbowTarget.K13): (4, 7),
    (HostKind.COMPLETE, RainbowTarget.P4PLUS): (5, 7),
    (HostKind.COMPLETE, RainbowTarget.P4): (4, 7),
    (HostKind.COMPLETE, RainbowTarget.P5): (5, 7),
    (HostKind.COMPLETE_BIPARTITE, RainbowTarget.K13): (3, 5),
    (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P4): (3, 5),
    (HostKind.COMPLETE_BIPARTITE, RainbowTarget.P5): (3, 5),
}


# ==============================================================================
# CLASSES
# ==============================================================================
@dataclass(frozen=True)
class TableCell:
    """
    One (setting, family, offset, t) cell of a result table.

    Attributes:
        setting (str): Host descriptor kind, "Kn" or "Knn".
        family (str): The rainbow target.
        offset (int): 0, -1 or -2.
        t (int): Host size.
        formula (int): Closed-form value.
        search (int): Exhaustive-search value.
        agree (bool): formula == search.
        published (Optional[int]): Printed value when it differs from the closed form used.
        vacuous (bool): No H satisfies the hypotheses; the formula was evaluated anyway.
        witness_file (Optional[str]): Where the witness coloring was written.
    """

    setting: str
    family: str
    offset: int
    t: int
    formula: int
    search: int
    agree: bool
    published: Optional[int] = None
    vacuous: bool = False
    witness_file: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "setting": self.setting,
            "family": self.family,
            "offset": self.offset,
            "t": self.t,
            "formula": self.formula,
            "search": self.search,
            "agree": self.agree,
            "published": self.published,
            "vacuous": self.vacuous,
            "witness_file": self.witness_file,
        }


@dataclass(frozen=True)
class VerificationReport:
    cells: tuple[TableCell, ...]

    @property
    def passed(self) -> bool:
        return all(cell.agree for cell in self.cells)

    def to_dict(self) -> dict:
        return {"cells": [cell.to_dict() for cell in self.cells], "passed": self.passed}


# ==============================================================================
# FUNCTIONS
# ==============================================================================
def conforming_h(offset: int) -> PatternGraph:
    """K_{1,j} with j the edge minimum of the offset: the smallest H every theorem accepts."""
    return star(MIN_H_EDGES[offset])


def verify_cell(
    setting: HostKind,
    target: RainbowTarget,
    t: int,
    offset: int,
    witness_dir: Optional[str] = None,
    threads: int = 1,
) -> TableCell:
    """Evaluate one table cell by closed form and by search.

    Raises:
        HypothesisError: The cell is outside the theorem's range (and not vacuous).
        GuardExceededError: The search is too large.
    """
    h = conforming_h(offset)
    query = FormulaQuery.from_t(setting, target, t, offset, h)
    vacuous = is_vacuous(setting, target, query.k, offset)
    formula = gm_formula(query, strict=not vacuous)
    n = gr_formula(query, strict=not vacuous).value

    report = gm_search(target.pattern(), h, query.colors, setting, n, threads=threads)

    witness_file = None
    if witness_dir is not None:
        os.makedirs(witness_dir, exist_ok=True)
        witness_file = os.path.join(witness_dir, f"{setting.value}_{target.value}_{offset}_{t}.json")
        with open(witness_file, "w") as file:
            json.dump(report.witness.to_dict(), file, sort_keys=True)
            file.write("\n")

    cell = TableCell(
        setting=setting.value,
        family=target.value,
        offset=offset,
        t=t,
        formula=formula.value,
        search=report.value,
        agree=formula.value == report.value,
        published=formula.published,
        vacuous=vacuous,
        witness_file=witness_file,
    )
    if not cell.agree:
        logging.warning(f"{setting.value} {target.value} offset {offset} t={t}: formula {cell.formula} != search {cell.search}")
    return cell


def verify_tables(
    t_ranges: Optional[dict] = None,
    settings: Sequence[HostKind] = (HostKind.COMPLETE, HostKind.COMPLETE_BIPARTITE),
    offsets: Sequence[int] = OFFSETS,
    witness_dir: Optional[str] = None,
    threads: int = 1,
) -> VerificationReport:
    """Compare closed form and search on every cell of the selected tables.

    Args:
        t_ranges (Optional[dict]): (HostKind, RainbowTarget) -> (t_min, t_max); missing
            families use DEFAULT_T_RANGES.
        settings (Sequence[HostKind]): Which hosts to rebuild.
        offsets (Sequence[int]): Which offsets.
        witness_dir (Optional[str]): Write every witness coloring there.
        threads (int): Worker processes for the searches.

    Returns:
        VerificationReport: One cell per (setting, family, offset, t), in table order.
    """
    ranges = dict(DEFAULT_T_RANGES)
    ranges.update(t_ranges or {})

    cells = []
    for host_kind in settings:
        for setting, target in TABLE_FAMILIES[host_kind]:
            low, high = ranges[(setting, target)]
            for offset in offsets:
                for t in range(low, high + 1):
                    cells.append(verify_cell(setting, target, t, offset, witness_dir, threads))
                    logging.info(f"{setting.value} {target.value} offset {offset} t={t}: {cells[-1].search}")
    return VerificationReport(tuple(cells))
