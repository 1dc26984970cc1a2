"""
Exhaustive searches over canonical exact colorings: bounded gr / bgr verification,
GM / bi-GM minimisation and the guaranteed-rainbow thresholds

File: search.py
Author: @cvlt
Date: 2024-11-13
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
from dataclasses import dataclass
from enum import Enum
from multiprocessing import Pool
from typing import Callable, Iterable, Optional

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------
from src.colorings import ColorClassProfile, EdgeColoring, enumerate_exact_colorings
from src.counting import count_colored, has_rainbow, rainbow_and_mono
from src.errors import ValidationError
from src.host import HostGraph, HostKind
from src.patterns import PatternGraph
from src.structures import StructureSpec, generate_structure

# ==============================================================================
# CONSTANTS
# ==============================================================================
BOUNDED_LABEL = "bounded verification"


# ==============================================================================
# Enumeratives
# ==============================================================================
class Verdict(Enum):
    GOOD = "good"
    BAD = "bad"
    INFEASIBLE = "infeasible"


# ==============================================================================
# CLASSES
# ==============================================================================
@dataclass(frozen=True)
class ClassRecord:
    coloring: EdgeColoring
    orbit_size: int
    rainbow: int
    mono: int

    @property
    def total(self) -> int:
        return self.rainbow + self.mono

    def to_dict(self) -> dict:
        return {
            "colors": list(self.coloring.colors),
            "orbit_size": self.orbit_size,
            "rainbow": self.rainbow,
            "mono": self.mono,
            "total": self.total,
        }


@dataclass(frozen=True)
class SearchReport:
    """
    Result of a GM search.

    Attributes:
        value (int): Minimum of rainbow G + monochromatic H over all classes.
        witness (EdgeColoring): The attaining class representative (least colors on ties).
        rainbow (int): Rainbow G copies under the witness.
        mono (int): Monochromatic H copies under the witness.
        classes_examined (int): Number of canonical classes evaluated.
        per_class (Optional[tuple[ClassRecord, ...]]): Every class, when requested.
        formula_agreement (Optional[bool]): Set by callers comparing with a closed form.
    """

    value: int
    witness: EdgeColoring
    rainbow: int
    mono: int
    classes_examined: int
    per_class: Optional[tuple[ClassRecord, ...]] = None
    formula_agreement: Optional[bool] = None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "witness": self.witness.to_dict(),
            "rainbow": self.rainbow,
            "mono": self.mono,
            "classes_examined": self.classes_examined,
            "per_class": [record.to_dict() for record in self.per_class] if self.per_class is not None else None,
            "formula_agreement": self.formula_agreement,
        }


@dataclass(frozen=True)
class GrRow:
    n: int
    verdict: Verdict
    classes_examined: int
    witness: Optional[EdgeColoring] = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "verdict": self.verdict.value,
            "classes_examined": self.classes_examined,
            "witness": self.witness.to_dict() if self.witness is not None else None,
        }


@dataclass(frozen=True)
class GrSearchReport:
    """
    Per-n verdicts of a gr search.

    least_good is the least N such that every n in [N, n_max] is Good. It says nothing
    about n > n_max.
    """

    g: str
    h: str
    k: int
    setting: HostKind
    rows: tuple[GrRow, ...]
    least_good: Optional[int]
    label: str = BOUNDED_LABEL

    def to_dict(self) -> dict:
        return {
            "G": self.g,
            "H": self.h,
            "k": self.k,
            "setting": self.setting.name.lower(),
            "rows": [row.to_dict() for row in self.rows],
            "least_good": self.least_good,
            "label": self.label,
        }


@dataclass(frozen=True)
class ThresholdRow:
    k: int
    all_rainbow: bool
    classes_examined: int
    witness: Optional[EdgeColoring] = None

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "all_rainbow": self.all_rainbow,
            "classes_examined": self.classes_examined,
            "witness": self.witness.to_dict() if self.witness is not None else None,
        }


@dataclass(frozen=True)
class ThresholdReport:
    """
    For each k in 2..m, whether every exact k-coloring has a rainbow copy.

    threshold is the least k from which every row is all-rainbow; sharpness is a coloring
    at threshold - 1 without a rainbow copy.
    """

    host: HostGraph
    pattern: str
    rows: tuple[ThresholdRow, ...]
    threshold: Optional[int]
    sharpness: Optional[EdgeColoring]

    def to_dict(self) -> dict:
        return {
            "host": self.host.descriptor,
            "pattern": self.pattern,
            "rows": [row.to_dict() for row in self.rows],
            "threshold": self.threshold,
            "sharpness": self.sharpness.to_dict() if self.sharpness is not None else None,
        }


# ==============================================================================
# FUNCTIONS
# ==============================================================================
def apply_pool(func: Callable, arguments: Iterable[tuple], threads: int = 1) -> list:
    """Apply func to every argument tuple, over a process pool when threads > 1."""
    arguments = list(arguments)
    if threads <= 1 or len(arguments) <= 1:
        return [func(*args) for args in arguments]
    with Pool(processes=threads) as pool:
        return pool.starmap(func, arguments)


def _shards(threads: int) -> list[Optional[tuple[int, int]]]:
    if threads < 1:
        raise ValidationError(f"threads must be >= 1, got {threads}")
    return [None] if threads == 1 else [(index, threads) for index in range(threads)]


def _evaluate_shard(
    host: HostGraph,
    k: int,
    g: PatternGraph,
    h: PatternGraph,
    profile: Optional[ColorClassProfile],
    shard: Optional[tuple[int, int]],
) -> list[ClassRecord]:
    records = []
    for coloring, orbit_size in enumerate_exact_colorings(host, k, profile, shard):
        rainbow, mono = rainbow_and_mono(host, coloring, g, h)
        records.append(ClassRecord(coloring, orbit_size, rainbow, mono))
    return records


def _check_free_shard(
    host: HostGraph, k: int, g: PatternGraph, h: Optional[PatternGraph], shard: Optional[tuple[int, int]]
) -> tuple[int, Optional[EdgeColoring]]:
    """Classes examined and the least class with neither rainbow g nor monochromatic h (if given)."""
    examined, bad = 0, None
    for coloring, _ in enumerate_exact_colorings(host, k, None, shard):
        examined += 1
        if has_rainbow(host, coloring, g):
            continue
        if h is not None and count_colored(host, coloring, h).mono_total > 0:
            continue
        if bad is None or coloring.colors < bad.colors:
            bad = coloring
    return examined, bad


def gm_search(
    g: PatternGraph,
    h: PatternGraph,
    k: int,
    setting: HostKind,
    n: int,
    profile: Optional[ColorClassProfile] = None,
    threads: int = 1,
    keep_classes: bool = False,
) -> SearchReport:
    """Minimum over exact k-colorings of the host of (rainbow g copies + monochromatic h copies).

    Args:
        g (PatternGraph): Rainbow target.
        h (PatternGraph): Monochromatic target.
        k (int): Number of colors.
        setting (HostKind): Host family.
        n (int): Host size, normally gr_k(g:h).
        profile (Optional[ColorClassProfile]): Restrict to one class-size profile.
        threads (int): Worker processes.
        keep_classes (bool): Attach the per-class records to the report.

    Returns:
        SearchReport: The minimum with its witness; ties go to the least color sequence.

    Raises:
        GuardExceededError: The enumeration is too large.
        ValidationError: k infeasible or inconsistent profile.
    """
    host = HostGraph(setting, n)
    results = apply_pool(_evaluate_shard, [(host, k, g, h, profile, shard) for shard in _shards(threads)], threads)
    records = sorted((record for shard in results for record in shard), key=lambda r: r.coloring.colors)
    if not records:
        raise ValidationError(f"no exact {k}-coloring of {host}")

    best = min(records, key=lambda r: (r.total, r.coloring.colors))
    logging.info(f"GM search {g} / {h} on {host}, k={k}: {best.total} over {len(records)} classes")
    return SearchReport(
        value=best.total,
        witness=best.coloring,
        rainbow=best.rainbow,
        mono=best.mono,
        classes_examined=len(records),
        per_class=tuple(records) if keep_classes else None,
    )


def gr_search(
    g: PatternGraph, h: PatternGraph, k: int, setting: HostKind, n_range: tuple[int, int], threads: int = 1
) -> GrSearchReport:
    """Decide, for each host size in n_range, whether every exact k-coloring has a rainbow g
    or a monochromatic h.

    A host with fewer than k edges has no exact k-coloring and is reported infeasible,
    which counts as not Good.
    """
    low, high = n_range
    if low > high:
        raise ValidationError(f"empty n range {low}..{high}")

    rows = []
    for n in range(low, high + 1):
        host = HostGraph(setting, n)
        if host.m < k:
            rows.append(GrRow(n, Verdict.INFEASIBLE, 0))
            continue
        results = apply_pool(_check_free_shard, [(host, k, g, h, shard) for shard in _shards(threads)], threads)
        examined = sum(count for count, _ in results)
        bad = [coloring for _, coloring in results if coloring is not None]
        if bad:
            witness = min(bad, key=lambda c: c.colors)
            rows.append(GrRow(n, Verdict.BAD, examined, witness))
        else:
            rows.append(GrRow(n, Verdict.GOOD, examined))
        logging.info(f"gr search {g} / {h}, k={k}: {host} is {rows[-1].verdict.value}")

    least_good = None
    for row in reversed(rows):
        if row.verdict is not Verdict.GOOD:
            break
        least_good = row.n
    return GrSearchReport(str(g), str(h), k, setting, tuple(rows), least_good)


def _structure_witness(host: HostGraph, k: int, p: PatternGraph) -> Optional[EdgeColoring]:
    """A structured coloring with k colors and no rainbow p, where one is known."""
    n = host.n
    try:
        match (host.is_bipartite, p.name):
            case (False, "K13" | "P4plus" | "P5"):
                # V_1 = the rest, V_2..V_k pairs
                sizes = [n - 2 * (k - 1)] + [2] * (k - 1)
                spec = StructureSpec.from_sizes(1, sizes)
            case (True, "P4"):
                spec = StructureSpec.from_sizes(3, [1] * (k - 1) + [n - k + 1])
            case (True, "P5" | "K13"):
                spec = StructureSpec.from_sizes(5, [n - (k - 1)] + [1] * (k - 1), [n - (k - 1)] + [1] * (k - 1))
            case _:
                return None
        coloring = generate_structure(spec)
    except ValidationError:
        return None
    if coloring.k != k or has_rainbow(host, coloring, p):
        return None
    return coloring


def rainbow_threshold_check(setting: HostKind, n: int, p: PatternGraph, threads: int = 1) -> ThresholdReport:
    """For every k from 2 to m, check whether all exact k-colorings contain a rainbow p.

    The sharpness witness at threshold - 1 comes from a colored structure when one
    applies, otherwise from the search itself.
    """
    host = HostGraph(setting, n)
    rows = []
    for k in range(2, host.m + 1):
        results = apply_pool(_check_free_shard, [(host, k, p, None, shard) for shard in _shards(threads)], threads)
        examined = sum(count for count, _ in results)
        bad = [coloring for _, coloring in results if coloring is not None]
        witness = min(bad, key=lambda c: c.colors) if bad else None
        rows.append(ThresholdRow(k, witness is None, examined, witness))
        logging.info(f"threshold {p} on {host}: k={k} all rainbow = {witness is None}")

    threshold = None
    for row in reversed(rows):
        if not row.all_rainbow:
            break
        threshold = row.k

    sharpness = None
    if threshold is not None and threshold - 1 >= 2:
        sharpness = _structure_witness(host, threshold - 1, p) or rows[threshold - 3].witness
    return ThresholdReport(host, str(p), tuple(rows), threshold, sharpness)
