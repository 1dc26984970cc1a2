"""
Deterministic report emitters: JSON with sorted keys, CSV with fixed columns and
padded plain-text tables

File: report.py
Author: @cvlt
Date: 2024-11-15
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
import csv
import io
import json
import logging
import os
import sys
from typing import Any, Optional

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------
from src.errors import ValidationError
from src.search import GrSearchReport, ThresholdReport
from src.tables import TableCell, VerificationReport

# ==============================================================================
# CONSTANTS
# ==============================================================================
FORMATS = ("json", "csv", "table")

VERIFY_COLUMNS = ["family", "offset", "t", "formula", "search", "agree"]
GR_COLUMNS = ["n", "verdict", "classes_examined"]
THRESHOLD_COLUMNS = ["k", "all_rainbow", "classes_examined"]

TABLE_TITLES = {"Kn": "GM_k(G:H) on K_t", "Knn": "bi-GM_k(G:H) on K_{t,t}"}


# ==============================================================================
# FUNCTIONS
# ==============================================================================
def as_data(report: Any) -> Any:
    """The JSON-ready form of a report object, dict or list."""
    if hasattr(report, "to_dict"):
        return report.to_dict()
    if isinstance(report, (list, tuple)):
        return [as_data(item) for item in report]
    return report


def _csv_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def _csv_layout(report: Any) -> tuple[list[str], list[dict]]:
    if isinstance(report, VerificationReport):
        return VERIFY_COLUMNS, [cell.to_dict() for cell in report.cells]
    if isinstance(report, GrSearchReport):
        return GR_COLUMNS, [row.to_dict() for row in report.rows]
    if isinstance(report, ThresholdReport):
        return THRESHOLD_COLUMNS, [row.to_dict() for row in report.rows]

    data = as_data(report)
    if isinstance(data, list):
        columns = sorted({key for row in data for key in row}) if data else []
        return columns, data
    return sorted(data), [data]


def to_csv(report: Any) -> str:
    columns, rows = _csv_layout(report)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({column: _csv_value(row.get(column)) for column in columns})
    return buffer.getvalue()


def _pad(rows: list[list[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows) + "\n"


def _cell_text(cell: TableCell) -> str:
    text = str(cell.search) if cell.agree else f"{cell.formula}!={cell.search}"
    if cell.published is not None:
        text += "*"
    if cell.vacuous:
        text += "v"
    return text


def _verification_table(report: VerificationReport) -> str:
    blocks = []
    for setting in sorted({cell.setting for cell in report.cells}):
        cells = [cell for cell in report.cells if cell.setting == setting]
        ts = sorted({cell.t for cell in cells})
        rows = [["G", "offset"] + [f"t={t}" for t in ts]]
        keys = []
        for cell in cells:
            if (cell.family, cell.offset) not in keys:
                keys.append((cell.family, cell.offset))
        for family, offset in keys:
            by_t = {cell.t: cell for cell in cells if cell.family == family and cell.offset == offset}
            rows.append([family, str(offset)] + [_cell_text(by_t[t]) if t in by_t else "-" for t in ts])
        blocks.append(TABLE_TITLES[setting] + "\n" + _pad(rows))

    notes = "* printed value differs, see JSON 'published'\nv hypotheses vacuous, evaluated without them\n"
    status = "PASS" if report.passed else "FAIL"
    return "\n".join(blocks) + notes + f"overall: {status}\n"


def _flatten(prefix: str, value: Any, rows: list[list[str]]) -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(f"{prefix}.{key}" if prefix else str(key), value[key], rows)
    else:
        rows.append([prefix, _csv_value(value)])


def to_table(report: Any) -> str:
    if isinstance(report, VerificationReport):
        return _verification_table(report)
    columns, data = _csv_layout(report)
    if isinstance(report, (GrSearchReport, ThresholdReport)) or isinstance(as_data(report), list):
        return _pad([columns] + [[_csv_value(row.get(column)) for column in columns] for row in data])
    rows: list[list[str]] = []
    _flatten("", as_data(report), rows)
    return _pad(rows)


def emit_report(report: Any, fmt: str) -> str:
    """Render a report as json, csv or table text.

    Raises:
        ValidationError: Unknown format.
    """
    match fmt:
        case "json":
            return json.dumps(as_data(report), sort_keys=True, indent=2) + "\n"
        case "csv":
            return to_csv(report)
        case "table":
            return to_table(report)
    raise ValidationError(f"unknown format '{fmt}' (expected one of {', '.join(FORMATS)})")


def write_output(text: str, out: Optional[str] = None) -> None:
    """Write to the given path, or to stdout.

    Raises:
        ValidationError: The path cannot be written.
    """
    if out is None:
        sys.stdout.write(text)
        return
    try:
        directory = os.path.dirname(out)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(out, "w", newline="") as file:
            file.write(text)
    except OSError as e:
        logging.error(f"Cannot write report to {out}: {e}")
        raise ValidationError(f"cannot write output '{out}': {e}") from e
    logging.info(f"Report written to {out}")
