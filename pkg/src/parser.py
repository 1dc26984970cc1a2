"""
Parses the textual inputs of the command line: host descriptors, pattern names or files,
edge pairs, class profiles, n ranges and the coloring / structure JSON files

File: parser.py
Author: @cvlt
Date: 2024-10-04
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
import json
import logging
import os
import re
from typing import Any

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------
from src.colorings import ColorClassProfile, EdgeColoring
from src.errors import ValidationError
from src.host import HostGraph, HostKind
from src.patterns import PatternGraph, builtin_pattern
from src.structures import StructureSpec

# ==============================================================================
# CONSTANTS
# ==============================================================================
EDGE_PAIR = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*$")
N_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


# ==============================================================================
# FUNCTIONS
# ==============================================================================
def parse_host(text: str) -> HostGraph:
    return HostGraph.from_descriptor(text)


def parse_setting(text: str) -> HostKind:
    """Map "complete"/"Kn" and "bipartite"/"Knn" to a host kind.

    Raises:
        ValidationError: Any other text.
    """
    match text.strip().lower():
        case "complete" | "kn":
            return HostKind.COMPLETE
        case "bipartite" | "knn":
            return HostKind.COMPLETE_BIPARTITE
        case _:
            raise ValidationError(f"unknown setting '{text}' (expected complete or bipartite)")


def load_json_file(path: str, what: str) -> Any:
    """Read a JSON document.

    Args:
        path (str): The file to read.
        what (str): What the file holds, for the error message.

    Raises:
        ValidationError: Missing file or invalid JSON.
    """
    if not os.path.exists(path):
        logging.error(f"File not found in path: {path}")
        raise ValidationError(f"{what} file not found: {path}")

    with open(path, "r") as file:
        try:
            return json.load(file)
        except json.JSONDecodeError as e:
            logging.error(f"Invalid JSON in {path}: {e}")
            raise ValidationError(f"{what} file {path} is not valid JSON: {e}") from e


def _require_object(data: Any, what: str, path: str) -> dict:
    if not isinstance(data, dict):
        raise ValidationError(f"{what} file {path} must hold a JSON object")
    return data


def parse_pattern(text: str) -> PatternGraph:
    """A builtin pattern name, or the path of a pattern JSON file.

    Raises:
        ValidationError: Unknown name, unreadable file or invalid graph.
    """
    if text.lower().endswith(".json") or os.path.sep in text:
        data = _require_object(load_json_file(text, "pattern"), "pattern", text)
        return PatternGraph.from_dict(data)
    return builtin_pattern(text)


def load_coloring(path: str) -> EdgeColoring:
    data = _require_object(load_json_file(path, "coloring"), "coloring", path)
    return EdgeColoring.from_dict(data)


def load_structure(path: str) -> StructureSpec:
    data = _require_object(load_json_file(path, "structure"), "structure", path)
    return StructureSpec.from_dict(data)


def parse_edges(text: str) -> tuple[int, int]:
    """Parse "i,j" into two edge ids.

    Raises:
        ValidationError: Malformed text.
    """
    found = EDGE_PAIR.match(text)
    if found is None:
        raise ValidationError(f"malformed edge pair '{text}' (expected i,j)")
    return int(found.group(1)), int(found.group(2))


def parse_n_range(text: str) -> tuple[int, int]:
    """Parse "a..b" (inclusive) or a single "a".

    Raises:
        ValidationError: Malformed text or b < a.
    """
    found = N_RANGE.match(text)
    if found is None:
        raise ValidationError(f"malformed n range '{text}' (expected a..b)")
    low = int(found.group(1))
    high = int(found.group(2)) if found.group(2) is not None else low
    if high < low:
        raise ValidationError(f"empty n range '{text}'")
    return low, high


def parse_profile(text: str, m: int, k: int) -> ColorClassProfile:
    return ColorClassProfile.from_text(text, m, k)
