"""
Exception hierarchy shared by every engine module

File: errors.py
Author: @cvlt
Date: 2024-11-04
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
from typing import Optional, Sequence

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------


# ==============================================================================
# CLASSES
# ==============================================================================
class GallaiError(Exception):
    """
    Base class of every error the engine raises on purpose.

    The CLI maps any GallaiError to exit code 2; anything else is an internal error.
    """


class ValidationError(GallaiError, ValueError):
    """
    Malformed descriptor, coloring, pattern or structure specification.
    """


class GuardExceededError(GallaiError):
    """
    A size guard refused to materialize or enumerate something.

    Attributes:
        guard (str): Name of the guard that tripped.
        size (int): The limiting size that was requested.
        limit (int): The largest size the guard accepts.
    """

    def __init__(self, guard: str, size: int, limit: int):
        self.guard = guard
        self.size = size
        self.limit = limit
        super().__init__(f"guard '{guard}' exceeded: size {size} > limit {limit}")


class PatternHostMismatchError(GallaiError):
    """
    A pattern cannot live in the requested host (e.g. an odd cycle in K_{n,n}).
    """


class UnsupportedCaseError(GallaiError):
    """
    No lemma or formula covers the requested (host, pattern, offset) combination.
    """


class UnboundedHypothesisError(UnsupportedCaseError):
    """
    The theorem for this rainbow target puts no subgraph bound on H.
    """


class HypothesisError(GallaiError):
    """
    The hypotheses of a theorem do not hold for the query.

    Attributes:
        failed (list[str]): Human readable description of every failed condition.
    """

    def __init__(self, message: str, failed: Optional[Sequence[str]] = None):
        self.failed = list(failed or [])
        details = "; ".join(self.failed)
        super().__init__(f"{message}: {details}" if details else message)
