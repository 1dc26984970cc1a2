"""
Application settings read from config/app.json

File: settings.py
Author: @cvlt
Date: 2024-11-16
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
from typing import Optional

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------
from src.host import HostKind
from src.patterns import RainbowTarget
from src.tables import DEFAULT_T_RANGES, TABLE_FAMILIES

# ==============================================================================
# CONSTANTS
# ==============================================================================
DEFAULT_LOG_LEVEL = "INFO"
DEFAULT_LOG_FILE = False
DEFAULT_THREADS = 1

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
MAX_THREADS = 64

SETTING_NAMES = {"complete": HostKind.COMPLETE, "bipartite": HostKind.COMPLETE_BIPARTITE}


# ==============================================================================
# CLASSES
# ==============================================================================
class Settings:
    """
    Validated view of the configuration dictionary.

    Attributes:
        log_level (str): Name of the root logging level.
        log_file (bool): Also log to a timestamped file under logs/.
        threads (int): Default number of worker processes.
        t_ranges (dict): (HostKind, RainbowTarget) -> (t_min, t_max) for verify-tables.
    """

    def __init__(self, config: Optional[dict] = None):
        """
        Initializes the Settings from the given configuration.

        Args:
            config (Optional[dict]): The parsed config/app.json, None for all defaults.
        """
        self.log_level = DEFAULT_LOG_LEVEL
        self.log_file = DEFAULT_LOG_FILE
        self.threads = DEFAULT_THREADS
        self.t_ranges = dict(DEFAULT_T_RANGES)

        self.configure(config or {})

    def configure(self, config: dict) -> None:
        """Apply every section of the configuration.

        Args:
            config (dict): A dictionary with the optional sections logging, engine and tables.

        Raises:
            ValueError: If a value is out of range or of the wrong type.
        """
        logging_config = config.get("logging", {})
        engine_config = config.get("engine", {})

        try:
            self._set_log_level(logging_config.get("level", DEFAULT_LOG_LEVEL))
            self._set_log_file(logging_config.get("file", DEFAULT_LOG_FILE))
            self._set_threads(engine_config.get("threads", DEFAULT_THREADS))
            self._set_t_ranges(config.get("tables", {}))
        except ValueError as e:
            logging.error(f"Configuration error: {e}")
            raise

        logging.debug("Settings configured successfully.")

    def _set_log_level(self, level: str) -> None:
        """Set the logging level name.

        Args:
            level (str): One of LOG_LEVELS, case-insensitive.

        Raises:
            ValueError: If the level is unknown.
        """
        if not isinstance(level, str) or level.upper() not in LOG_LEVELS:
            raise ValueError(f"Invalid log level: {level}. Must be one of {', '.join(LOG_LEVELS)}.")

        self.log_level = level.upper()

    def _set_log_file(self, enabled: bool) -> None:
        if not isinstance(enabled, bool):
            raise ValueError(f"Invalid log file flag: {enabled}. Must be true or false.")

        self.log_file = enabled

    def _set_threads(self, threads: int) -> None:
        """Set the default worker count.

        Args:
            threads (int): Between 1 and MAX_THREADS.

        Raises:
            ValueError: If threads is not an integer in range.
        """
        if isinstance(threads, bool) or not isinstance(threads, int) or not 1 <= threads <= MAX_THREADS:
            raise ValueError(f"Invalid threads: {threads}. Must be an integer in 1..{MAX_THREADS}.")

        logging.debug(f"- Threads[{threads}]")

        self.threads = threads

    def _set_t_ranges(self, tables: dict) -> None:
        """Override the verify-tables t range of single families.

        Args:
            tables (dict): {"complete"|"bipartite": {family: [t_min, t_max]}}.

        Raises:
            ValueError: Unknown setting or family, or a malformed range.
        """
        if not isinstance(tables, dict):
            raise ValueError(f"Invalid tables section: {tables}. Must be an object.")

        for setting_name, families in tables.items():
            if setting_name not in SETTING_NAMES:
                raise ValueError(f"Invalid tables setting: {setting_name}. Must be complete or bipartite.")
            if not isinstance(families, dict):
                raise ValueError(f"Invalid tables.{setting_name} section: {families}. Must be an object.")
            setting = SETTING_NAMES[setting_name]
            known = {target for _, target in TABLE_FAMILIES[setting]}

            for family, bounds in families.items():
                try:
                    target = RainbowTarget.parse(family)
                except ValueError:
                    raise ValueError(f"Invalid tables family: {family}.") from None
                if target not in known:
                    raise ValueError(f"Family {family} has no {setting_name} table.")
                if (
                    not isinstance(bounds, list)
                    or len(bounds) != 2
                    or not all(isinstance(b, int) and not isinstance(b, bool) for b in bounds)
                    or bounds[0] > bounds[1]
                ):
                    raise ValueError(f"Invalid t range for {setting_name} {family}: {bounds}. Must be [t_min, t_max].")

                logging.debug(f"- Range[{setting_name} {family} {bounds[0]}..{bounds[1]}]")
                self.t_ranges[(setting, target)] = (bounds[0], bounds[1])
