"""
Command-line front door: parses the inputs, dispatches to the engine and emits the
report as JSON, CSV or a padded table

File: cli.py
Author: @cvlt
Date: 2024-11-16
Copyright: 2024, 2BiTS Srl., All rights reserved.

No part of this document must be reproduced in any form - including copied,
transcribed, printed, or by any electronic means - without specific written
permission from 2BiTS Srl.

Colors in coloring files are 1-based ({1..k}); edge ids are 0-based in the host's edge
order (lexicographic pairs for K_n, u-major for K_{n,n}). Exit codes: 0 on success,
2 on invalid input or failed hypotheses, 1 on internal errors.
"""

# ==============================================================================
# PACKAGES
# ==============================================================================

# ------------------------------------------------------------------------------
# STANDARD PACKAGES
# ------------------------------------------------------------------------------
import argparse
import dataclasses
import json
import logging
import os
import sys
from datetime import datetime
from typing import Optional, Sequence

# ------------------------------------------------------------------------------
# THIRD-PARTY PACKAGES
# ------------------------------------------------------------------------------

# ------------------------------------------------------------------------------
# PROJECT PACKAGES
# ------------------------------------------------------------------------------
from src.colorings import enumerate_exact_colorings
from src.counting import count_colored, count_containing, count_containing_oracle, fox_count, num_closed_form
from src.errors import GallaiError, UnsupportedCaseError, ValidationError
from src.formulas import OFFSETS, FormulaQuery, gm_formula, gr_formula
from src.host import HostGraph, HostKind
from src.parser import (
    load_coloring,
    load_structure,
    parse_edges,
    parse_host,
    parse_n_range,
    parse_pattern,
    parse_profile,
    parse_setting,
)
from src.patterns import PatternGraph, RainbowTarget, aut_order, enumerate_copies, recognize
from src.report import FORMATS, emit_report, write_output
from src.search import gm_search, gr_search, rainbow_threshold_check
from src.settings import Settings
from src.structures import classify_structure, generate_structure
from src.tables import verify_tables

# ==============================================================================
# CONSTANTS
# ==============================================================================
DEFAULT_CONFIG = "config/app.json"

LOG_FORMAT = "%(asctime)s.%(msecs)03d %(module)-17s %(funcName)-21s %(levelname)-8s %(message)s"
LOG_DATEFMT = "%y-%m-%d,%H:%M:%S"

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2


# ==============================================================================
# FUNCTIONS
# ==============================================================================
def log_setup(level: str = "WARNING", log_file: bool = False) -> None:
    """Set up the logging system: stderr always, a timestamped file under logs/ on request."""
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        os.makedirs("logs", exist_ok=True)
        now = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
        handlers.append(logging.FileHandler(f"logs/{now}.log"))

    logging.basicConfig(level=level, format=LOG_FORMAT, datefmt=LOG_DATEFMT, handlers=handlers)
    logging.getLogger().setLevel(level)

    logging.debug("Logging system set up.")


def load_config_json(path: str) -> dict:
    """Load the configuration file from path.

    Args:
        path (str): The path to the configuration file.

    Returns:
        dict: A dictionary containing the configuration.

    Raises:
        FileNotFoundError: If the file is not found in the given path.
    """
    if not os.path.exists(path):
        logging.error(f"File not found in path: {path}")
        raise FileNotFoundError(f"File not found in path: {path}")

    with open(path, "r") as file:
        # Catch a JSONDecodeError if the file is not a valid JSON
        try:
            config = json.load(file)
            logging.debug(config)
            return config
        except json.JSONDecodeError as e:
            logging.exception(f"Exception loading JSON Config {e}")
            raise


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subcommand per engine operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help=f"Config file path (default: {DEFAULT_CONFIG})")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Raise log verbosity (-v info, -vv debug)")
    common.add_argument("--format", choices=FORMATS, default="json", help="Report format (default: json)")
    common.add_argument("--out", type=str, default=None, help="Write the report to a file instead of stdout")
    common.add_argument("--threads", type=int, default=None, help="Worker processes for searches")

    parser = argparse.ArgumentParser(
        prog="gallairamsey",
        description="Gallai-Ramsey multiplicity workbench. Colors are 1-based, edge ids 0-based.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("count-copies", parents=[common], help="Copies of a pattern in a host")
    sub.add_argument("--host", required=True, help="Kn:<n> or Knn:<n>")
    sub.add_argument("--pattern", required=True, help="Builtin name or pattern JSON file")

    sub = commands.add_parser("count-containing", parents=[common], help="Copies containing two given edges")
    sub.add_argument("--host", required=True)
    sub.add_argument("--pattern", required=True)
    sub.add_argument("--edges", required=True, help="Two 0-based edge ids, i,j")

    sub = commands.add_parser("count-colored", parents=[common], help="Rainbow / mono / other copies under a coloring")
    sub.add_argument("--host", required=True)
    sub.add_argument("--coloring", required=True, help="Coloring JSON file")
    sub.add_argument("--pattern", required=True)

    sub = commands.add_parser("classify", parents=[common], help="Recognize the colored structure of a coloring")
    sub.add_argument("--coloring", required=True)
    sub.add_argument("--pattern", default=None, help="Attach a rainbow copy of it when nothing matches")

    sub = commands.add_parser("generate-structure", parents=[common], help="Build the coloring of a structure spec")
    sub.add_argument("--structure", required=True, help="Structure spec JSON file")

    sub = commands.add_parser("enumerate", parents=[common], help="Canonical exact k-coloring classes")
    sub.add_argument("--host", required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--profile", default=None, help="Class sizes, e.g. 2,2 or {3,1,1}")

    sub = commands.add_parser("gr", parents=[common], help="Bounded search for gr_k(G:H)")
    sub.add_argument("--pattern", required=True, help="The rainbow graph G")
    sub.add_argument("--H", dest="h", required=True, help="The monochromatic graph H")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--setting", default="complete", help="complete or bipartite")
    sub.add_argument("--n-range", required=True, help="a..b")

    sub = commands.add_parser("gm", parents=[common], help="Exhaustive search for GM_k(G:H)")
    sub.add_argument("--host", required=True)
    sub.add_argument("--pattern", required=True)
    sub.add_argument("--H", dest="h", required=True)
    sub.add_argument("--k", type=int, required=True, help="Number of colors")
    sub.add_argument("--profile", default=None)

    sub = commands.add_parser("formula", parents=[common], help="Closed-form gr / GM value")
    sub.add_argument("--setting", default="complete")
    sub.add_argument("--pattern", required=True, help="P4, P5, K13 or P4plus")
    sub.add_argument("--H", dest="h", default=None)
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--t", type=int, help="Base k is C(t,2) or t^2")
    group.add_argument("--k", type=int, help="Base k given directly")
    sub.add_argument("--offset", type=int, choices=OFFSETS, default=0)
    sub.add_argument("--quantity", choices=("gm", "gr"), default="gm")

    sub = commands.add_parser("verify-tables", parents=[common], help="Closed form against search, cell by cell")
    sub.add_argument("--setting", default="both", help="complete, bipartite or both")
    sub.add_argument("--offset", type=int, choices=OFFSETS, default=None, help="Only this offset")
    sub.add_argument("--witness-dir", default=None, help="Write each witness coloring there")

    sub = commands.add_parser("threshold", parents=[common], help="All-rainbow threshold over k")
    sub.add_argument("--host", required=True)
    sub.add_argument("--pattern", required=True)

    return parser


def _load_settings(path: Optional[str]) -> Settings:
    """Settings from the config file; a missing default file means all defaults.

    Raises:
        ValidationError: Unreadable or invalid configuration.
    """
    if path is None and not os.path.exists(DEFAULT_CONFIG):
        return Settings()
    try:
        return Settings(load_config_json(path or DEFAULT_CONFIG))
    except (FileNotFoundError, json.JSONDecodeError, ValueError, AttributeError) as e:
        raise ValidationError(f"invalid configuration: {e}") from e


def _verbosity(level: str, verbose: int) -> str:
    match verbose:
        case 0:
            return level
        case 1:
            return "INFO" if level in ("WARNING", "ERROR", "CRITICAL") else level
        case _:
            return "DEBUG"


def _threads(args: argparse.Namespace, settings: Settings) -> int:
    threads = args.threads if args.threads is not None else settings.threads
    if threads < 1:
        raise ValidationError(f"--threads must be >= 1, got {threads}")
    return threads


def _target(pattern: str) -> RainbowTarget:
    return RainbowTarget.parse(pattern)


def _count_copies(host: HostGraph, p: PatternGraph) -> dict:
    report = {
        "host": host.descriptor,
        "pattern": str(p),
        "copies": len(enumerate_copies(host, p)),
        "aut_order": aut_order(p),
        "fox": fox_count(host.n, p) if not host.is_bipartite else None,
    }
    name = recognize(p, [target.value for target in RainbowTarget])
    if name is not None:
        try:
            report["closed_form"] = num_closed_form(host.kind, RainbowTarget.parse(name), host.n)
        except UnsupportedCaseError:
            pass
    return report


def _count_containing(host: HostGraph, p: PatternGraph, edges: tuple[int, int]) -> dict:
    e1, e2 = edges
    try:
        count, method = count_containing(host, p, e1, e2), "lemma"
    except UnsupportedCaseError as e:
        logging.info(f"{e}; counting by enumeration")
        count, method = count_containing_oracle(host, p, edges), "oracle"
    return {
        "host": host.descriptor,
        "pattern": str(p),
        "edges": [e1, e2],
        "adjacent": host.edges_adjacent(e1, e2),
        "count": count,
        "method": method,
    }


def _enumerate(host: HostGraph, k: int, profile_text: Optional[str]) -> dict:
    profile = parse_profile(profile_text, host.m, k) if profile_text is not None else None
    classes = [
        {"colors": list(item.coloring.colors), "orbit_size": item.orbit_size}
        for item in enumerate_exact_colorings(host, k, profile)
    ]
    return {
        "host": host.descriptor,
        "k": k,
        "profile": str(profile) if profile is not None else None,
        "classes": classes,
        "orbit_total": sum(item["orbit_size"] for item in classes),
    }


def _formula_agreement(host: HostGraph, g: PatternGraph, h: PatternGraph, k: int, value: int) -> Optional[bool]:
    """Compare a search value with the closed form whose cell it lands on, if any."""
    name = recognize(g, [target.value for target in RainbowTarget])
    if name is None:
        return None
    for offset in OFFSETS:
        try:
            query = FormulaQuery(host.kind, RainbowTarget.parse(name), k - offset, offset, h)
            if gr_formula(query).value != host.n:
                continue
            return gm_formula(query).value == value
        except GallaiError:
            continue
    return None


def _formula(args: argparse.Namespace) -> dict:
    setting = parse_setting(args.setting)
    target = _target(args.pattern)
    h = parse_pattern(args.h) if args.h is not None else None
    if args.t is not None:
        query = FormulaQuery.from_t(setting, target, args.t, args.offset, h)
    else:
        query = FormulaQuery(setting, target, args.k, args.offset, h)

    result = gm_formula(query) if args.quantity == "gm" else gr_formula(query)
    return {
        "quantity": args.quantity,
        "setting": setting.value,
        "pattern": target.value,
        "H": str(h) if h is not None else None,
        "k": query.k,
        "offset": query.offset,
        "colors": query.colors,
        **result.to_dict(),
    }


def _verify_settings(text: str) -> tuple[HostKind, ...]:
    if text.strip().lower() == "both":
        return (HostKind.COMPLETE, HostKind.COMPLETE_BIPARTITE)
    return (parse_setting(text),)


def dispatch(args: argparse.Namespace, settings: Settings):
    """Run the engine operation args.command names and return its report.

    Raises:
        GallaiError: Invalid input, failed hypotheses or a guard.
    """
    match args.command:
        case "count-copies":
            return _count_copies(parse_host(args.host), parse_pattern(args.pattern))
        case "count-containing":
            return _count_containing(parse_host(args.host), parse_pattern(args.pattern), parse_edges(args.edges))
        case "count-colored":
            host = parse_host(args.host)
            return count_colored(host, load_coloring(args.coloring), parse_pattern(args.pattern))
        case "classify":
            pattern = parse_pattern(args.pattern) if args.pattern is not None else None
            return classify_structure(load_coloring(args.coloring), pattern)
        case "generate-structure":
            return generate_structure(load_structure(args.structure))
        case "enumerate":
            return _enumerate(parse_host(args.host), args.k, args.profile)
        case "gr":
            return gr_search(
                parse_pattern(args.pattern),
                parse_pattern(args.h),
                args.k,
                parse_setting(args.setting),
                parse_n_range(args.n_range),
                threads=_threads(args, settings),
            )
        case "gm":
            host = parse_host(args.host)
            g, h = parse_pattern(args.pattern), parse_pattern(args.h)
            profile = parse_profile(args.profile, host.m, args.k) if args.profile is not None else None
            report = gm_search(g, h, args.k, host.kind, host.n, profile, threads=_threads(args, settings))
            if profile is not None:
                return report
            return dataclasses.replace(report, formula_agreement=_formula_agreement(host, g, h, args.k, report.value))
        case "formula":
            return _formula(args)
        case "verify-tables":
            return verify_tables(
                t_ranges=settings.t_ranges,
                settings=_verify_settings(args.setting),
                offsets=OFFSETS if args.offset is None else (args.offset,),
                witness_dir=args.witness_dir,
                threads=_threads(args, settings),
            )
        case "threshold":
            host = parse_host(args.host)
            return rainbow_threshold_check(host.kind, host.n, parse_pattern(args.pattern), threads=_threads(args, settings))
    raise ValidationError(f"unknown command '{args.command}'")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run the command and emit its report.

    Returns:
        int: The exit code, 0 on success, 2 on invalid input or failed hypotheses,
            1 on internal errors.
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID

    try:
        settings = _load_settings(args.config)
        log_setup(_verbosity(settings.log_level, args.verbose), settings.log_file)
        report = dispatch(args, settings)
        write_output(emit_report(report, args.format), args.out)
    except GallaiError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INVALID
    except Exception as e:
        logging.exception(f"Unexpected error running {args.command}: {e}")
        return EXIT_INTERNAL

    return EXIT_OK


# ==============================================================================
# MAIN
# ==============================================================================
def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
