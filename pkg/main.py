#!/usr/bin/env python3
"""
Command line for the finite-space engine.

Every verb takes a space source: a JSON space file or a constructor expression
such as ``circle:3`` or ``join:discrete:2,discrete:3``.

Usage:
    python main.py build circle:3 -o circle3.json
    python main.py validate space.json
    python main.py tc circle:3 --limits visited=100000,seconds=60
    python main.py cat product:circle:3,circle:3
    python main.py certify tc-circle-3.json
    python main.py explore-circle 5
    python main.py export-dot sphere:2

Exit codes: 0 proven / valid, 1 invalid input, 2 upper bound only or
inconclusive, 3 certificate verification failed.
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

from config import settings
from finite_spaces.budget import Limits
from finite_spaces.certify import certify_document
from finite_spaces.documents import (
    complex_to_document,
    dumps,
    export_dot,
    parse_space,
    serialize_exploration,
    serialize_report,
    serialize_space,
)
from finite_spaces.errors import DocumentError, FiniteSpaceError
from finite_spaces.expressions import slug, space_from_expression, split_source
from finite_spaces.homology import betti, euler_characteristic, order_complex
from finite_spaces.homotopy import core_retraction
from finite_spaces.search import cat, explore_antidiagonal_cover, tc
from finite_spaces.space import FiniteSpace, validate
from shared.cli_config import (
    CONVENTION_REDUCED,
    EXIT_INCONCLUSIVE,
    EXIT_INVALID,
    EXIT_OK,
    REPORT_SUFFIX,
)

# Configure logging
logging.basicConfig(
    level=getattr(logging, settings.log_level.upper()),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

# Reduce third-party logging verbosity
logging.getLogger("sympy").setLevel(logging.WARNING)
logging.getLogger("networkx").setLevel(logging.WARNING)

VERBS = ["build", "validate", "cat", "tc", "core", "homology", "certify", "explore-circle", "export-dot"]


@dataclass
class Command:
    """One parsed invocation."""
    verb: str
    source: str
    output: Optional[str] = None
    limits: Optional[Limits] = None
    reduced: bool = False
    use_cat_bound: Optional[bool] = None

    def output_path(self, suffix: str = REPORT_SUFFIX) -> Path:
        if self.output:
            return Path(self.output)
        return Path(settings.output_dir) / f"{self.verb}-{slug(self.source)}{suffix}"


# =============================================================================
# ARGUMENTS
# =============================================================================

class CommandParser(argparse.ArgumentParser):
    """Usage errors become FiniteSpaceError, so they exit as invalid input."""

    def error(self, message: str):
        raise FiniteSpaceError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = CommandParser(
        prog="main.py",
        description="Exact homotopy invariants of finite T0 spaces",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    for verb in VERBS:
        sub = verbs.add_parser(verb)
        if verb == "certify":
            sub.add_argument("source", help="Report file to re-verify")
            continue
        if verb == "explore-circle":
            sub.add_argument("source", metavar="n", help="Circle model size, at least 5")
        else:
            sub.add_argument("source", help="Space file (.json) or constructor expression")
        sub.add_argument("-o", "--output", help="Where to write the artifact")
        if verb in ("cat", "tc", "explore-circle"):
            sub.add_argument(
                "--limits",
                help="Caps for this run, e.g. visited=200000,seconds=600",
            )
        if verb in ("cat", "tc"):
            sub.add_argument(
                "--reduced", action="store_true",
                help="Print values in the reduced convention (one less); files stay unreduced",
            )
        if verb == "tc":
            sub.add_argument(
                "--no-cat-bound", dest="use_cat_bound", action="store_false", default=None,
                help="Do not seed the search with the cat(X)^2 product covering",
            )
    return parser


def parse_command(argv: Optional[List[str]] = None) -> Command:
    args = build_parser().parse_args(argv)
    limits = Limits.parse(args.limits) if getattr(args, "limits", None) else None
    return Command(
        verb=args.verb,
        source=args.source,
        output=getattr(args, "output", None),
        limits=limits,
        reduced=getattr(args, "reduced", False),
        use_cat_bound=getattr(args, "use_cat_bound", None),
    )


# =============================================================================
# VERBS
# =============================================================================

def read_document(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise DocumentError(f"{path} is not UTF-8 text: byte {e.start} cannot be decoded") from None


def load_space(source: str) -> FiniteSpace:
    kind, value = split_source(source)
    if kind == "file":
        return parse_space(read_document(value))
    return space_from_expression(value)


def write_artifact(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"wrote {path}")


def run_search(command: Command) -> int:
    space = load_space(command.source)
    if command.verb == "cat":
        report = cat(space, command.limits)
    else:
        report = tc(space, command.limits, use_cat_bound=command.use_cat_bound)
    write_artifact(command.output_path(), serialize_report(report))
    if command.reduced:
        print(f"value={report.value - 1} status={report.status} convention={CONVENTION_REDUCED}")
    else:
        print(f"value={report.value} status={report.status}")
    return EXIT_OK if report.proven else EXIT_INCONCLUSIVE


def run_build(command: Command) -> int:
    space = load_space(command.source)
    write_artifact(command.output_path(), serialize_space(space))
    print(f"points={len(space)} kind={space.kind}")
    return EXIT_OK


def run_validate(command: Command) -> int:
    report = validate(load_space(command.source))
    for violation in report.violations:
        print(f"{violation.axiom}: {violation.detail}")
    print("valid" if report.ok else f"invalid ({len(report.violations)} violations)")
    return EXIT_OK if report.ok else EXIT_INVALID


def run_core(command: Command) -> int:
    retraction = core_retraction(load_space(command.source))
    write_artifact(command.output_path(), serialize_space(retraction.core))
    print(f"points={len(retraction.core)} removed={len(retraction.removals)} contractible={retraction.is_point}")
    return EXIT_OK


def run_homology(command: Command) -> int:
    space = load_space(command.source)
    complex_ = order_complex(space)
    write_artifact(command.output_path(), dumps(complex_to_document(space, complex_)))
    b0, b1 = betti(complex_)
    print(f"b0={b0} b1={b1} euler={euler_characteristic(complex_)}")
    return EXIT_OK


def run_certify(command: Command) -> int:
    try:
        text = read_document(command.source)
    except OSError as e:
        print(f"cannot read {command.source}: {e.strerror}")
        return EXIT_INVALID
    except DocumentError as e:
        print(f"unreadable: {e}")
        return EXIT_INVALID
    result = certify_document(text)
    if result.unreadable:
        print(f"unreadable: {result.unreadable}")
    for problem in result.problems:
        print(f"FAIL {problem}")
    if result.trusted:
        print(f"trusted {result.trusted} exhaustion refutations from the record (not searched again)")
    if result.ok:
        print(f"certified {result.kind}")
    return result.exit_code


def run_explore(command: Command) -> int:
    try:
        n = int(command.source)
    except ValueError:
        raise FiniteSpaceError(f"explore-circle needs an integer, got {command.source!r}") from None
    report = explore_antidiagonal_cover(n, command.limits)
    write_artifact(command.output_path(), serialize_exploration(report))
    for explored in report.sets:
        reason = f" reason={explored.reason.value}" if explored.reason else ""
        print(f"{explored.name}: points={len(explored.block)} outcome={explored.outcome.value}{reason}")
    conclusive = all(explored.outcome.value != "inconclusive" for explored in report.sets)
    return EXIT_OK if conclusive else EXIT_INCONCLUSIVE


def run_export_dot(command: Command) -> int:
    space = load_space(command.source)
    write_artifact(command.output_path(".dot"), export_dot(space))
    return EXIT_OK


HANDLERS = {
    "build": run_build,
    "validate": run_validate,
    "cat": run_search,
    "tc": run_search,
    "core": run_core,
    "homology": run_homology,
    "certify": run_certify,
    "explore-circle": run_explore,
    "export-dot": run_export_dot,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Execute one command; returns the process exit code."""
    try:
        command = parse_command(argv)
    except FiniteSpaceError as e:
        logger.error(f"invalid arguments: {e}")
        print(f"error: {e}")
        return EXIT_INVALID
    try:
        return HANDLERS[command.verb](command)
    except FiniteSpaceError as e:
        logger.error(f"{command.verb} failed: {e}", exc_info=True)
        print(f"error: {e}")
        return EXIT_INVALID
    except OSError as e:
        logger.error(f"{command.verb} failed: {e}", exc_info=True)
        print(f"error: {e}")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
