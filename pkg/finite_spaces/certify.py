"""
Certificate Verification.

Re-checks a report from its JSON alone: the digest, every block (open, jointly
covering, certificate fence valid end to end), and the exhaustion record
(complete, canonical, each row/column refutation re-derived). Nothing is
searched again: exhaustion refutations keep only their block check and are
reported as trusted.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from sympy.functions.combinatorial.numbers import stirling

from finite_spaces.constructors import circle_antidiagonal, product
from finite_spaces.documents import (
    ANTIDIAGONAL_PAIRING,
    ExhaustionDocument,
    ExplorationDocument,
    SearchReportDocument,
    compute_digest,
    covering_from_document,
    fence_from_document,
    load,
    space_from_document,
)
from finite_spaces.errors import DocumentError, ExpressionError, FiniteSpaceError
from finite_spaces.expressions import parse_expression
from finite_spaces.homotopy import PlannerCertificate, row_column_obstruction
from finite_spaces.search import Invariant
from finite_spaces.space import FiniteSpace, PointSet, maximal_points
from shared.cli_config import EXIT_CERTIFICATE, EXIT_INVALID, EXIT_OK, FORMAT_VERSION

logger = logging.getLogger(__name__)


@dataclass
class CertificationResult:
    kind: str
    problems: List[str] = field(default_factory=list)
    # set when the input could not be read at all
    unreadable: Optional[str] = None
    # exhaustion refutations accepted from the record without a new search
    trusted: int = 0

    @property
    def ok(self) -> bool:
        return self.unreadable is None and not self.problems

    @property
    def exit_code(self) -> int:
        if self.unreadable is not None:
            return EXIT_INVALID
        return EXIT_OK if not self.problems else EXIT_CERTIFICATE


def _is_restricted_growth_string(word: List[int], length: int, k: int) -> bool:
    if len(word) != length or not word or word[0] != 0:
        return False
    used = 0
    for letter in word:
        if letter < 0 or letter > used or letter >= k:
            return False
        used = max(used, letter + 1)
    return used == k


def _check_exhaustion(document: ExhaustionDocument, target: FiniteSpace, value: int) -> List[str]:
    """
    Completeness, canonical order and block shape of every refutation.

    Row/column refutations are re-derived. Exhaustion refutations would need the
    homotopy search again, so only their block is checked; they are counted as
    trusted.
    """
    problems: List[str] = []
    maximal = maximal_points(target)
    labels = maximal.labels()
    if document.k != value - 1:
        problems.append(f"lower bound record is for k={document.k}, not value - 1 = {value - 1}")
    if document.maximal_points != labels:
        problems.append("lower bound record lists the wrong maximal points")
        return problems
    expected = int(stirling(len(labels), document.k))
    if document.expected != expected:
        problems.append(f"record expects {document.expected} assignments, there are {expected}")

    previous: Optional[List[int]] = None
    for position, refutation in enumerate(document.refutations):
        where = f"refutation {position}"
        if refutation.index != position:
            problems.append(f"{where}: index {refutation.index} out of sequence")
        if not _is_restricted_growth_string(refutation.rgs, len(labels), document.k):
            problems.append(f"{where}: not a canonical assignment into {document.k} blocks")
            continue
        if previous is not None and refutation.rgs <= previous:
            problems.append(f"{where}: assignments are not in canonical order")
        previous = refutation.rgs
        if refutation.outcome == "inconclusive":
            continue
        if refutation.reason is None:
            problems.append(f"{where}: refuted without a reason")
            continue
        blocks = {}
        for point, letter in zip(labels, refutation.rgs):
            blocks.setdefault(letter, []).append(point)
        if refutation.block not in blocks.values():
            problems.append(f"{where}: the bad block is not a block of the assignment")
            continue
        if refutation.reason == "row-column":
            mask = 0
            for point in refutation.block:
                mask |= target.down_mask(target.index(point))
            if not row_column_obstruction(PointSet(target, mask)):
                problems.append(f"{where}: block contains no full row or column")
    if len(document.refutations) != expected:
        problems.append(f"record holds {len(document.refutations)} of {expected} assignments")
    return problems


def certify_report(text: str) -> CertificationResult:
    result = CertificationResult("report")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        result.unreadable = f"invalid JSON at line {e.lineno}: {e.msg}"
        return result
    if not isinstance(payload, dict):
        result.unreadable = "not a JSON object"
        return result
    if payload.get("digest") != compute_digest(payload):
        result.problems.append("digest does not match the report contents")
    try:
        document = load(text, SearchReportDocument)
    except DocumentError as e:
        result.problems.append(f"malformed report: {e}")
        return result

    if document.format_version != FORMAT_VERSION:
        result.problems.append(f"format version {document.format_version} is not {FORMAT_VERSION}")
    if document.space.kind != "explicit":
        try:
            parse_expression(document.space.kind)
        except ExpressionError as e:
            result.problems.append(f"space kind {document.space.kind!r} is not an expression: {e}")

    try:
        space = space_from_document(document.space)
        invariant = Invariant(document.invariant)
        target = product(space, space) if invariant is Invariant.TC else space
        covering = covering_from_document(document.upper, target, invariant)
    except FiniteSpaceError as e:
        result.problems.append(f"cannot rebuild the covering: {e}")
        return result

    result.problems += covering.verify()
    if document.value != len(covering):
        result.problems.append(f"value {document.value} differs from the {len(covering)} blocks of the covering")

    complete = False
    inconclusive = 0
    if document.lower is not None:
        try:
            result.problems += _check_exhaustion(document.lower, target, document.value)
        except FiniteSpaceError as e:
            result.problems.append(f"cannot read the lower bound record: {e}")
        inconclusive = sum(1 for r in document.lower.refutations if r.outcome == "inconclusive")
        result.trusted = sum(1 for r in document.lower.refutations if r.reason == "exhaustion")
        complete = inconclusive == 0 and len(document.lower.refutations) == document.lower.expected
    if inconclusive != document.inconclusive:
        result.problems.append("inconclusive count does not match the record")
    proven = document.value == 1 or (document.lower is not None and complete)
    if (document.status == "proven") != proven:
        result.problems.append(f"status {document.status!r} is not supported by the record")

    logger.info(
        f"certify {document.invariant}={document.value}: {len(result.problems)} problems, "
        f"{result.trusted} exhaustion refutations trusted"
    )
    return result


def certify_exploration(text: str) -> CertificationResult:
    result = CertificationResult("exploration")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        result.unreadable = f"invalid JSON at line {e.lineno}: {e.msg}"
        return result
    if not isinstance(payload, dict):
        result.unreadable = "not a JSON object"
        return result
    if payload.get("digest") != compute_digest(payload):
        result.problems.append("digest does not match the report contents")
    try:
        document = load(text, ExplorationDocument)
    except DocumentError as e:
        result.problems.append(f"malformed exploration report: {e}")
        return result

    if document.format_version != FORMAT_VERSION:
        result.problems.append(f"format version {document.format_version} is not {FORMAT_VERSION}")
    if document.shift != document.n // 2:
        result.problems.append("shift is not n // 2")
    if document.pairing != ANTIDIAGONAL_PAIRING:
        result.problems.append("pairing differs from the antidiagonal construction")

    target, _, closed = circle_antidiagonal(document.n)
    space = target.factors[0]
    expected = {"Q1": target.full_mask & ~closed, "Q2": 0}
    for i in range(len(target)):
        if target.up_mask(i) & closed:
            expected["Q2"] |= 1 << i
    union = 0
    for explored in document.sets:
        where = f"set {explored.name}"
        try:
            block = PointSet.of(target, explored.points)
        except FiniteSpaceError as e:
            result.problems.append(f"{where}: {e}")
            continue
        union |= block.mask
        if expected.get(explored.name) != block.mask:
            result.problems.append(f"{where}: points differ from the antidiagonal construction")
        if explored.open != block.is_open:
            result.problems.append(f"{where}: openness flag is wrong")
        if explored.obstructed != row_column_obstruction(block, False):
            result.problems.append(f"{where}: obstruction flag is wrong")
        if explored.outcome == "yes":
            if explored.fence is None:
                result.problems.append(f"{where}: planner claimed without a fence")
                continue
            try:
                fence = fence_from_document(explored.fence, block.as_space(), space)
            except FiniteSpaceError as e:
                result.problems.append(f"{where}: {e}")
                continue
            result.problems += [f"{where}: {p}" for p in PlannerCertificate(block, fence).verify()]
        elif explored.outcome == "no":
            if explored.reason is None:
                result.problems.append(f"{where}: refuted without a reason")
            elif explored.reason == "row-column" and not explored.obstructed:
                result.problems.append(f"{where}: row-column refutation of an unobstructed set")
    if document.covers != (union == target.full_mask):
        result.problems.append("covering flag is wrong")
    return result


def certify_document(text: str) -> CertificationResult:
    """Dispatch on the document shape: search reports and exploration reports."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        return CertificationResult("unknown", unreadable=f"invalid JSON at line {e.lineno}: {e.msg}")
    if isinstance(payload, dict) and "sets" in payload:
        return certify_exploration(text)
    if isinstance(payload, dict) and "invariant" in payload:
        return certify_report(text)
    return CertificationResult("unknown", unreadable="not a search or exploration report")
