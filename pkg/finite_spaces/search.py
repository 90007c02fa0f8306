"""
Invariant Search.

Computes cat(X) and TC(X) (unreduced: contractible spaces score 1) as the
fewest good open blocks covering the target space, where the target is X for
cat and X × X for TC and "good" means a nullhomotopic inclusion for cat and a
motion planner for TC.

Every open cover refines to one whose blocks are unions of downsets of maximal
points, and sub-blocks of good blocks are good. So it is enough to split the
maximal points of the target into k unordered blocks. Splittings are streamed
as restricted growth strings in lexicographic order; k is found by binary
descent from the best known covering, and the level below the answer is
exhausted to prove the lower bound.

This module provides:
- enumerate_block_assignments / refute_assignment / BlockOracle
- cat / tc returning a SearchReport (covering + exhaustion record)
- product_covering / planner_from_nullhomotopy (cat(X × Y) <= cat(X) cat(Y))
- planner_to_interval_map, known_bounds, explore_antidiagonal_cover
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple, Union

import networkx as nx
from sympy.functions.combinatorial.numbers import stirling

from config import settings
from finite_spaces.budget import Budget, Limits
from finite_spaces.constructors import circle_antidiagonal, product
from finite_spaces.errors import ParameterError
from finite_spaces.homotopy import (
    NullhomotopyCertificate,
    Outcome,
    PlannerCertificate,
    RefutationReason,
    admits_planner,
    decide_nullhomotopy,
    is_contractible,
    row_column_obstruction,
)
from finite_spaces.maps import ContinuousMap, Fence, check_fence, fence_to_interval_map
from finite_spaces.space import (
    FiniteSpace,
    PointSet,
    bits,
    comparability_graph,
    down_closure,
    is_connected,
    maximal_points,
    open_sets,
    whole,
)

logger = logging.getLogger(__name__)

Certificate = Union[NullhomotopyCertificate, PlannerCertificate]


class Invariant(str, Enum):
    CAT = "cat"
    TC = "tc"


# =============================================================================
# BLOCK ASSIGNMENTS
# =============================================================================

def restricted_growth_strings(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """
    Words a_0 ... a_{n-1} with a_0 = 0, a_i <= 1 + max(a_0..a_{i-1}) and exactly k
    distinct letters, in lexicographic order: one per partition of n items into k
    unordered blocks.
    """
    if n < 1 or not 1 <= k <= n:
        return
    word = [0] * n

    def extend(position: int, used: int) -> Iterator[Tuple[int, ...]]:
        if position == n:
            if used == k:
                yield tuple(word)
            return
        if k - used > n - position:
            return
        for letter in range(min(used + 1, k)):
            word[position] = letter
            yield from extend(position + 1, max(used, letter + 1))

    yield from extend(1, 1)


@dataclass(frozen=True)
class BlockAssignment:
    """The index-th splitting of the target's maximal points into k blocks."""

    index: int
    rgs: Tuple[int, ...]
    k: int

    @property
    def block_masks(self) -> Tuple[int, ...]:
        """Per block, a mask over the positions of the maximal points."""
        masks = [0] * self.k
        for position, block in enumerate(self.rgs):
            masks[block] |= 1 << position
        return tuple(masks)

    def blocks(self, target: FiniteSpace) -> List[PointSet]:
        maximal = maximal_points(target).indices()
        return [PointSet(target, _union_of_downsets(target, maximal, m)) for m in self.block_masks]


def _union_of_downsets(target: FiniteSpace, maximal: List[int], position_mask: int) -> int:
    mask = 0
    for position in bits(position_mask):
        mask |= target.down_mask(maximal[position])
    return mask


def enumerate_block_assignments(space: FiniteSpace, k: int) -> Iterator[BlockAssignment]:
    """All splittings of the maximal points of space into k unordered nonempty blocks."""
    if k < 1:
        raise ParameterError(f"block count must be at least 1, got {k}")
    count = len(maximal_points(space))
    for index, rgs in enumerate(restricted_growth_strings(count, k)):
        yield BlockAssignment(index, rgs, k)


# =============================================================================
# BLOCK DECISIONS
# =============================================================================

@dataclass
class Verdict:
    outcome: Outcome
    reason: Optional[RefutationReason] = None
    certificate: Optional[Certificate] = None
    # how the verdict was reached: obstruction, subsumed, restricted, pair, search, deadline
    source: str = "search"


class BlockOracle:
    """
    Decides and remembers whether blocks of one target are good.

    Blocks are keyed by their mask over maximal-point positions. Checks run
    cheapest first: the row/column obstruction, a known bad sub-block, a known
    good super-block (whose certificate restricts), the pairs inside the block,
    and only then the homotopy search.
    """

    def __init__(
        self,
        target: FiniteSpace,
        invariant: Invariant,
        limits: Limits,
        budget: Budget,
        reduce_to_cores: Optional[bool] = None,
    ):
        self.target = target
        self.invariant = invariant
        self.limits = limits
        self.budget = budget
        self.reduce_to_cores = settings.reduce_to_cores if reduce_to_cores is None else reduce_to_cores
        self.maximal = maximal_points(target).indices()
        self.maximal_labels = [target.label(i) for i in self.maximal]
        self.contractible: Optional[bool] = None
        if invariant is Invariant.TC:
            self.contractible = is_contractible(target.factors[0])
        self._verdicts: Dict[int, Verdict] = {}
        self._bad: List[int] = []
        self._good: List[int] = []
        self.searches = 0

    def block(self, position_mask: int) -> PointSet:
        return PointSet(self.target, _union_of_downsets(self.target, self.maximal, position_mask))

    def _store(self, position_mask: int, verdict: Verdict) -> Verdict:
        self._verdicts[position_mask] = verdict
        # derived verdicts add nothing to subsumption
        if verdict.source == "search":
            if verdict.outcome is Outcome.NO:
                self._bad.append(position_mask)
            elif verdict.outcome is Outcome.YES:
                self._good.append(position_mask)
        return verdict

    def cheap(self, position_mask: int) -> Optional[Verdict]:
        """Verdict without any homotopy search, or None."""
        known = self._verdicts.get(position_mask)
        if known is not None:
            return known
        block = self.block(position_mask)
        if row_column_obstruction(block, self.contractible):
            return self._store(position_mask, Verdict(Outcome.NO, RefutationReason.ROW_COLUMN, source="obstruction"))
        for bad in self._bad:
            if bad & position_mask == bad:
                inherited = self._verdicts[bad].reason
                return self._store(position_mask, Verdict(Outcome.NO, inherited, source="subsumed"))
        for good in self._good:
            if position_mask & good == position_mask:
                certificate = self._verdicts[good].certificate.restrict(block)
                return self._store(position_mask, Verdict(Outcome.YES, certificate=certificate, source="restricted"))
        return None

    def decide(self, position_mask: int) -> Verdict:
        verdict = self.cheap(position_mask)
        if verdict is not None:
            return verdict
        if self.budget.expired():
            return Verdict(Outcome.INCONCLUSIVE, source="deadline")

        positions = list(bits(position_mask))
        if len(positions) > 2:
            for i, first in enumerate(positions):
                for second in positions[i + 1:]:
                    pair = self.decide((1 << first) | (1 << second))
                    if pair.outcome is Outcome.NO:
                        return self._store(position_mask, Verdict(Outcome.NO, pair.reason, source="pair"))

        self.searches += 1
        block = self.block(position_mask)
        if self.invariant is Invariant.TC:
            result = admits_planner(block, self.limits, self.budget, self.reduce_to_cores, self.contractible)
        else:
            result = decide_nullhomotopy(block, self.limits, self.budget, self.reduce_to_cores)
        verdict = Verdict(result.outcome, result.reason, result.certificate)
        logger.debug(
            f"{self.invariant.value} block {self.describe(position_mask)}: {result.outcome.value} "
            f"({result.visited} maps)"
        )
        return self._store(position_mask, verdict)

    def describe(self, position_mask: int) -> str:
        return "{" + ",".join(self.maximal_labels[p] for p in bits(position_mask)) + "}"


@dataclass
class AssignmentOutcome:
    """NO: some block is bad (the assignment is refuted); YES: every block is good."""

    assignment: BlockAssignment
    outcome: Outcome
    bad_block: Optional[int] = None
    reason: Optional[RefutationReason] = None
    certificates: List[Certificate] = field(default_factory=list)

    @property
    def refuted(self) -> bool:
        return self.outcome is Outcome.NO


def refute_assignment(assignment: BlockAssignment, oracle: BlockOracle) -> AssignmentOutcome:
    """Try to refute an assignment: one bad block suffices. Cheap checks go over all blocks first."""
    masks = assignment.block_masks
    for mask in masks:
        verdict = oracle.cheap(mask)
        if verdict is not None and verdict.outcome is Outcome.NO:
            return AssignmentOutcome(assignment, Outcome.NO, mask, verdict.reason)

    verdicts = []
    for mask in masks:
        verdict = oracle.decide(mask)
        if verdict.outcome is Outcome.NO:
            return AssignmentOutcome(assignment, Outcome.NO, mask, verdict.reason)
        verdicts.append(verdict)
    if any(v.outcome is Outcome.INCONCLUSIVE for v in verdicts):
        return AssignmentOutcome(assignment, Outcome.INCONCLUSIVE)
    return AssignmentOutcome(assignment, Outcome.YES, certificates=[v.certificate for v in verdicts])


# =============================================================================
# REPORTS
# =============================================================================

@dataclass
class Covering:
    """Good open blocks covering the target, one certificate per block."""

    target: FiniteSpace
    invariant: Invariant
    blocks: List[PointSet]
    certificates: List[Certificate]
    # "search", "product" or "singletons"
    source: str = "search"

    def __len__(self) -> int:
        return len(self.blocks)

    def verify(self) -> List[str]:
        problems: List[str] = []
        if len(self.blocks) != len(self.certificates):
            problems.append("one certificate per block is required")
        union = 0
        for position, block in enumerate(self.blocks):
            union |= block.mask
            if not block.is_open:
                problems.append(f"block {position} is not open")
        if union != self.target.full_mask:
            problems.append("blocks do not cover the space")
        expected = PlannerCertificate if self.invariant is Invariant.TC else NullhomotopyCertificate
        for position, (block, certificate) in enumerate(zip(self.blocks, self.certificates)):
            if not isinstance(certificate, expected):
                problems.append(f"block {position} carries the wrong kind of certificate")
                continue
            if certificate.block.mask != block.mask:
                problems.append(f"certificate {position} belongs to another block")
            problems += [f"block {position}: {p}" for p in certificate.verify()]
        return problems


@dataclass(frozen=True)
class Refutation:
    index: int
    rgs: Tuple[int, ...]
    outcome: Outcome
    reason: Optional[RefutationReason] = None
    # maximal points of the bad block
    block: Tuple[str, ...] = ()


@dataclass
class ExhaustionRecord:
    """Every splitting at level k, each refuted (or left inconclusive)."""

    k: int
    maximal_points: Tuple[str, ...]
    refutations: List[Refutation] = field(default_factory=list)

    @property
    def expected(self) -> int:
        return int(stirling(len(self.maximal_points), self.k))

    @property
    def inconclusive(self) -> int:
        return sum(1 for r in self.refutations if r.outcome is not Outcome.NO)

    @property
    def complete(self) -> bool:
        return (
            len(self.refutations) == self.expected
            and [r.index for r in self.refutations] == list(range(self.expected))
            and self.inconclusive == 0
        )

    def count(self, reason: RefutationReason) -> int:
        return sum(1 for r in self.refutations if r.reason is reason)


@dataclass
class SearchReport:
    invariant: Invariant
    space: FiniteSpace
    target: FiniteSpace
    value: int
    upper: Covering
    lower: Optional[ExhaustionRecord]
    limits: Limits

    @property
    def proven(self) -> bool:
        if self.value == 1:
            return True
        return self.lower is not None and self.lower.k == self.value - 1 and self.lower.complete

    @property
    def status(self) -> str:
        return "proven" if self.proven else "upper-bound-only"

    @property
    def inconclusive(self) -> int:
        return self.lower.inconclusive if self.lower is not None else 0


# =============================================================================
# SEARCH
# =============================================================================

def _require_connected(space: FiniteSpace) -> None:
    if not is_connected(space, whole(space)):
        raise ParameterError("cat and TC are computed for connected spaces only")


def _singleton_covering(oracle: BlockOracle) -> Optional[Covering]:
    """Downsets of the maximal points; each is contractible, so each is good."""
    blocks, certificates = [], []
    for position in range(len(oracle.maximal)):
        verdict = oracle.decide(1 << position)
        if verdict.outcome is not Outcome.YES:
            return None
        blocks.append(oracle.block(1 << position))
        certificates.append(verdict.certificate)
    return Covering(oracle.target, oracle.invariant, blocks, certificates, source="singletons")


def _search_level(oracle: BlockOracle, k: int) -> Tuple[Optional[Covering], ExhaustionRecord]:
    record = ExhaustionRecord(k, tuple(oracle.maximal_labels))
    for assignment in enumerate_block_assignments(oracle.target, k):
        result = refute_assignment(assignment, oracle)
        if result.outcome is Outcome.YES:
            covering = Covering(
                oracle.target, oracle.invariant, assignment.blocks(oracle.target), result.certificates
            )
            logger.info(f"{oracle.invariant.value}: k={k} feasible (assignment {assignment.index})")
            return covering, record
        block = tuple(oracle.maximal_labels[p] for p in bits(result.bad_block)) if result.bad_block else ()
        record.refutations.append(Refutation(assignment.index, assignment.rgs, result.outcome, result.reason, block))
    logger.info(
        f"{oracle.invariant.value}: k={k} exhausted, {len(record.refutations)} assignments, "
        f"{record.count(RefutationReason.ROW_COLUMN)} by row-column, {record.inconclusive} inconclusive"
    )
    return None, record


def _binary_descent(oracle: BlockOracle, seed: Optional[Covering], limits: Limits) -> SearchReport:
    best = seed
    if best is None or len(best) > len(oracle.maximal):
        singletons = _singleton_covering(oracle)
        if singletons is not None:
            best = singletons
    if best is None:
        raise ParameterError("no covering by good blocks was found to start from")

    lo, hi = 1, len(best)
    lower: Optional[ExhaustionRecord] = None
    while lo < hi:
        mid = (lo + hi) // 2
        logger.info(f"{oracle.invariant.value}: trying k={mid} (bounds {lo}..{hi})")
        covering, record = _search_level(oracle, mid)
        if covering is not None:
            best, hi = covering, mid
        else:
            lower, lo = record, mid + 1

    space = oracle.target.factors[0] if oracle.invariant is Invariant.TC else oracle.target
    if lower is not None and lower.k != hi - 1:
        lower = None
    report = SearchReport(oracle.invariant, space, oracle.target, hi, best, lower, limits)
    logger.info(
        f"{oracle.invariant.value}={report.value} {report.status} "
        f"({oracle.searches} homotopy searches, {oracle.budget.elapsed:.1f}s)"
    )
    return report


def cat(
    space: FiniteSpace,
    limits: Optional[Limits] = None,
    budget: Optional[Budget] = None,
    reduce_to_cores: Optional[bool] = None,
) -> SearchReport:
    """
    Lusternik-Schnirelmann category of a connected space.

    On a product A × B the search starts from the product of the factor
    coverings when that beats the singleton covering.
    """
    _require_connected(space)
    limits = limits or Limits.from_settings()
    budget = budget or Budget.start(limits)
    oracle = BlockOracle(space, Invariant.CAT, limits, budget, reduce_to_cores)
    seed = None
    if is_contractible(space):
        seed, _ = _search_level(oracle, 1)
    elif space.factors is not None and settings.use_cat_bound:
        left, right = space.factors
        left_report = cat(left, limits, budget, reduce_to_cores)
        right_report = left_report if right == left else cat(right, limits, budget, reduce_to_cores)
        seed = product_covering(left_report, right_report, space)
    return _binary_descent(oracle, seed, limits)


def tc(
    space: FiniteSpace,
    limits: Optional[Limits] = None,
    budget: Optional[Budget] = None,
    reduce_to_cores: Optional[bool] = None,
    use_cat_bound: Optional[bool] = None,
) -> SearchReport:
    """Topological complexity of a connected space, searched over blocks of X × X."""
    _require_connected(space)
    limits = limits or Limits.from_settings()
    budget = budget or Budget.start(limits)
    if use_cat_bound is None:
        use_cat_bound = settings.use_cat_bound
    target = product(space, space)
    oracle = BlockOracle(target, Invariant.TC, limits, budget, reduce_to_cores)
    seed = None
    if oracle.contractible:
        seed, _ = _search_level(oracle, 1)
    elif use_cat_bound:
        cat_report = cat(space, limits, budget, reduce_to_cores)
        if cat_report.value ** 2 < len(oracle.maximal):
            squared = product_covering(cat_report, cat_report, target)
            certificates = [planner_from_nullhomotopy(c) for c in squared.certificates]
            seed = Covering(target, Invariant.TC, squared.blocks, certificates, source="product")
            logger.info(f"tc: seeded with the cat(X)^2 = {len(seed)} product covering")
    return _binary_descent(oracle, seed, limits)


def brute_force_value(
    space: FiniteSpace,
    invariant: Invariant,
    limits: Optional[Limits] = None,
    reduce_to_cores: Optional[bool] = None,
) -> Optional[int]:
    """
    cat or TC straight from the definition: decide every nonempty open set of
    the target, then find the fewest good ones that cover it.

    Exponential in the size of the target; it exists to cross-check cat and tc
    on small spaces. Returns None when some decision is inconclusive or the
    seconds limit runs out, listing open sets included.
    """
    _require_connected(space)
    limits = limits or Limits.from_settings()
    budget = Budget.start(limits)
    target = product(space, space) if invariant is Invariant.TC else space
    candidates: List[int] = []
    for subset in open_sets(target):
        if subset.mask:
            candidates.append(subset.mask)
        if len(candidates) % 4096 == 0 and budget.expired():
            logger.info(f"brute force {invariant.value}: out of time listing open sets of {len(target)} points")
            return None
    candidates.sort(key=lambda m: (-bin(m).count("1"), m))
    good: List[int] = []
    for mask in candidates:
        if any(mask & g == mask for g in good):
            continue
        if budget.expired():
            logger.info(f"brute force {invariant.value}: out of time after {budget.decisions} decisions")
            return None
        block = PointSet(target, mask)
        if invariant is Invariant.TC:
            result = admits_planner(block, limits, budget, reduce_to_cores)
        else:
            result = decide_nullhomotopy(block, limits, budget, reduce_to_cores)
        if result.outcome is Outcome.INCONCLUSIVE:
            return None
        if result.outcome is Outcome.YES:
            good.append(mask)
    logger.debug(f"brute force {invariant.value}: {len(candidates)} open sets, {len(good)} maximal good")
    for k in range(1, len(good) + 1):
        if budget.expired():
            return None
        for chosen in combinations(good, k):
            union = 0
            for mask in chosen:
                union |= mask
            if union == target.full_mask:
                return k
    return None


# =============================================================================
# PRODUCT COVERINGS
# =============================================================================

def _product_nullhomotopy(
    target: FiniteSpace,
    first: NullhomotopyCertificate,
    second: NullhomotopyCertificate,
) -> NullhomotopyCertificate:
    """Contract Q × R inside A × B by running the first factor's fence, then the second's."""
    width = len(target.factors[1])
    rows, columns = list(bits(first.block.mask)), list(bits(second.block.mask))
    block_mask = 0
    for a in rows:
        block_mask |= second.block.mask << (a * width)
    block = PointSet(target, block_mask)
    domain = block.as_space()

    def lifted(left: Tuple[int, ...], right: Tuple[int, ...]) -> ContinuousMap:
        return ContinuousMap(domain, target, tuple(u * width + w for u in left for w in right))

    moving_first = [lifted(f.values, tuple(columns)) for f in first.fence.maps]
    parked = first.fence.last.values[0]
    moving_second = [lifted((parked,) * len(rows), g.values) for g in second.fence.maps]
    fence = Fence(tuple(moving_first), first.fence.dirs).concatenate(
        Fence(tuple(moving_second), second.fence.dirs)
    )
    return NullhomotopyCertificate(block, fence.compressed())


def product_covering(left: SearchReport, right: SearchReport, target: FiniteSpace) -> Covering:
    """Blocks Q_i × R_j of A × B from categorical coverings of A and B."""
    if left.invariant is not Invariant.CAT or right.invariant is not Invariant.CAT:
        raise ParameterError("product coverings are built from cat reports")
    blocks, certificates = [], []
    for first in left.upper.certificates:
        for second in right.upper.certificates:
            certificate = _product_nullhomotopy(target, first, second)
            blocks.append(certificate.block)
            certificates.append(certificate)
    return Covering(target, Invariant.CAT, blocks, certificates, source="product")


def planner_from_nullhomotopy(certificate: NullhomotopyCertificate) -> PlannerCertificate:
    """
    A block of X × X with nullhomotopic inclusion carries a planner:
    pr1|Q ≃ const a ≃ const b ≃ pr2|Q, the middle step along a zigzag a ⋚ ... ⋚ b.
    """
    target = certificate.block.space
    space = target.factors[0]
    width = len(space)
    pr1 = ContinuousMap(target, space, tuple(i // width for i in range(len(target))))
    pr2 = ContinuousMap(target, space, tuple(i % width for i in range(len(target))))
    to_first = certificate.fence.compose_left(pr1)
    to_second = certificate.fence.compose_left(pr2)
    a, b = to_first.last.values[0], to_second.last.values[0]

    domain = certificate.fence.domain
    path = nx.shortest_path(comparability_graph(space), a, b)
    zigzag = Fence.from_path(ContinuousMap(domain, space, (p,) * len(domain)) for p in path)
    fence = to_first.concatenate(zigzag).concatenate(to_second.reversed()).compressed()
    return PlannerCertificate(certificate.block, fence)


def planner_to_interval_map(certificate: PlannerCertificate) -> ContinuousMap:
    """The planner as a continuous map Q × J_m → X, (q, x_0) ↦ pr1(q), (q, x_m) ↦ pr2(q)."""
    problems = check_fence(certificate.fence)
    if problems:
        raise ParameterError(f"malformed planner certificate: {problems[0]}")
    return fence_to_interval_map(certificate.fence)


# =============================================================================
# CHEAP BOUNDS
# =============================================================================

@dataclass(frozen=True)
class BoundsReport:
    """Bounds available without search. The zero-divisor cup-length bound is not computed."""

    maximal_points: int
    contractible: bool
    cat_upper: int
    cat_square_upper: int
    tc_lower: int
    tc_upper: int
    zcl: str = "unavailable"


def known_bounds(space: FiniteSpace, cat_value: Optional[int] = None) -> BoundsReport:
    _require_connected(space)
    count = len(maximal_points(space))
    if is_contractible(space):
        return BoundsReport(count, True, 1, 1, 1, 1)
    square = count * count
    if cat_value is not None:
        square = min(square, cat_value * cat_value)
    return BoundsReport(count, False, count, square, 2, square)


# =============================================================================
# ANTIDIAGONAL EXPLORATION
# =============================================================================

@dataclass
class ExploredSet:
    name: str
    block: PointSet
    is_open: bool
    obstructed: bool
    outcome: Outcome
    certificate: Optional[PlannerCertificate] = None
    reason: Optional[RefutationReason] = None
    visited: int = 0


@dataclass
class ExplorationReport:
    """
    The two-set candidate cover of 𝕊¹ₙ × 𝕊¹ₙ built from the antidiagonal.

    The antipode of x_i is x_{i+shift} and of y_i is y_{i+shift}, indices mod n,
    with shift = n // 2.
    """

    n: int
    shift: int
    target: FiniteSpace
    sets: List[ExploredSet]
    limits: Limits

    @property
    def covers(self) -> bool:
        union = 0
        for explored in self.sets:
            union |= explored.block.mask
        return union == self.target.full_mask


def explore_antidiagonal_cover(n: int, limits: Optional[Limits] = None) -> ExplorationReport:
    """
    Q1 = complement of D and Q2 = D↓, where D is the closure of the antidiagonal.

    Each set is checked for openness and for the row/column obstruction, then
    handed to the planner decision. No answer is presumed.
    """
    if n < 5:
        raise ParameterError(f"antidiagonal exploration needs n >= 5, got {n}")
    limits = limits or Limits.from_settings()
    budget = Budget.start(limits)
    target, _, closed = circle_antidiagonal(n)
    candidates = [
        ("Q1", PointSet(target, target.full_mask & ~closed)),
        ("Q2", PointSet(target, down_closure(target, closed))),
    ]
    explored = []
    for name, block in candidates:
        obstructed = row_column_obstruction(block, False)
        if block.is_open and block.mask:
            result = admits_planner(block, limits, budget, contractible=False)
        else:
            result = None
        if result is None:
            explored.append(ExploredSet(name, block, block.is_open, obstructed, Outcome.INCONCLUSIVE))
            continue
        explored.append(
            ExploredSet(name, block, True, obstructed, result.outcome, result.certificate, result.reason, result.visited)
        )
        logger.info(f"explore-circle {n}: {name} ({len(block)} points) -> {result.outcome.value}")
    return ExplorationReport(n, n // 2, target, explored, limits)
