"""
Homotopy Engine.

Decides the homotopy questions the invariant searches ask:
- beat points, cores and the retraction data that goes with them
- contractibility (the core is a single point)
- homotopy between two maps, returned as a verifiable Fence
- nullhomotopy of the inclusion of an open set
- existence of a motion planner on an open Q ⊆ X × X (pr1|Q ≃ pr2|Q)
- the row/column obstruction, a quick proof that a block is bad

Two maps are homotopic iff they lie in one component of the hom-poset. If
f <= g, the values can be moved one point at a time (always the largest point
still differing), and each move can be cut into moves to covering values. So
the search walks single-point moves to an upper or lower cover, which keeps the
neighbourhood of a map small and never materialises the hom-poset.

Homotopy classes do not change when domain and codomain are replaced by their
cores, so by default the search runs between cores and the resulting fence is
lifted back along the retraction chains.
"""

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from config import settings
from finite_spaces.budget import Budget, Limits
from finite_spaces.errors import ParameterError
from finite_spaces.maps import ContinuousMap, Direction, Fence, check_fence, inclusion, relative_mask
from finite_spaces.space import FiniteSpace, PointSet, bits

logger = logging.getLogger(__name__)

Values = Tuple[int, ...]


class Outcome(str, Enum):
    """Three-valued answer of every decision that can run out of budget."""

    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


class RefutationReason(str, Enum):
    ROW_COLUMN = "row-column"
    EXHAUSTION = "exhaustion"


# =============================================================================
# BEAT POINTS AND CORES
# =============================================================================

def _lower_covers_within(space: FiniteSpace, x: int, mask: int) -> List[int]:
    below = space.down_mask(x) & mask & ~(1 << x)
    return [y for y in bits(below) if space.up_mask(y) & below == 1 << y]


def _upper_covers_within(space: FiniteSpace, x: int, mask: int) -> List[int]:
    above = space.up_mask(x) & mask & ~(1 << x)
    return [y for y in bits(above) if space.down_mask(y) & above == 1 << y]


def _beat_target(space: FiniteSpace, x: int, mask: int) -> Optional[Tuple[int, Direction]]:
    """Where a beat point retracts to, and how the retraction compares with the identity."""
    lower = _lower_covers_within(space, x, mask)
    if len(lower) == 1:
        return lower[0], Direction.GE
    upper = _upper_covers_within(space, x, mask)
    if len(upper) == 1:
        return upper[0], Direction.LE
    return None


def beat_points(space: FiniteSpace) -> PointSet:
    """Points x where x↓−{x} has a unique maximal element or x↑−{x} a unique minimal one."""
    mask = 0
    for x in range(len(space)):
        if _beat_target(space, x, space.full_mask) is not None:
            mask |= 1 << x
    return PointSet(space, mask)


@dataclass(frozen=True)
class Removal:
    point: int
    target: int
    # relation of the identity to the retraction after this removal
    direction: Direction


@dataclass(frozen=True)
class CoreRetraction:
    """
    Beat points removed one at a time, lowest index first.

    After removal j the composite retraction R_j (a map X -> X with image the
    remaining points) is comparable with R_{j-1}, which gives the fence
    id ⋚ R_1 ⋚ ... ⋚ R_m from the identity to the core retraction.
    """

    space: FiniteSpace
    removals: Tuple[Removal, ...]
    core_mask: int

    @property
    def core(self) -> FiniteSpace:
        return self.space.subspace(self.core_mask)

    @property
    def is_point(self) -> bool:
        return bin(self.core_mask).count("1") == 1

    def _stages(self) -> List[Values]:
        current = list(range(len(self.space)))
        stages = [tuple(current)]
        for removal in self.removals:
            current = [removal.target if v == removal.point else v for v in current]
            stages.append(tuple(current))
        return stages

    def chain(self) -> Fence:
        """Fence from id_X to ι∘R with every step comparable to the previous one."""
        maps = tuple(ContinuousMap(self.space, self.space, values) for values in self._stages())
        return Fence(maps, tuple(r.direction for r in self.removals))

    def retraction(self) -> ContinuousMap:
        """R : X -> core(X)."""
        final = self._stages()[-1]
        position = {g: k for k, g in enumerate(bits(self.core_mask))}
        return ContinuousMap(self.space, self.core, tuple(position[v] for v in final))

    def core_inclusion(self) -> ContinuousMap:
        return inclusion(PointSet(self.space, self.core_mask))


@lru_cache(maxsize=1024)
def core_retraction(space: FiniteSpace) -> CoreRetraction:
    mask = space.full_mask
    removals: List[Removal] = []
    while True:
        for x in bits(mask):
            beat = _beat_target(space, x, mask)
            if beat is not None:
                target, direction = beat
                removals.append(Removal(x, target, direction))
                mask &= ~(1 << x)
                break
        else:
            break
    if removals:
        logger.debug(f"core of {space!r}: removed {len(removals)} beat points, {bin(mask).count('1')} remain")
    return CoreRetraction(space, tuple(removals), mask)


def core(space: FiniteSpace) -> FiniteSpace:
    return core_retraction(space).core


def is_contractible(space: FiniteSpace) -> bool:
    return core_retraction(space).is_point


# =============================================================================
# MAPS ON BLOCKS
# =============================================================================

def restrict(f: ContinuousMap, subset: PointSet) -> ContinuousMap:
    return f.restrict(subset)


def projection_maps(block: PointSet) -> Tuple[ContinuousMap, ContinuousMap]:
    """pr1|Q and pr2|Q for Q inside a product space A × B."""
    factors = block.space.factors
    if factors is None:
        raise ParameterError("projections need a block of a product space")
    left, right = factors
    width = len(right)
    domain = block.as_space()
    members = list(bits(block.mask))
    pr1 = ContinuousMap(domain, left, tuple(i // width for i in members))
    pr2 = ContinuousMap(domain, right, tuple(i % width for i in members))
    return pr1, pr2


@lru_cache(maxsize=256)
def _product_lines(space: FiniteSpace) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Masks of the rows {a} × B and the columns A × {b} of a product A × B."""
    left, right = space.factors
    width = len(right)
    row = (1 << width) - 1
    rows = tuple(row << (a * width) for a in range(len(left)))
    column = sum(1 << (a * width) for a in range(len(left)))
    columns = tuple(column << b for b in range(width))
    return rows, columns


def row_column_obstruction(block: PointSet, contractible: Optional[bool] = None) -> bool:
    """
    True when Q ⊆ A × B contains a row {a} × B with B not contractible, or a
    column A × {b} with A not contractible.

    Such a block admits neither a planner nor a nullhomotopic inclusion:
    restricting to the row turns either into a contraction of B. For TC, where
    A = B = X, ``contractible`` may pass in the precomputed answer for X.
    """
    space = block.space
    if space.factors is None:
        return False
    left, right = space.factors
    if contractible is not None and left == right:
        left_contractible = right_contractible = contractible
    else:
        left_contractible, right_contractible = is_contractible(left), is_contractible(right)
    rows, columns = _product_lines(space)
    mask = block.mask
    if not right_contractible and any(mask & row == row for row in rows):
        return True
    if not left_contractible and any(mask & column == column for column in columns):
        return True
    return False


# =============================================================================
# HOM-POSET SEARCH
# =============================================================================

@dataclass
class HomotopyResult:
    outcome: Outcome
    fence: Optional[Fence] = None
    visited: int = 0

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.YES


def _explore(
    start: ContinuousMap,
    is_target: Callable[[Values], bool],
    limits: Limits,
    budget: Budget,
) -> HomotopyResult:
    """Breadth-first search of the component of start, one single-point move at a time."""
    domain, codomain = start.domain, start.codomain
    up_domain, low_domain = domain.upper_covers, domain.lower_covers
    up_codomain, low_codomain = codomain.upper_covers, codomain.lower_covers
    leq = codomain.leq

    def path_to(values: Values) -> Fence:
        path = []
        node: Optional[Values] = values
        while node is not None:
            path.append(ContinuousMap(domain, codomain, node))
            node = parent[node]
        return Fence.from_path(reversed(path)).compressed()

    parent: Dict[Values, Optional[Values]] = {start.values: None}
    if is_target(start.values):
        return HomotopyResult(Outcome.YES, Fence.trivial(start), 1)
    queue = deque([start.values])
    expansions = 0
    while queue:
        current = queue.popleft()
        expansions += 1
        if expansions % 256 == 0 and budget.expired():
            logger.debug(f"deadline reached after {len(parent)} maps")
            return HomotopyResult(Outcome.INCONCLUSIVE, visited=len(parent))
        for x, fx in enumerate(current):
            moves = [v for v in up_codomain[fx] if all(leq(v, current[y]) for y in up_domain[x])]
            moves += [v for v in low_codomain[fx] if all(leq(current[y], v) for y in low_domain[x])]
            for v in moves:
                following = current[:x] + (v,) + current[x + 1:]
                if following in parent:
                    continue
                parent[following] = current
                if is_target(following):
                    return HomotopyResult(Outcome.YES, path_to(following), len(parent))
                queue.append(following)
        if len(parent) > limits.visited:
            logger.debug(f"visited cap of {limits.visited} maps reached")
            return HomotopyResult(Outcome.INCONCLUSIVE, visited=len(parent))
    return HomotopyResult(Outcome.NO, visited=len(parent))


def _towards_cores(f: ContinuousMap, source: CoreRetraction, target: CoreRetraction) -> Fence:
    """Fence from f to ι_X R_X f ι_Q R_Q."""
    outer = target.chain().compose_right(f)
    inner = source.chain().compose_left(outer.last)
    return outer.concatenate(inner)


def _core_map(f: ContinuousMap, source: CoreRetraction, target: CoreRetraction) -> ContinuousMap:
    return target.retraction().compose(f).compose(source.core_inclusion())


def _lift(
    core_fence: Fence,
    f: ContinuousMap,
    source: CoreRetraction,
    target: CoreRetraction,
    g: Optional[ContinuousMap] = None,
) -> Fence:
    middle = core_fence.compose_right(source.retraction()).compose_left(target.core_inclusion())
    fence = _towards_cores(f, source, target).concatenate(middle)
    if g is not None:
        fence = fence.concatenate(_towards_cores(g, source, target).reversed())
    return fence.compressed()


def _resolve(limits: Optional[Limits], budget: Optional[Budget]) -> Tuple[Limits, Budget]:
    if budget is not None:
        return limits or budget.limits, budget
    limits = limits or Limits.from_settings()
    return limits, Budget.start(limits)


def homotopic(
    f: ContinuousMap,
    g: ContinuousMap,
    limits: Optional[Limits] = None,
    budget: Optional[Budget] = None,
    reduce_to_cores: Optional[bool] = None,
) -> HomotopyResult:
    """
    Decide f ≃ g.

    YES comes with a fence from f to g. NO means the whole component of f was
    enumerated without meeting g. INCONCLUSIVE means a limit was hit first.
    """
    if f.domain != g.domain or f.codomain != g.codomain:
        raise ParameterError("homotopic maps must share domain and codomain")
    limits, budget = _resolve(limits, budget)
    if f.values == g.values:
        return HomotopyResult(Outcome.YES, Fence.trivial(f), 1)
    if reduce_to_cores is None:
        reduce_to_cores = settings.reduce_to_cores

    if not reduce_to_cores:
        result = _explore(f, lambda values: values == g.values, limits, budget)
    else:
        source, target = core_retraction(f.domain), core_retraction(f.codomain)
        f_core, g_core = _core_map(f, source, target), _core_map(g, source, target)
        result = _explore(f_core, lambda values: values == g_core.values, limits, budget)
        if result.found:
            result.fence = _lift(result.fence, f, source, target, g)
    budget.record(result.visited, result.outcome is not Outcome.INCONCLUSIVE)
    return result


def is_nullhomotopic_inclusion(
    block: PointSet,
    limits: Optional[Limits] = None,
    budget: Optional[Budget] = None,
    reduce_to_cores: Optional[bool] = None,
) -> HomotopyResult:
    """Decide whether Q ↪ X is homotopic to a constant map; YES carries the fence."""
    if not block.mask or not block.is_open:
        raise ParameterError("nullhomotopy is decided for nonempty open sets only")
    limits, budget = _resolve(limits, budget)
    if reduce_to_cores is None:
        reduce_to_cores = settings.reduce_to_cores

    def is_constant(values: Values) -> bool:
        return len(set(values)) == 1

    start = inclusion(block)
    if not reduce_to_cores:
        result = _explore(start, is_constant, limits, budget)
    else:
        source, target = core_retraction(start.domain), core_retraction(start.codomain)
        result = _explore(_core_map(start, source, target), is_constant, limits, budget)
        if result.found:
            result.fence = _lift(result.fence, start, source, target)
    budget.record(result.visited, result.outcome is not Outcome.INCONCLUSIVE)
    return result


# =============================================================================
# CERTIFICATES
# =============================================================================

@dataclass(frozen=True)
class NullhomotopyCertificate:
    """Fence from the inclusion of an open block to a constant map."""

    block: PointSet
    fence: Fence

    def verify(self) -> List[str]:
        problems = []
        if not self.block.mask or not self.block.is_open:
            problems.append("block is empty or not open")
            return problems
        expected = inclusion(self.block)
        if self.fence.domain != expected.domain or self.fence.codomain != self.block.space:
            return problems + ["fence does not run from the block into the space"]
        if self.fence.first.values != expected.values:
            problems.append("fence does not start at the inclusion")
        if not self.fence.last.is_constant():
            problems.append("fence does not end at a constant map")
        return problems + check_fence(self.fence)

    def restrict(self, sub_block: PointSet) -> "NullhomotopyCertificate":
        """Certificate for an open sub-block, by restricting every map of the fence."""
        local = PointSet(self.fence.domain, relative_mask(self.block.mask, sub_block.mask))
        return NullhomotopyCertificate(sub_block, self.fence.restrict(local))


@dataclass(frozen=True)
class PlannerCertificate:
    """Fence from pr1|Q to pr2|Q for an open Q ⊆ X × X: a motion planner on Q."""

    block: PointSet
    fence: Fence

    def verify(self) -> List[str]:
        problems = []
        factors = self.block.space.factors
        if factors is None or factors[0] != factors[1]:
            return ["planner blocks live in a square X × X"]
        if not self.block.mask or not self.block.is_open:
            return ["block is empty or not open"]
        pr1, pr2 = projection_maps(self.block)
        if self.fence.domain != pr1.domain or self.fence.codomain != factors[0]:
            return ["fence does not run from the block into X"]
        if self.fence.first.values != pr1.values:
            problems.append("fence does not start at the first projection")
        if self.fence.last.values != pr2.values:
            problems.append("fence does not end at the second projection")
        return problems + check_fence(self.fence)

    def restrict(self, sub_block: PointSet) -> "PlannerCertificate":
        local = PointSet(self.fence.domain, relative_mask(self.block.mask, sub_block.mask))
        return PlannerCertificate(sub_block, self.fence.restrict(local))


@dataclass
class PlannerResult:
    outcome: Outcome
    certificate: Optional[PlannerCertificate] = None
    reason: Optional[RefutationReason] = None
    visited: int = 0


@dataclass
class NullhomotopyResult:
    outcome: Outcome
    certificate: Optional[NullhomotopyCertificate] = None
    reason: Optional[RefutationReason] = None
    visited: int = 0


def admits_planner(
    block: PointSet,
    limits: Optional[Limits] = None,
    budget: Optional[Budget] = None,
    reduce_to_cores: Optional[bool] = None,
    contractible: Optional[bool] = None,
) -> PlannerResult:
    """Decide whether a continuous motion planner exists on an open Q ⊆ X × X."""
    factors = block.space.factors
    if factors is None or factors[0] != factors[1]:
        raise ParameterError("planner blocks must be subsets of a square X × X")
    if not block.mask or not block.is_open:
        raise ParameterError("planners are decided on nonempty open sets only")
    if row_column_obstruction(block, contractible):
        return PlannerResult(Outcome.NO, reason=RefutationReason.ROW_COLUMN)
    pr1, pr2 = projection_maps(block)
    result = homotopic(pr1, pr2, limits, budget, reduce_to_cores)
    if result.found:
        return PlannerResult(Outcome.YES, PlannerCertificate(block, result.fence), visited=result.visited)
    reason = RefutationReason.EXHAUSTION if result.outcome is Outcome.NO else None
    return PlannerResult(result.outcome, reason=reason, visited=result.visited)


def decide_nullhomotopy(
    block: PointSet,
    limits: Optional[Limits] = None,
    budget: Optional[Budget] = None,
    reduce_to_cores: Optional[bool] = None,
) -> NullhomotopyResult:
    """Categorical-block decision: obstruction on product spaces first, then the search."""
    if row_column_obstruction(block):
        return NullhomotopyResult(Outcome.NO, reason=RefutationReason.ROW_COLUMN)
    result = is_nullhomotopic_inclusion(block, limits, budget, reduce_to_cores)
    if result.found:
        return NullhomotopyResult(Outcome.YES, NullhomotopyCertificate(block, result.fence), visited=result.visited)
    reason = RefutationReason.EXHAUSTION if result.outcome is Outcome.NO else None
    return NullhomotopyResult(result.outcome, reason=reason, visited=result.visited)
