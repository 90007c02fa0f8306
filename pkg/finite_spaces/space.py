"""
Finite T0 Spaces.

A finite T0 space is stored as a partial order on named points. The open sets
are the down-closed subsets, and the minimal open neighbourhood of a point x is
its downset x↓ = {y : y <= x}.

This module provides:
- FiniteSpace: points plus the order, kept both as Hasse covers and as a closed
  comparability matrix (one bitmask per point)
- PointSet: a subset of the points of one space
- SpaceKind: construction provenance, which doubles as the syntax tree of the
  constructor language (see finite_spaces.expressions)
- the point-level queries (downsets, openness, connectivity, extremal points,
  validation, open-set enumeration, isomorphism)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from finite_spaces.errors import InvalidSpaceError, UnknownPointError

logger = logging.getLogger(__name__)


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# =============================================================================
# CONSTRUCTION PROVENANCE
# =============================================================================

class KindName(str, Enum):
    """Constructor names, spelled the way the constructor language spells them."""

    EXPLICIT = "explicit"
    DISCRETE = "discrete"
    INTERVAL = "interval"
    CIRCLE = "circle"
    SPHERE = "sphere"
    PRODUCT = "product"
    OPPOSITE = "op"
    JOIN = "join"
    SUSPENSION = "suspension"
    WEDGE = "wedge"


NUMERIC_KINDS = (KindName.DISCRETE, KindName.INTERVAL, KindName.CIRCLE, KindName.SPHERE)


@dataclass(frozen=True)
class SpaceKind:
    """How a space was built. Purely informational for the engine."""

    name: KindName
    args: tuple = ()
    basepoints: Tuple[Optional[str], ...] = ()

    @property
    def is_composite(self) -> bool:
        return self.name not in NUMERIC_KINDS and self.name is not KindName.EXPLICIT

    def __str__(self) -> str:
        if self.name is KindName.EXPLICIT:
            return self.name.value
        rendered = []
        for position, arg in enumerate(self.args):
            text = str(arg)
            if isinstance(arg, SpaceKind) and arg.is_composite:
                text = f"({text})"
            if self.basepoints and self.basepoints[position] is not None:
                text = f"{text}@{self.basepoints[position]}"
            rendered.append(text)
        return f"{self.name.value}:{','.join(rendered)}"


EXPLICIT = SpaceKind(KindName.EXPLICIT)


# =============================================================================
# FINITE SPACE
# =============================================================================

class FiniteSpace:
    """
    A finite T0 space on labelled points.

    Point i is identified with bit i. ``down_mask(i)`` is the downset of point i
    (reflexive), ``up_mask(i)`` its upset. Hasse covers are kept as
    ``(below, above)`` index pairs. Instances are immutable after construction.

    The constructor trusts its input; use ``FiniteSpace.from_relations`` to build
    from an arbitrary relation (closure, re-minimisation and T0 check included).
    """

    def __init__(
        self,
        points: Sequence[str],
        down: Sequence[int],
        hasse: Optional[Iterable[Tuple[int, int]]] = None,
        kind: Optional[SpaceKind] = None,
        factors: Optional[Tuple["FiniteSpace", "FiniteSpace"]] = None,
    ):
        self._points = tuple(points)
        self._index = {label: i for i, label in enumerate(self._points)}
        if len(self._index) != len(self._points):
            duplicates = sorted({p for p in self._points if self._points.count(p) > 1})
            raise InvalidSpaceError(f"duplicate point labels: {duplicates}")
        if len(down) != len(self._points):
            raise InvalidSpaceError("one downset mask per point is required")
        self._down = tuple(down)
        up = [0] * len(self._points)
        for i, mask in enumerate(self._down):
            for j in bits(mask):
                up[j] |= 1 << i
        self._up = tuple(up)
        self._hasse = tuple(hasse) if hasse is not None else self._covers_from_closure()
        self.kind = kind or EXPLICIT
        # Set only by product(); projections and the row/column obstruction need it.
        self.factors = factors

    @classmethod
    def from_relations(
        cls,
        points: Sequence[str],
        relations: Iterable[Tuple[str, str]],
        kind: Optional[SpaceKind] = None,
    ) -> "FiniteSpace":
        """
        Build a space from ``(below, above)`` label pairs.

        The pairs may contain transitive or reflexive edges; the order is closed
        and the Hasse diagram re-minimised. A cycle means the relation is not
        antisymmetric (not T0) and is reported with an offending pair.
        """
        labels = list(points)
        seen = set()
        for label in labels:
            if label in seen:
                raise InvalidSpaceError(f"duplicate point label: {label!r}")
            seen.add(label)
        index = {label: i for i, label in enumerate(labels)}

        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(labels)))
        for below, above in relations:
            for label in (below, above):
                if label not in index:
                    raise UnknownPointError(label)
            if below != above:
                graph.add_edge(index[below], index[above])

        if not nx.is_directed_acyclic_graph(graph):
            a, b = nx.find_cycle(graph)[0][:2]
            raise InvalidSpaceError(
                f"relation is not antisymmetric (not T0): {labels[a]!r} <= {labels[b]!r} "
                f"and {labels[b]!r} <= {labels[a]!r}",
                pair=(labels[a], labels[b]),
            )

        down = [1 << i for i in range(len(labels))]
        for a, b in nx.transitive_closure_dag(graph).edges:
            down[b] |= 1 << a
        hasse = sorted(nx.transitive_reduction(graph).edges)
        return cls(labels, down, hasse=hasse, kind=kind)

    def _covers_from_closure(self) -> Tuple[Tuple[int, int], ...]:
        covers = []
        for i, mask in enumerate(self._down):
            for j in bits(mask & ~(1 << i)):
                if mask & self._up[j] == (1 << i) | (1 << j):
                    covers.append((j, i))
        return tuple(sorted(covers))

    # ----- basic accessors -----

    @property
    def points(self) -> Tuple[str, ...]:
        return self._points

    @property
    def hasse(self) -> Tuple[Tuple[int, int], ...]:
        return self._hasse

    @property
    def full_mask(self) -> int:
        return (1 << len(self._points)) - 1

    def __len__(self) -> int:
        return len(self._points)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownPointError(label) from None

    def label(self, i: int) -> str:
        return self._points[i]

    def down_mask(self, i: int) -> int:
        return self._down[i]

    def up_mask(self, i: int) -> int:
        return self._up[i]

    @property
    def down_masks(self) -> Tuple[int, ...]:
        return self._down

    @property
    def up_masks(self) -> Tuple[int, ...]:
        return self._up

    def leq(self, a: int, b: int) -> bool:
        """True when point a <= point b (indices)."""
        return bool(self._down[b] >> a & 1)

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    @cached_property
    def lower_covers(self) -> Tuple[Tuple[int, ...], ...]:
        covers: List[List[int]] = [[] for _ in self._points]
        for below, above in self._hasse:
            covers[above].append(below)
        return tuple(tuple(c) for c in covers)

    @cached_property
    def upper_covers(self) -> Tuple[Tuple[int, ...], ...]:
        covers: List[List[int]] = [[] for _ in self._points]
        for below, above in self._hasse:
            covers[below].append(above)
        return tuple(tuple(c) for c in covers)

    @cached_property
    def linear_extension(self) -> Tuple[int, ...]:
        # x < y implies x↓ is a proper subset of y↓, so sizes sort consistently
        return tuple(sorted(range(len(self)), key=lambda i: (bin(self._down[i]).count("1"), i)))

    @cached_property
    def heights(self) -> Tuple[int, ...]:
        """Length of the longest chain ending at each point (minimal points: 0)."""
        height = [0] * len(self)
        for i in self.linear_extension:
            height[i] = max((height[j] + 1 for j in self.lower_covers[i]), default=0)
        return tuple(height)

    # ----- derived spaces -----

    def subspace(self, mask: int) -> "FiniteSpace":
        """Induced subposet on the points of mask, in the parent's point order."""
        members = list(bits(mask))
        position = {g: k for k, g in enumerate(members)}
        down = []
        for g in members:
            local = 0
            for h in bits(self._down[g] & mask):
                local |= 1 << position[h]
            down.append(local)
        return FiniteSpace([self._points[g] for g in members], down)

    def relabel(self, labels: Sequence[str]) -> "FiniteSpace":
        return FiniteSpace(labels, self._down, hasse=self._hasse, kind=self.kind, factors=self.factors)

    def with_kind(self, kind: SpaceKind) -> "FiniteSpace":
        return FiniteSpace(self._points, self._down, hasse=self._hasse, kind=kind, factors=self.factors)

    def to_digraph(self) -> nx.DiGraph:
        """Hasse diagram as a networkx DiGraph on labels (edges point upwards)."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self._points)
        graph.add_edges_from((self._points[a], self._points[b]) for a, b in self._hasse)
        return graph

    # ----- identity -----

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteSpace):
            return NotImplemented
        return self._points == other._points and self._down == other._down

    def __hash__(self) -> int:
        return hash((self._points, self._down))

    def __repr__(self) -> str:
        return f"FiniteSpace({self.kind}, {len(self)} points)"


# =============================================================================
# POINT SETS
# =============================================================================

@dataclass(frozen=True)
class PointSet:
    """A subset of the points of one space, stored as a bitmask."""

    space: FiniteSpace
    mask: int

    def __post_init__(self):
        if self.mask & ~self.space.full_mask:
            raise ValueError("point set contains indices outside its space")

    @classmethod
    def of(cls, space: FiniteSpace, labels: Iterable[str]) -> "PointSet":
        mask = 0
        for label in labels:
            mask |= 1 << space.index(label)
        return cls(space, mask)

    def indices(self) -> List[int]:
        return list(bits(self.mask))

    def labels(self) -> List[str]:
        return [self.space.label(i) for i in bits(self.mask)]

    def __contains__(self, label: str) -> bool:
        return bool(self.mask >> self.space.index(label) & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels())

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __or__(self, other: "PointSet") -> "PointSet":
        return PointSet(self.space, self.mask | other.mask)

    def __and__(self, other: "PointSet") -> "PointSet":
        return PointSet(self.space, self.mask & other.mask)

    def __sub__(self, other: "PointSet") -> "PointSet":
        return PointSet(self.space, self.mask & ~other.mask)

    def complement(self) -> "PointSet":
        return PointSet(self.space, self.space.full_mask & ~self.mask)

    def issubset(self, other: "PointSet") -> bool:
        return not self.mask & ~other.mask

    @property
    def is_open(self) -> bool:
        return all(self.space.down_mask(i) & ~self.mask == 0 for i in bits(self.mask))

    def as_space(self) -> FiniteSpace:
        return self.space.subspace(self.mask)

    def __repr__(self) -> str:
        return f"PointSet({{{', '.join(self.labels())}}})"


# =============================================================================
# POINT-LEVEL QUERIES
# =============================================================================

def downset(space: FiniteSpace, x: str) -> PointSet:
    """Minimal open neighbourhood x↓ = {y : y <= x}."""
    return PointSet(space, space.down_mask(space.index(x)))


def upset(space: FiniteSpace, x: str) -> PointSet:
    """Closure x↑ = {y : y >= x}."""
    return PointSet(space, space.up_mask(space.index(x)))


def down_closure(space: FiniteSpace, mask: int) -> int:
    closed = 0
    for i in bits(mask):
        closed |= space.down_mask(i)
    return closed


def up_closure(space: FiniteSpace, mask: int) -> int:
    closed = 0
    for i in bits(mask):
        closed |= space.up_mask(i)
    return closed


def is_open(space: FiniteSpace, subset: PointSet) -> bool:
    if subset.space != space:
        raise ValueError("point set belongs to another space")
    return subset.is_open


def comparability_graph(space: FiniteSpace, mask: Optional[int] = None) -> nx.Graph:
    """Adjacency graph (x ∈ y↓ or y ∈ x↓) restricted to mask."""
    if mask is None:
        mask = space.full_mask
    graph = nx.Graph()
    graph.add_nodes_from(bits(mask))
    for i in bits(mask):
        for j in bits(space.down_mask(i) & mask & ~(1 << i)):
            graph.add_edge(i, j)
    return graph


def is_connected(space: FiniteSpace, subset: PointSet) -> bool:
    if not subset.mask:
        return False
    return nx.is_connected(comparability_graph(space, subset.mask))


def maximal_points(space: FiniteSpace) -> PointSet:
    mask = 0
    for i in range(len(space)):
        if space.up_mask(i) == 1 << i:
            mask |= 1 << i
    return PointSet(space, mask)


def minimal_points(space: FiniteSpace) -> PointSet:
    mask = 0
    for i in range(len(space)):
        if space.down_mask(i) == 1 << i:
            mask |= 1 << i
    return PointSet(space, mask)


def whole(space: FiniteSpace) -> PointSet:
    return PointSet(space, space.full_mask)


def open_sets(space: FiniteSpace) -> Iterator[PointSet]:
    """
    Stream every open (down-closed) subset exactly once, the empty set first.

    Points are decided along a linear extension; a point may join only once
    everything strictly below it already has.
    """
    order = space.linear_extension

    def extend(position: int, mask: int) -> Iterator[PointSet]:
        if position == len(order):
            yield PointSet(space, mask)
            return
        i = order[position]
        yield from extend(position + 1, mask)
        below = space.down_mask(i) & ~(1 << i)
        if below & mask == below:
            yield from extend(position + 1, mask | (1 << i))

    yield from extend(0, 0)


def is_isomorphic(a: FiniteSpace, b: FiniteSpace) -> bool:
    """Order isomorphism, decided on the Hasse diagrams."""
    if len(a) != len(b) or len(a.hasse) != len(b.hasse):
        return False
    return nx.is_isomorphic(a.to_digraph(), b.to_digraph())


# =============================================================================
# VALIDATION
# =============================================================================

@dataclass(frozen=True)
class Violation:
    axiom: str
    detail: str


@dataclass
class ValidationReport:
    """Every violated poset axiom; empty for a valid space."""

    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom: str, detail: str) -> None:
        self.violations.append(Violation(axiom, detail))


def _closure_of_hasse(space: FiniteSpace) -> List[int]:
    closed = [1 << i for i in range(len(space))]
    changed = True
    while changed:
        changed = False
        for below, above in space.hasse:
            merged = closed[above] | closed[below]
            if merged != closed[above]:
                closed[above] = merged
                changed = True
    return closed


def validate(space: FiniteSpace) -> ValidationReport:
    """Check reflexivity, antisymmetry, transitivity and Hasse/closure agreement."""
    report = ValidationReport()
    label = space.label
    if len(set(space.points)) != len(space.points):
        report.add("labels", "point labels are not unique")

    for i in range(len(space)):
        down = space.down_mask(i)
        if not down >> i & 1:
            report.add("reflexivity", f"{label(i)!r} is not <= itself")
        for j in bits(down & ~(1 << i)):
            if space.down_mask(j) >> i & 1 and j > i:
                report.add("antisymmetry", f"{label(j)!r} <= {label(i)!r} and {label(i)!r} <= {label(j)!r}")
            missing = space.down_mask(j) & ~down
            if missing:
                k = next(bits(missing))
                report.add(
                    "transitivity",
                    f"{label(k)!r} <= {label(j)!r} <= {label(i)!r} but not {label(k)!r} <= {label(i)!r}",
                )

    closed = _closure_of_hasse(space)
    for i in range(len(space)):
        if closed[i] != space.down_mask(i):
            report.add("hasse", f"closure of Hasse edges disagrees with the matrix at {label(i)!r}")
    for below, above in space.hasse:
        between = space.down_mask(above) & space.up_mask(below) & ~((1 << below) | (1 << above))
        if between:
            report.add("hasse", f"edge {label(below)!r} -> {label(above)!r} is not a cover relation")

    if report.violations:
        logger.debug(f"{space!r} failed validation with {len(report.violations)} violations")
    return report
