"""
Continuous Maps and Fences.

A map between finite T0 spaces is continuous exactly when it is order
preserving. Two maps are homotopic when a fence connects them:

    f = f0 <= f1 >= f2 <= ... f_k = g

with each consecutive pair comparable pointwise. A fence with k+1 maps is the
same thing as a continuous map domain × J_k → codomain once its directions
alternate (see ``Fence.alternating``).

This module provides:
- ContinuousMap: values stored as codomain indices in domain point order
- Direction / Fence: the zigzag, with concatenation, reversal, restriction to
  an open subset and composition with maps on either side
- check_fence: the independent verifier used for every certificate
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Mapping, Sequence, Tuple, Union

from finite_spaces.constructors import interval_model, product
from finite_spaces.space import FiniteSpace, PointSet, bits

logger = logging.getLogger(__name__)


def relative_mask(outer: int, inner: int) -> int:
    """Re-express inner (a subset of outer) in the bit positions of the subspace on outer."""
    local = 0
    for position, i in enumerate(bits(outer)):
        if inner >> i & 1:
            local |= 1 << position
    return local


# =============================================================================
# CONTINUOUS MAPS
# =============================================================================

@dataclass(frozen=True)
class ContinuousMap:
    """
    A total point map ``domain -> codomain``.

    ``values[i]`` is the codomain index of the image of domain point i.
    Continuity is not enforced on construction; ``is_continuous`` checks it, and
    ``check_fence`` checks every map of a certificate.
    """

    domain: FiniteSpace
    codomain: FiniteSpace
    values: Tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.domain):
            raise ValueError(f"map needs {len(self.domain)} values, got {len(self.values)}")
        if any(not 0 <= v < len(self.codomain) for v in self.values):
            raise ValueError("map value outside its codomain")

    @classmethod
    def from_labels(
        cls,
        domain: FiniteSpace,
        codomain: FiniteSpace,
        assignment: Union[Mapping[str, str], Sequence[str]],
    ) -> "ContinuousMap":
        """Build from a label mapping, or from image labels listed in domain order."""
        if isinstance(assignment, Mapping):
            images = [assignment[p] for p in domain.points]
        else:
            images = list(assignment)
        return cls(domain, codomain, tuple(codomain.index(label) for label in images))

    def __call__(self, label: str) -> str:
        return self.codomain.label(self.values[self.domain.index(label)])

    def labels(self) -> List[str]:
        return [self.codomain.label(v) for v in self.values]

    def discontinuities(self) -> List[Tuple[str, str]]:
        """Hasse covers a < b of the domain with f(a) not <= f(b)."""
        return [
            (self.domain.label(a), self.domain.label(b))
            for a, b in self.domain.hasse
            if not self.codomain.leq(self.values[a], self.values[b])
        ]

    def is_continuous(self) -> bool:
        return all(self.codomain.leq(self.values[a], self.values[b]) for a, b in self.domain.hasse)

    def compose(self, inner: "ContinuousMap") -> "ContinuousMap":
        """self ∘ inner."""
        if inner.codomain != self.domain:
            raise ValueError("cannot compose: codomain and domain differ")
        return ContinuousMap(inner.domain, self.codomain, tuple(self.values[v] for v in inner.values))

    def restrict(self, subset: PointSet) -> "ContinuousMap":
        """Restriction to a subset of the domain, viewed as a subspace."""
        if subset.space != self.domain:
            raise ValueError("restriction set belongs to another space")
        return ContinuousMap(subset.as_space(), self.codomain, tuple(self.values[i] for i in bits(subset.mask)))

    def is_constant(self) -> bool:
        return len(set(self.values)) <= 1

    def below(self, other: "ContinuousMap") -> bool:
        """Pointwise self <= other."""
        return all(self.codomain.leq(a, b) for a, b in zip(self.values, other.values))


def identity(space: FiniteSpace) -> ContinuousMap:
    return ContinuousMap(space, space, tuple(range(len(space))))


def constant(domain: FiniteSpace, codomain: FiniteSpace, value: int) -> ContinuousMap:
    return ContinuousMap(domain, codomain, (value,) * len(domain))


def inclusion(subset: PointSet) -> ContinuousMap:
    """The inclusion of an open (or any) subset, as a map from its subspace."""
    return ContinuousMap(subset.as_space(), subset.space, tuple(bits(subset.mask)))


# =============================================================================
# FENCES
# =============================================================================

class Direction(str, Enum):
    """How map i relates to map i+1 in a fence."""

    LE = "le"
    GE = "ge"

    def flipped(self) -> "Direction":
        return Direction.GE if self is Direction.LE else Direction.LE


def _direction(f: ContinuousMap, g: ContinuousMap) -> Direction:
    if f.below(g):
        return Direction.LE
    if g.below(f):
        return Direction.GE
    raise ValueError("consecutive fence maps are not comparable")


@dataclass(frozen=True)
class Fence:
    """
    A zigzag of pointwise-comparable continuous maps.

    ``dirs[i]`` relates ``maps[i]`` to ``maps[i+1]``; a single map is the
    trivial fence.
    """

    maps: Tuple[ContinuousMap, ...]
    dirs: Tuple[Direction, ...]

    def __post_init__(self):
        if not self.maps:
            raise ValueError("a fence has at least one map")
        if len(self.dirs) != len(self.maps) - 1:
            raise ValueError("a fence needs one direction per consecutive pair")

    @classmethod
    def trivial(cls, f: ContinuousMap) -> "Fence":
        return cls((f,), ())

    @classmethod
    def from_path(cls, maps: Iterable[ContinuousMap]) -> "Fence":
        """Fence through the given maps; repeated maps are dropped, directions inferred."""
        path: List[ContinuousMap] = []
        for f in maps:
            if not path or path[-1].values != f.values:
                path.append(f)
        if not path:
            raise ValueError("a fence has at least one map")
        dirs = tuple(_direction(a, b) for a, b in zip(path, path[1:]))
        return cls(tuple(path), dirs)

    @property
    def domain(self) -> FiniteSpace:
        return self.maps[0].domain

    @property
    def codomain(self) -> FiniteSpace:
        return self.maps[0].codomain

    @property
    def first(self) -> ContinuousMap:
        return self.maps[0]

    @property
    def last(self) -> ContinuousMap:
        return self.maps[-1]

    def __len__(self) -> int:
        return len(self.maps)

    def reversed(self) -> "Fence":
        return Fence(self.maps[::-1], tuple(d.flipped() for d in reversed(self.dirs)))

    def concatenate(self, other: "Fence") -> "Fence":
        """This fence followed by other; the end of one must be the start of the other."""
        if self.last.values != other.first.values:
            raise ValueError("fences do not meet: last map differs from the next first map")
        return Fence(self.maps + other.maps[1:], self.dirs + other.dirs)

    def restrict(self, subset: PointSet) -> "Fence":
        """Restrict every map to a subset of the domain; comparabilities survive."""
        return Fence(tuple(f.restrict(subset) for f in self.maps), self.dirs)

    def compose_left(self, outer: ContinuousMap) -> "Fence":
        """outer ∘ f_t. Order-preserving outer keeps every direction."""
        return Fence(tuple(outer.compose(f) for f in self.maps), self.dirs)

    def compose_right(self, inner: ContinuousMap) -> "Fence":
        """f_t ∘ inner."""
        return Fence(tuple(f.compose(inner) for f in self.maps), self.dirs)

    def compressed(self) -> "Fence":
        """Drop repeated maps and merge runs in one direction (the order is transitive)."""
        maps = [self.maps[0]]
        dirs: List[Direction] = []
        for f, d in zip(self.maps[1:], self.dirs):
            if f.values == maps[-1].values:
                continue
            if dirs and dirs[-1] is d:
                maps[-1] = f
            else:
                maps.append(f)
                dirs.append(d)
        return Fence(tuple(maps), tuple(dirs))

    def alternating(self) -> "Fence":
        """
        Equivalent fence whose directions read le, ge, le, ...

        A repeated map satisfies both directions, so one is inserted wherever
        the pattern would break.
        """
        maps = [self.maps[0]]
        dirs: List[Direction] = []
        for f, d in zip(self.maps[1:], self.dirs):
            expected = Direction.LE if len(dirs) % 2 == 0 else Direction.GE
            if d is not expected:
                maps.append(maps[-1])
                dirs.append(expected)
            maps.append(f)
            dirs.append(d)
        return Fence(tuple(maps), tuple(dirs))


def check_fence(fence: Fence) -> List[str]:
    """Re-verify a fence from scratch; returns the problems found (empty when valid)."""
    problems: List[str] = []
    domain, codomain = fence.domain, fence.codomain
    if len(fence.dirs) != len(fence.maps) - 1:
        problems.append("direction count does not match the number of steps")
    for position, f in enumerate(fence.maps):
        if f.domain != domain or f.codomain != codomain:
            problems.append(f"map {position} has a different domain or codomain")
            continue
        broken = f.discontinuities()
        if broken:
            a, b = broken[0]
            problems.append(f"map {position} is not order preserving on {a} <= {b}")
    for position, (f, g, d) in enumerate(zip(fence.maps, fence.maps[1:], fence.dirs)):
        if len(f.values) != len(g.values):
            continue
        holds = f.below(g) if d is Direction.LE else g.below(f)
        if not holds:
            problems.append(f"maps {position} and {position + 1} are not related by {d.value}")
    return problems


# =============================================================================
# INTERVAL MODELS
# =============================================================================

def fence_to_interval_map(fence: Fence) -> ContinuousMap:
    """The map domain × J_k → codomain, (q, x_i) ↦ f_i(q), of the alternating fence."""
    steps = fence.alternating()
    k = len(steps) - 1
    interval = interval_model(k)
    source = product(steps.domain, interval)
    values = tuple(steps.maps[i].values[q] for q in range(len(steps.domain)) for i in range(k + 1))
    return ContinuousMap(source, steps.codomain, values)


def interval_map_to_fence(homotopy: ContinuousMap) -> Fence:
    """Read the alternating fence back off a map Q × J_k → X built by ``product``."""
    factors = homotopy.domain.factors
    if factors is None:
        raise ValueError("interval maps are defined on a product Q × J_k")
    domain, interval = factors
    width = len(interval)
    maps = tuple(
        ContinuousMap(domain, homotopy.codomain, tuple(homotopy.values[q * width + i] for q in range(len(domain))))
        for i in range(width)
    )
    dirs = tuple(Direction.LE if i % 2 == 0 else Direction.GE for i in range(width - 1))
    return Fence(maps, dirs)
