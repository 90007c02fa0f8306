"""
Space Constructors.

Builds the model spaces and the operations on spaces:
- discrete(n), interval_model(m) (the fence J_m), circle_model(n) (𝕊¹ₙ, 2n points),
  sphere_model(n) (𝕊ⁿ, 2n+2 points)
- product, opposite, non-Hausdorff join and suspension, wedge at extremal points

Generated labels follow the usual naming: x_i / y_i for circle and sphere
points, x_i for the interval, (a,b) for product points. When the spaces being
joined or wedged share labels, the labels of the i-th space get an ``i:`` prefix;
a join of two discrete spaces is labelled x_i below y_j instead.
"""

import logging
from typing import List, Sequence, Tuple

from finite_spaces.errors import ParameterError, WedgeBasepointError
from finite_spaces.space import FiniteSpace, KindName, SpaceKind, bits

logger = logging.getLogger(__name__)


# =============================================================================
# MODEL SPACES
# =============================================================================

def discrete(n: int) -> FiniteSpace:
    """n points, no nontrivial relations."""
    if n < 1:
        raise ParameterError(f"discrete space needs n >= 1, got {n}")
    return FiniteSpace(
        [f"p{i}" for i in range(n)],
        [1 << i for i in range(n)],
        kind=SpaceKind(KindName.DISCRETE, (n,)),
    )


def point() -> FiniteSpace:
    return discrete(1)


def interval_model(m: int) -> FiniteSpace:
    """J_m = x0 <= x1 >= x2 <= ... with m+1 points; odd points are maximal."""
    if m < 0:
        raise ParameterError(f"interval model needs m >= 0, got {m}")
    down = []
    for i in range(m + 1):
        mask = 1 << i
        if i % 2 == 1:
            mask |= 1 << (i - 1)
            if i + 1 <= m:
                mask |= 1 << (i + 1)
        down.append(mask)
    return FiniteSpace([f"x{i}" for i in range(m + 1)], down, kind=SpaceKind(KindName.INTERVAL, (m,)))


def circle_model(n: int) -> FiniteSpace:
    """
    𝕊¹ₙ on x0, y0, x1, y1, ... with x_i↓ = {x_i} and y_i↓ = {y_i, x_i, x_(i-1 mod n)}.

    circle_model(2) is the minimal 4-point circle.
    """
    if n < 2:
        raise ParameterError(f"circle model needs n >= 2, got {n}")
    labels: List[str] = []
    down: List[int] = []
    for i in range(n):
        labels += [f"x{i}", f"y{i}"]
        x_prev = 2 * ((i - 1) % n)
        down += [1 << (2 * i), (1 << (2 * i + 1)) | (1 << (2 * i)) | (1 << x_prev)]
    return FiniteSpace(labels, down, kind=SpaceKind(KindName.CIRCLE, (n,)))


def sphere_model(n: int) -> FiniteSpace:
    """Minimal finite n-sphere: iterated suspension of the two-point discrete space."""
    if n < 0:
        raise ParameterError(f"sphere model needs n >= 0, got {n}")
    space = discrete(2).relabel(["x0", "y0"])
    for level in range(1, n + 1):
        space = nh_join(space, discrete(2).relabel([f"x{level}", f"y{level}"]))
    return space.with_kind(SpaceKind(KindName.SPHERE, (n,)))


# =============================================================================
# OPERATIONS
# =============================================================================

def product(a: FiniteSpace, b: FiniteSpace) -> FiniteSpace:
    """Product order, points in lexicographic order (left factor major)."""
    nb = len(b)
    labels = [f"({pa},{pb})" for pa in a.points for pb in b.points]
    down = []
    for i in range(len(a)):
        for j in range(nb):
            mask = 0
            for k in bits(a.down_mask(i)):
                mask |= b.down_mask(j) << (k * nb)
            down.append(mask)
    return FiniteSpace(labels, down, kind=SpaceKind(KindName.PRODUCT, (a.kind, b.kind)), factors=(a, b))


def opposite(space: FiniteSpace) -> FiniteSpace:
    """Reverse the order; open and closed points swap."""
    hasse = sorted((above, below) for below, above in space.hasse)
    return FiniteSpace(space.points, space.up_masks, hasse=hasse, kind=SpaceKind(KindName.OPPOSITE, (space.kind,)))


def _disjoint_labels(spaces: Sequence[FiniteSpace]) -> List[List[str]]:
    flat = [p for s in spaces for p in s.points]
    if len(set(flat)) == len(flat):
        return [list(s.points) for s in spaces]
    return [[f"{i}:{p}" for p in s.points] for i, s in enumerate(spaces)]


def _join_labels(x: FiniteSpace, y: FiniteSpace) -> Tuple[List[str], List[str]]:
    if set(x.points).isdisjoint(y.points):
        return list(x.points), list(y.points)
    if x.kind.name is KindName.DISCRETE and y.kind.name is KindName.DISCRETE:
        # lower points x_i, upper points y_j
        return [f"x{i}" for i in range(len(x))], [f"y{j}" for j in range(len(y))]
    left, right = _disjoint_labels([x, y])
    return left, right


def nh_join(x: FiniteSpace, y: FiniteSpace) -> FiniteSpace:
    """
    X ⊛ Y: disjoint union with every point of X below every point of Y.

    Clashing labels are prefixed with the operand position, except for two
    discrete operands, which are labelled x0, x1, ... below y0, y1, ...
    """
    left, right = _join_labels(x, y)
    shift = len(x)
    everything_in_x = x.full_mask
    down = list(x.down_masks) + [(mask << shift) | everything_in_x for mask in y.down_masks]
    return FiniteSpace(left + right, down, kind=SpaceKind(KindName.JOIN, (x.kind, y.kind)))


def nh_suspension(x: FiniteSpace) -> FiniteSpace:
    """X ⊛ 𝕊⁰."""
    return nh_join(x, discrete(2)).with_kind(SpaceKind(KindName.SUSPENSION, (x.kind,)))


def wedge(spaces: Sequence[FiniteSpace], basepoints: Sequence[str]) -> FiniteSpace:
    """
    Disjoint union with the basepoints identified to one point.

    The basepoints must be all maximal or all minimal; identifying other points
    can produce a preorder that is not a poset, so those are rejected.
    The wedge point keeps the first basepoint's label.
    """
    if not spaces or len(spaces) != len(basepoints):
        raise ParameterError("wedge needs one basepoint per space")
    base = [s.index(b) for s, b in zip(spaces, basepoints)]
    all_maximal = all(s.up_mask(i) == 1 << i for s, i in zip(spaces, base))
    all_minimal = all(s.down_mask(i) == 1 << i for s, i in zip(spaces, base))
    if not (all_maximal or all_minimal):
        raise WedgeBasepointError(
            f"wedge basepoints {list(basepoints)} must all be maximal or all be minimal"
        )

    others = [[p for k, p in enumerate(s.points) if k != i] for s, i in zip(spaces, base)]
    flat = [basepoints[0]] + [p for group in others for p in group]
    if len(set(flat)) != len(flat):
        others = [group if n == 0 else [f"{n}:{p}" for p in group] for n, group in enumerate(others)]

    labels: List[str] = []
    index_maps: List[List[int]] = []
    for n, (s, i) in enumerate(zip(spaces, base)):
        local_to_global = []
        remaining = iter(others[n])
        for k in range(len(s)):
            if k == i and n > 0:
                local_to_global.append(index_maps[0][base[0]])
                continue
            labels.append(basepoints[0] if (k == i and n == 0) else next(remaining))
            local_to_global.append(len(labels) - 1)
        index_maps.append(local_to_global)

    relations = []
    for s, local_to_global in zip(spaces, index_maps):
        for k in range(len(s)):
            for j in bits(s.down_mask(k)):
                relations.append((labels[local_to_global[j]], labels[local_to_global[k]]))

    kind = SpaceKind(KindName.WEDGE, tuple(s.kind for s in spaces), tuple(basepoints))
    logger.debug(f"wedge of {len(spaces)} spaces at {list(basepoints)}: {len(labels)} points")
    return FiniteSpace.from_relations(labels, relations, kind=kind)


def circle_antidiagonal(n: int) -> Tuple[FiniteSpace, int, int]:
    """
    𝕊¹ₙ × 𝕊¹ₙ with two masks: the antidiagonal pairs and their upward closure D.

    The antipode of x_i is x_(i + n//2 mod n) and of y_i is y_(i + n//2 mod n).
    """
    space = circle_model(n)
    target = product(space, space)
    shift = n // 2
    width = len(space)
    pairs = 0
    for i in range(n):
        j = (i + shift) % n
        for offset in (0, 1):
            pairs |= 1 << ((2 * i + offset) * width + 2 * j + offset)
    closed = 0
    for i in bits(pairs):
        closed |= target.up_mask(i)
    return target, pairs, closed
