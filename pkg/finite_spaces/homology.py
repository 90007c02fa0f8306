"""
Order Complexes.

The order complex 𝒦(X) has the chains of X as simplices and is weakly
equivalent to X. Rational homology in degrees 0 and 1, together with the Euler
characteristic, is enough to recognise the wedges of circles that joins of
discrete spaces turn into.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import networkx as nx
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from config import settings
from finite_spaces.errors import ParameterError
from finite_spaces.space import FiniteSpace, bits, minimal_points

logger = logging.getLogger(__name__)

Simplex = Tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Vertices are point labels; a simplex is a tuple of vertex indices listed
    in increasing order of the underlying chain.
    """

    vertices: Tuple[str, ...]
    simplices: Tuple[Simplex, ...]

    @cached_property
    def by_dimension(self) -> Dict[int, List[Simplex]]:
        grouped: Dict[int, List[Simplex]] = {}
        for simplex in self.simplices:
            grouped.setdefault(len(simplex) - 1, []).append(simplex)
        return grouped

    @property
    def dimension(self) -> int:
        return max(self.by_dimension, default=-1)

    def count(self, dimension: int) -> int:
        return len(self.by_dimension.get(dimension, []))

    @cached_property
    def maximal_simplices(self) -> List[Simplex]:
        faces = {s[:i] + s[i + 1:] for s in self.simplices if len(s) > 1 for i in range(len(s))}
        return [s for s in self.simplices if s not in faces]

    def is_closed(self) -> bool:
        """Every face of a simplex is a simplex."""
        members = set(self.simplices)
        return all(s[:i] + s[i + 1:] in members for s in self.simplices if len(s) > 1 for i in range(len(s)))


# =============================================================================
# CONSTRUCTION
# =============================================================================

def chain_count(space: FiniteSpace) -> int:
    """Number of nonempty chains, counted without listing them."""
    ending_at = [0] * len(space)
    for x in space.linear_extension:
        ending_at[x] = 1 + sum(ending_at[y] for y in bits(space.down_mask(x) & ~(1 << x)))
    return sum(ending_at)


def maximal_chains(space: FiniteSpace) -> List[Simplex]:
    """Maximal chains: Hasse paths from a minimal to a maximal point."""
    found: List[Simplex] = []

    def walk(path: List[int]) -> None:
        above = space.upper_covers[path[-1]]
        if not above:
            found.append(tuple(path))
            return
        for y in above:
            walk(path + [y])

    for x in minimal_points(space).indices():
        walk([x])
    return found


def order_complex(space: FiniteSpace, max_simplices: Optional[int] = None) -> SimplicialComplex:
    """All chains of the space, obtained by closing the maximal chains downward."""
    limit = settings.max_simplices if max_simplices is None else max_simplices
    total = chain_count(space)
    if total > limit:
        raise ParameterError(f"order complex has {total} simplices, more than the limit of {limit}")
    simplices = set()
    for chain in maximal_chains(space):
        for size in range(1, len(chain) + 1):
            simplices.update(combinations(chain, size))
    ordered = tuple(sorted(simplices, key=lambda s: (len(s), s)))
    logger.debug(f"order complex of {space!r}: {len(ordered)} simplices")
    return SimplicialComplex(space.points, ordered)


# =============================================================================
# INVARIANTS
# =============================================================================

def euler_characteristic(complex_: SimplicialComplex) -> int:
    return sum((-1) ** (len(s) - 1) for s in complex_.simplices)


def _boundary_rank(complex_: SimplicialComplex, dimension: int) -> int:
    """Rank over ℚ of the boundary map from dimension to dimension - 1."""
    faces = complex_.by_dimension.get(dimension - 1, [])
    cells = complex_.by_dimension.get(dimension, [])
    if not faces or not cells:
        return 0
    row_of = {face: i for i, face in enumerate(faces)}
    rows = [[QQ(0)] * len(cells) for _ in faces]
    for j, cell in enumerate(cells):
        for i in range(len(cell)):
            rows[row_of[cell[:i] + cell[i + 1:]]][j] = QQ((-1) ** i)
    return DomainMatrix(rows, (len(faces), len(cells)), QQ).rank()


def betti(complex_: SimplicialComplex) -> Tuple[int, int]:
    """(b0, b1) over ℚ. Higher Betti numbers are not computed."""
    if complex_.dimension > 2:
        logger.debug(f"complex of dimension {complex_.dimension}: only b0 and b1 are computed")
    vertices, edges = complex_.count(0), complex_.count(1)
    rank_1 = _boundary_rank(complex_, 1)
    rank_2 = _boundary_rank(complex_, 2)
    return vertices - rank_1, edges - rank_1 - rank_2


def one_skeleton(complex_: SimplicialComplex) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(s[0] for s in complex_.by_dimension.get(0, []))
    graph.add_edges_from(complex_.by_dimension.get(1, []))
    return graph


def graph_first_betti(complex_: SimplicialComplex) -> int:
    """E - V + C, the cycle rank of the 1-skeleton."""
    graph = one_skeleton(complex_)
    return graph.number_of_edges() - graph.number_of_nodes() + nx.number_connected_components(graph)


# =============================================================================
# McCORD VERTEX MAP
# =============================================================================

@dataclass(frozen=True)
class McCordTable:
    """Each simplex (a chain) sent to its minimum, the image of its barycenter."""

    space: FiniteSpace
    images: Dict[Simplex, int]

    def labels(self) -> Dict[Tuple[str, ...], str]:
        label = self.space.label
        return {tuple(label(v) for v in s): label(m) for s, m in self.images.items()}

    def check_monotone(self) -> List[str]:
        """Every face of σ maps to a point comparable with, and not below, min(σ)."""
        problems = []
        for simplex, image in self.images.items():
            for size in range(1, len(simplex)):
                for face in combinations(simplex, size):
                    face_image = self.images.get(face)
                    if face_image is None:
                        problems.append(f"face {face} of {simplex} has no image")
                    elif not self.space.leq(image, face_image):
                        problems.append(f"face {face} maps below the image of {simplex}")
        return problems


def mccord_vertex_map(space: FiniteSpace, complex_: Optional[SimplicialComplex] = None) -> McCordTable:
    complex_ = complex_ or order_complex(space)
    return McCordTable(space, {s: s[0] for s in complex_.simplices})
