"""
Finite-space engine.

Exact homotopy computations on finite T0 spaces: spaces and constructors,
homotopy decisions with fence certificates, Lusternik-Schnirelmann category and
topological complexity with certified upper and lower bounds, order complexes,
and the JSON documents that carry all of it.
"""

from finite_spaces.budget import Budget, Limits
from finite_spaces.constructors import (
    circle_antidiagonal,
    circle_model,
    discrete,
    interval_model,
    nh_join,
    nh_suspension,
    opposite,
    point,
    product,
    sphere_model,
    wedge,
)
from finite_spaces.errors import (
    DocumentError,
    ExpressionError,
    FiniteSpaceError,
    InvalidSpaceError,
    ParameterError,
    UnknownPointError,
    WedgeBasepointError,
)
from finite_spaces.homology import (
    SimplicialComplex,
    betti,
    euler_characteristic,
    mccord_vertex_map,
    order_complex,
)
from finite_spaces.homotopy import (
    CoreRetraction,
    NullhomotopyCertificate,
    Outcome,
    PlannerCertificate,
    RefutationReason,
    admits_planner,
    beat_points,
    core,
    core_retraction,
    homotopic,
    is_contractible,
    is_nullhomotopic_inclusion,
    projection_maps,
    restrict,
    row_column_obstruction,
)
from finite_spaces.maps import ContinuousMap, Direction, Fence, check_fence
from finite_spaces.search import (
    BlockAssignment,
    BlockOracle,
    BoundsReport,
    Covering,
    ExhaustionRecord,
    ExplorationReport,
    Invariant,
    SearchReport,
    brute_force_value,
    cat,
    enumerate_block_assignments,
    explore_antidiagonal_cover,
    known_bounds,
    planner_from_nullhomotopy,
    planner_to_interval_map,
    product_covering,
    refute_assignment,
    tc,
)
from finite_spaces.space import (
    FiniteSpace,
    PointSet,
    SpaceKind,
    downset,
    is_connected,
    is_isomorphic,
    is_open,
    maximal_points,
    minimal_points,
    open_sets,
    upset,
    validate,
)

__all__ = [
    "BlockAssignment",
    "BlockOracle",
    "BoundsReport",
    "Budget",
    "ContinuousMap",
    "CoreRetraction",
    "Covering",
    "Direction",
    "DocumentError",
    "ExhaustionRecord",
    "ExplorationReport",
    "ExpressionError",
    "Fence",
    "FiniteSpace",
    "FiniteSpaceError",
    "InvalidSpaceError",
    "Invariant",
    "Limits",
    "NullhomotopyCertificate",
    "Outcome",
    "ParameterError",
    "PlannerCertificate",
    "PointSet",
    "RefutationReason",
    "SearchReport",
    "SimplicialComplex",
    "SpaceKind",
    "UnknownPointError",
    "WedgeBasepointError",
    "admits_planner",
    "beat_points",
    "betti",
    "brute_force_value",
    "cat",
    "check_fence",
    "circle_antidiagonal",
    "circle_model",
    "core",
    "core_retraction",
    "discrete",
    "downset",
    "enumerate_block_assignments",
    "euler_characteristic",
    "explore_antidiagonal_cover",
    "homotopic",
    "interval_model",
    "is_connected",
    "is_contractible",
    "is_isomorphic",
    "is_nullhomotopic_inclusion",
    "is_open",
    "known_bounds",
    "maximal_points",
    "mccord_vertex_map",
    "minimal_points",
    "nh_join",
    "nh_suspension",
    "open_sets",
    "opposite",
    "order_complex",
    "planner_from_nullhomotopy",
    "planner_to_interval_map",
    "point",
    "product",
    "product_covering",
    "projection_maps",
    "refute_assignment",
    "restrict",
    "row_column_obstruction",
    "sphere_model",
    "tc",
    "upset",
    "validate",
    "wedge",
]
