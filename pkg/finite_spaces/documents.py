"""
JSON Documents.

Every file the engine reads or writes is a pydantic model:
- SpaceDocument: points, Hasse covers as [below, above] label pairs, kind
  (plus the factors of a product, so projections survive a round trip)
- FenceDocument: image labels per map in domain point order, and directions
- CoveringDocument / BlockDocument: blocks with their certificates
- ExhaustionDocument / RefutationDocument: the lower-bound record
- SearchReportDocument, ExplorationDocument, ComplexDocument

Output is byte-stable: ``indent=2``, sorted keys, trailing newline. Reports
carry a SHA-256 digest of their canonical compact form.
"""

import hashlib
import json
import logging
from typing import Any, Dict, List, Literal, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from finite_spaces.constructors import product
from finite_spaces.errors import DocumentError, ExpressionError, InvalidSpaceError, UnknownPointError
from finite_spaces.expressions import parse_expression
from finite_spaces.homology import SimplicialComplex, betti, euler_characteristic
from finite_spaces.homotopy import NullhomotopyCertificate, PlannerCertificate
from finite_spaces.maps import ContinuousMap, Direction, Fence
from finite_spaces.search import Covering, ExplorationReport, Invariant, SearchReport
from finite_spaces.space import EXPLICIT, FiniteSpace, PointSet
from shared.cli_config import CONVENTION_UNREDUCED, FORMAT_VERSION

logger = logging.getLogger(__name__)

Model = TypeVar("Model", bound=BaseModel)

ANTIDIAGONAL_PAIRING = "x_i ~ x_(i+shift mod n), y_i ~ y_(i+shift mod n), shift = n // 2"


# =============================================================================
# MODELS
# =============================================================================

class Document(BaseModel):
    """Base for every document: unknown fields are errors."""
    model_config = ConfigDict(extra="forbid")


class SpaceDocument(Document):
    """A finite T0 space."""
    points: List[str]
    hasse: List[Tuple[str, str]] = Field(default_factory=list)
    kind: str = "explicit"
    factors: Optional[Tuple["SpaceDocument", "SpaceDocument"]] = None


class FenceDocument(Document):
    """A fence; domain and codomain are implied when embedded in a report."""
    domain: Optional[SpaceDocument] = None
    codomain: Optional[SpaceDocument] = None
    maps: List[List[str]] = Field(min_length=1)
    dirs: List[Literal["le", "ge"]] = Field(default_factory=list)


class BlockDocument(Document):
    """One open block and the fence certifying it."""
    points: List[str]
    fence: FenceDocument


class CoveringDocument(Document):
    source: Literal["search", "product", "singletons"]
    blocks: List[BlockDocument] = Field(min_length=1)


class RefutationDocument(Document):
    index: int = Field(ge=0)
    rgs: List[int]
    outcome: Literal["no", "inconclusive"]
    reason: Optional[Literal["row-column", "exhaustion"]] = None
    block: List[str] = Field(default_factory=list)


class ExhaustionDocument(Document):
    k: int = Field(ge=1)
    maximal_points: List[str]
    expected: int = Field(ge=0)
    refutations: List[RefutationDocument]


class LimitsDocument(Document):
    visited: int = Field(ge=1)
    seconds: float = Field(gt=0)


class SearchReportDocument(Document):
    """Value of cat or TC with both certificates."""
    format_version: int
    invariant: Literal["cat", "tc"]
    convention: Literal["unreduced"]
    space: SpaceDocument
    value: int = Field(ge=1)
    status: Literal["proven", "upper-bound-only"]
    upper: CoveringDocument
    lower: Optional[ExhaustionDocument] = None
    inconclusive: int = Field(ge=0)
    limits: LimitsDocument
    digest: str


class ExploredSetDocument(Document):
    name: str
    points: List[str]
    open: bool
    obstructed: bool
    outcome: Literal["yes", "no", "inconclusive"]
    reason: Optional[Literal["row-column", "exhaustion"]] = None
    fence: Optional[FenceDocument] = None
    visited: int = Field(ge=0)


class ExplorationDocument(Document):
    """Outcome of the antidiagonal two-set cover of 𝕊¹ₙ × 𝕊¹ₙ."""
    format_version: int
    n: int = Field(ge=5)
    shift: int
    pairing: str
    covers: bool
    sets: List[ExploredSetDocument]
    limits: LimitsDocument
    digest: str


class ComplexDocument(Document):
    kind: str
    vertices: List[str]
    maximal_simplices: List[List[str]]
    f_vector: List[int]
    euler_characteristic: int
    betti: Tuple[int, int]


SpaceDocument.model_rebuild()


# =============================================================================
# JSON PLUMBING
# =============================================================================

def canonical_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def compute_digest(payload: Dict[str, Any]) -> str:
    """SHA-256 of the canonical form of payload, without its own digest field."""
    body = {key: value for key, value in payload.items() if key != "digest"}
    return hashlib.sha256(canonical_json(body).encode("utf-8")).hexdigest()


def dumps(document: BaseModel) -> str:
    payload = document.model_dump(mode="json", exclude_none=True)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _field_path(location: Tuple[Any, ...]) -> str:
    return ".".join(str(part) for part in location)


def load(text: str, model: Type[Model]) -> Model:
    """Parse JSON text into a model; failures become DocumentError with line or field."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e.msg}", line=e.lineno) from None
    try:
        return model.model_validate(payload)
    except ValidationError as e:
        first = e.errors()[0]
        path = _field_path(first["loc"])
        raise DocumentError(first["msg"], field=path or "<root>") from None


def _with_digest(document: Model) -> Model:
    payload = document.model_dump(mode="json", exclude_none=True)
    return document.model_copy(update={"digest": compute_digest(payload)})


def digest_matches(text: str) -> bool:
    payload = json.loads(text)
    return isinstance(payload, dict) and payload.get("digest") == compute_digest(payload)


# =============================================================================
# SPACES
# =============================================================================

def space_to_document(space: FiniteSpace) -> SpaceDocument:
    label = space.label
    factors = None
    if space.factors is not None:
        factors = (space_to_document(space.factors[0]), space_to_document(space.factors[1]))
    return SpaceDocument(
        points=list(space.points),
        hasse=[(label(a), label(b)) for a, b in space.hasse],
        kind=str(space.kind),
        factors=factors,
    )


def space_from_document(document: SpaceDocument) -> FiniteSpace:
    """Close and re-minimise the listed relation; products are rebuilt from their factors."""
    try:
        space = FiniteSpace.from_relations(document.points, document.hasse)
    except (InvalidSpaceError, UnknownPointError) as e:
        raise DocumentError(str(e), field="hasse") from None
    try:
        kind = EXPLICIT if document.kind == "explicit" else parse_expression(document.kind)
    except ExpressionError:
        logger.debug(f"unrecognised kind {document.kind!r}; reading the space as explicit")
        kind = EXPLICIT
    if document.factors is not None:
        rebuilt = product(space_from_document(document.factors[0]), space_from_document(document.factors[1]))
        if rebuilt != space:
            raise DocumentError("points and covers do not match the product of the factors", field="factors")
        return rebuilt.with_kind(kind)
    return space.with_kind(kind)


def serialize_space(space: FiniteSpace) -> str:
    return dumps(space_to_document(space))


def parse_space(text: str) -> FiniteSpace:
    return space_from_document(load(text, SpaceDocument))


# =============================================================================
# FENCES AND COVERINGS
# =============================================================================

def fence_to_document(fence: Fence, standalone: bool = False) -> FenceDocument:
    return FenceDocument(
        domain=space_to_document(fence.domain) if standalone else None,
        codomain=space_to_document(fence.codomain) if standalone else None,
        maps=[f.labels() for f in fence.maps],
        dirs=[d.value for d in fence.dirs],
    )


def fence_from_document(
    document: FenceDocument,
    domain: Optional[FiniteSpace] = None,
    codomain: Optional[FiniteSpace] = None,
) -> Fence:
    """Rebuild a fence; an embedded document takes its spaces from the caller."""
    if domain is None:
        if document.domain is None:
            raise DocumentError("fence has no domain", field="domain")
        domain = space_from_document(document.domain)
    if codomain is None:
        if document.codomain is None:
            raise DocumentError("fence has no codomain", field="codomain")
        codomain = space_from_document(document.codomain)
    maps = []
    for position, images in enumerate(document.maps):
        if len(images) != len(domain):
            raise DocumentError(f"map {position} lists {len(images)} images for {len(domain)} points", field="maps")
        try:
            maps.append(ContinuousMap.from_labels(domain, codomain, images))
        except (ValueError, KeyError) as e:
            raise DocumentError(f"map {position}: {e}", field="maps") from None
    if len(document.dirs) != len(maps) - 1:
        raise DocumentError("one direction per consecutive pair of maps is required", field="dirs")
    return Fence(tuple(maps), tuple(Direction(d) for d in document.dirs))


def serialize_fence(fence: Fence) -> str:
    return dumps(fence_to_document(fence, standalone=True))


def parse_fence(text: str) -> Fence:
    return fence_from_document(load(text, FenceDocument))


def covering_to_document(covering: Covering) -> CoveringDocument:
    return CoveringDocument(
        source=covering.source,
        blocks=[
            BlockDocument(points=block.labels(), fence=fence_to_document(certificate.fence))
            for block, certificate in zip(covering.blocks, covering.certificates)
        ],
    )


def _point_set(space: FiniteSpace, labels: List[str], field: str) -> PointSet:
    try:
        return PointSet.of(space, labels)
    except ValueError as e:
        raise DocumentError(str(e), field=field) from None


def covering_from_document(document: CoveringDocument, target: FiniteSpace, invariant: Invariant) -> Covering:
    """Blocks are read as listed; nothing is assumed about their openness."""
    codomain = target.factors[0] if invariant is Invariant.TC else target
    certificate_type = PlannerCertificate if invariant is Invariant.TC else NullhomotopyCertificate
    blocks, certificates = [], []
    for position, block_document in enumerate(document.blocks):
        block = _point_set(target, block_document.points, f"upper.blocks.{position}.points")
        fence = fence_from_document(block_document.fence, block.as_space(), codomain)
        blocks.append(block)
        certificates.append(certificate_type(block, fence))
    return Covering(target, invariant, blocks, certificates, document.source)


# =============================================================================
# REPORTS
# =============================================================================

def report_to_document(report: SearchReport) -> SearchReportDocument:
    lower = None
    if report.lower is not None:
        lower = ExhaustionDocument(
            k=report.lower.k,
            maximal_points=list(report.lower.maximal_points),
            expected=report.lower.expected,
            refutations=[
                RefutationDocument(
                    index=r.index,
                    rgs=list(r.rgs),
                    outcome=r.outcome.value,
                    reason=r.reason.value if r.reason else None,
                    block=list(r.block),
                )
                for r in report.lower.refutations
            ],
        )
    document = SearchReportDocument(
        format_version=FORMAT_VERSION,
        invariant=report.invariant.value,
        convention=CONVENTION_UNREDUCED,
        space=space_to_document(report.space),
        value=report.value,
        status=report.status,
        upper=covering_to_document(report.upper),
        lower=lower,
        inconclusive=report.inconclusive,
        limits=LimitsDocument(visited=report.limits.visited, seconds=report.limits.seconds),
        digest="",
    )
    return _with_digest(document)


def serialize_report(report: SearchReport) -> str:
    return dumps(report_to_document(report))


def parse_report(text: str) -> SearchReportDocument:
    return load(text, SearchReportDocument)


def exploration_to_document(report: ExplorationReport) -> ExplorationDocument:
    sets = [
        ExploredSetDocument(
            name=explored.name,
            points=explored.block.labels(),
            open=explored.is_open,
            obstructed=explored.obstructed,
            outcome=explored.outcome.value,
            reason=explored.reason.value if explored.reason else None,
            fence=fence_to_document(explored.certificate.fence) if explored.certificate else None,
            visited=explored.visited,
        )
        for explored in report.sets
    ]
    document = ExplorationDocument(
        format_version=FORMAT_VERSION,
        n=report.n,
        shift=report.shift,
        pairing=ANTIDIAGONAL_PAIRING,
        covers=report.covers,
        sets=sets,
        limits=LimitsDocument(visited=report.limits.visited, seconds=report.limits.seconds),
        digest="",
    )
    return _with_digest(document)


def serialize_exploration(report: ExplorationReport) -> str:
    return dumps(exploration_to_document(report))


def parse_exploration(text: str) -> ExplorationDocument:
    return load(text, ExplorationDocument)


# =============================================================================
# COMPLEXES AND DOT
# =============================================================================

def complex_to_document(space: FiniteSpace, complex_: SimplicialComplex) -> ComplexDocument:
    label = space.label
    return ComplexDocument(
        kind=str(space.kind),
        vertices=list(complex_.vertices),
        maximal_simplices=[[label(v) for v in s] for s in complex_.maximal_simplices],
        f_vector=[complex_.count(d) for d in range(complex_.dimension + 1)],
        euler_characteristic=euler_characteristic(complex_),
        betti=betti(complex_),
    )


def export_dot(space: FiniteSpace) -> str:
    """Hasse diagram in DOT, drawn bottom-up with one rank per height."""
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=circle];"]
    by_height: Dict[int, List[int]] = {}
    for i, height in enumerate(space.heights):
        by_height.setdefault(height, []).append(i)
    for height in sorted(by_height):
        members = " ".join(json.dumps(space.label(i)) + ";" for i in by_height[height])
        lines.append(f"  {{ rank=same; {members} }}")
    for below, above in space.hasse:
        lines.append(f"  {json.dumps(space.label(below))} -> {json.dumps(space.label(above))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
