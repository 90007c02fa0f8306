import json

import pytest

from finite_spaces.constructors import circle_model, interval_model, product, sphere_model
from finite_spaces.documents import (
    SpaceDocument,
    canonical_json,
    compute_digest,
    digest_matches,
    dumps,
    export_dot,
    load,
    parse_exploration,
    parse_fence,
    parse_report,
    parse_space,
    serialize_exploration,
    serialize_fence,
    serialize_report,
    serialize_space,
    complex_to_document,
)
from finite_spaces.errors import DocumentError
from finite_spaces.homology import order_complex
from finite_spaces.homotopy import homotopic
from finite_spaces.maps import check_fence, constant, identity
from finite_spaces.search import cat, explore_antidiagonal_cover, tc
from finite_spaces.space import validate


def test_space_round_trip_is_byte_stable(circle3):
    text = serialize_space(circle3)
    parsed = parse_space(text)
    assert parsed == circle3
    assert serialize_space(parsed) == text
    assert text.endswith("\n")
    assert json.loads(text)["kind"] == "circle:3"


def test_product_round_trip_keeps_factors(circle2):
    square = product(circle2, interval_model(1))
    parsed = parse_space(serialize_space(square))
    assert parsed == square
    assert parsed.factors == (circle2, interval_model(1))


def test_hand_written_space_with_redundant_edges_is_reminimised():
    text = json.dumps({
        "points": ["a", "b", "c", "d"],
        "hasse": [["a", "b"], ["b", "c"], ["a", "c"], ["c", "d"], ["a", "d"], ["b", "b"]],
    })
    space = parse_space(text)
    assert validate(space).ok
    assert len(space.hasse) == 3
    assert str(space.kind) == "explicit"


def test_hand_written_circle_is_read_in_file_order():
    text = json.dumps({
        "points": ["x0", "y0", "x1", "y1"],
        "hasse": [["x0", "y0"], ["x1", "y0"], ["x0", "y1"], ["x1", "y1"]],
    })
    assert parse_space(text) == circle_model(2)


def test_duplicate_labels_are_rejected():
    text = json.dumps({"points": ["a", "a"], "hasse": []})
    with pytest.raises(DocumentError):
        parse_space(text)


def test_non_t0_relation_points_at_the_pair():
    text = json.dumps({"points": ["a", "b"], "hasse": [["a", "b"], ["b", "a"]]})
    with pytest.raises(DocumentError) as raised:
        parse_space(text)
    assert raised.value.field == "hasse"
    assert "'a'" in str(raised.value) and "'b'" in str(raised.value)


def test_invalid_json_reports_the_line():
    with pytest.raises(DocumentError) as raised:
        parse_space('{\n  "points": ["a",\n}')
    assert raised.value.line == 3


def test_schema_errors_report_the_field():
    with pytest.raises(DocumentError) as raised:
        load(json.dumps({"points": ["a"], "hasse": [["a"]]}), SpaceDocument)
    assert raised.value.field.startswith("hasse.0")
    with pytest.raises(DocumentError) as raised:
        load(json.dumps({"points": ["a"], "colour": "red"}), SpaceDocument)
    assert raised.value.field == "colour"


def test_fence_round_trip():
    fence_space = interval_model(4)
    result = homotopic(identity(fence_space), constant(fence_space, fence_space, 0))
    text = serialize_fence(result.fence)
    parsed = parse_fence(text)
    assert parsed == result.fence
    assert check_fence(parsed) == []
    assert serialize_fence(parsed) == text


def test_report_round_trip_and_digest(circle2):
    report = tc(circle2)
    text = serialize_report(report)
    document = parse_report(text)
    assert document.value == 4
    assert document.status == "proven"
    assert document.convention == "unreduced"
    assert document.lower.expected == 6
    assert digest_matches(text)
    assert len(document.digest) == 64
    assert serialize_report(report) == text


def test_digest_ignores_only_its_own_field():
    payload = {"b": 1, "a": [1, 2], "digest": "anything"}
    assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
    assert compute_digest(payload) == compute_digest({"a": [1, 2], "b": 1})
    assert compute_digest(payload) != compute_digest({"a": [1, 2], "b": 2})


def test_cat_report_has_no_lower_record_for_contractible_spaces():
    text = serialize_report(cat(interval_model(3)))
    payload = json.loads(text)
    assert payload["value"] == 1
    assert "lower" not in payload
    assert payload["upper"]["blocks"][0]["fence"]["dirs"] is not None


def test_exploration_round_trip(tight_limits):
    report = explore_antidiagonal_cover(5, tight_limits)
    text = serialize_exploration(report)
    document = parse_exploration(text)
    assert document.n == 5 and document.shift == 2
    assert [s.name for s in document.sets] == ["Q1", "Q2"]
    assert digest_matches(text)


def test_complex_document(circle2):
    document = complex_to_document(circle2, order_complex(circle2))
    assert document.f_vector == [4, 4]
    assert document.betti == (1, 1)
    assert document.euler_characteristic == 0
    assert ["x0", "y0"] in document.maximal_simplices
    assert dumps(document).endswith("\n")


def test_dot_export_ranks_by_height():
    dot = export_dot(sphere_model(1))
    assert dot.startswith("digraph hasse {")
    assert "rankdir=BT;" in dot
    assert dot.count("rank=same") == 2
    assert dot.count(" -> ") == 4
