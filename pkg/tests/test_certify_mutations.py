"""Any change to a valid report must be caught by the certifier, digest or not."""

import json
import random

import pytest

from finite_spaces.budget import Limits
from finite_spaces.certify import certify_document
from finite_spaces.constructors import circle_model
from finite_spaces.documents import compute_digest, serialize_exploration, serialize_report
from finite_spaces.search import cat, explore_antidiagonal_cover, tc
from shared.cli_config import EXIT_CERTIFICATE, EXIT_OK

MUTATIONS = 100

# run bookkeeping, not part of what a report claims
DESCRIPTIVE = {"digest", "limits", "visited"}


def _leaves(node, path=()):
    if isinstance(node, dict):
        for key, value in node.items():
            if key not in DESCRIPTIVE:
                yield from _leaves(value, path + (key,))
    elif isinstance(node, list):
        for position, value in enumerate(node):
            yield from _leaves(value, path + (position,))
    else:
        yield path


def _mutated(value):
    if isinstance(value, bool):
        return not value
    if isinstance(value, int):
        return value + 1
    if isinstance(value, float):
        return value + 1.0
    if isinstance(value, str):
        return value + "x"
    return 0


def _mutate(text: str, rng: random.Random, resign: bool = True) -> str:
    payload = json.loads(text)
    path = rng.choice(list(_leaves(payload)))
    parent = payload
    for step in path[:-1]:
        parent = parent[step]
    parent[path[-1]] = _mutated(parent[path[-1]])
    if resign:
        payload["digest"] = compute_digest(payload)
    return json.dumps(payload, indent=2, sort_keys=True)


def _assert_rejected_on_content(text: str):
    result = certify_document(text)
    assert result.exit_code == EXIT_CERTIFICATE, text
    assert result.problems
    assert not any(p.startswith("digest") for p in result.problems), result.problems


@pytest.fixture(scope="module")
def reports():
    return {
        "tc-circle-2": serialize_report(tc(circle_model(2))),
        "cat-circle-3": serialize_report(cat(circle_model(3))),
    }


def test_unmodified_reports_certify(reports):
    for text in reports.values():
        result = certify_document(text)
        assert result.exit_code == EXIT_OK
        payload = json.loads(text)
        exhaustion = [r for r in payload["lower"]["refutations"] if r.get("reason") == "exhaustion"]
        assert result.trusted == len(exhaustion)


@pytest.mark.parametrize("name", ["tc-circle-2", "cat-circle-3"])
def test_resigned_mutations_fail_a_content_check(name, reports):
    rng = random.Random(20240601)
    for _ in range(MUTATIONS):
        _assert_rejected_on_content(_mutate(reports[name], rng))


def test_unsigned_mutations_fail_the_digest(reports):
    rng = random.Random(11)
    for _ in range(20):
        result = certify_document(_mutate(reports["tc-circle-2"], rng, resign=False))
        assert result.exit_code == EXIT_CERTIFICATE
        assert "digest does not match the report contents" in result.problems


def test_bookkeeping_fields_are_not_claims(reports):
    payload = json.loads(reports["cat-circle-3"])
    payload["limits"]["visited"] += 1
    payload["digest"] = compute_digest(payload)
    assert certify_document(json.dumps(payload)).exit_code == EXIT_OK


@pytest.mark.slow
def test_exploration_mutations_fail():
    text = serialize_exploration(explore_antidiagonal_cover(5, Limits(visited=2000, seconds=30)))
    assert certify_document(text).exit_code == EXIT_OK
    rng = random.Random(7)
    for _ in range(MUTATIONS):
        _assert_rejected_on_content(_mutate(text, rng))
