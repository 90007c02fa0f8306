import json

import pytest

import main
from finite_spaces.documents import compute_digest, parse_space
from finite_spaces.expressions import space_from_expression
from shared.cli_config import EXIT_CERTIFICATE, EXIT_INCONCLUSIVE, EXIT_INVALID, EXIT_OK


def _run(capsys, *argv):
    code = main.run([str(arg) for arg in argv])
    return code, capsys.readouterr().out


def _break_openness(path):
    """Drop a non-maximal point from the first block that has one, keeping the fence consistent."""
    payload = json.loads(path.read_text())
    space = space_from_expression(payload["space"]["kind"])
    for block in payload["upper"]["blocks"]:
        members = [space.index(label) for label in block["points"]]
        for position, x in enumerate(members):
            if any(y != x and space.leq(x, y) for y in members):
                del block["points"][position]
                for images in block["fence"]["maps"]:
                    del images[position]
                payload["digest"] = compute_digest(payload)
                path.write_text(json.dumps(payload))
                return
    raise AssertionError("no block has a point below another member")


def test_tc_of_smallest_circle_is_proven(tmp_path, capsys):
    report = tmp_path / "tc.json"
    code, out = _run(capsys, "tc", "circle:2", "-o", report)
    assert code == EXIT_OK
    assert "value=4 status=proven" in out

    code, out = _run(capsys, "certify", report)
    assert code == EXIT_OK
    assert "certified report" in out


def test_reduced_convention_changes_only_the_printed_value(tmp_path, capsys):
    report = tmp_path / "tc.json"
    code, out = _run(capsys, "tc", "circle:2", "--reduced", "-o", report)
    assert code == EXIT_OK
    assert "value=3 status=proven convention=reduced" in out
    payload = json.loads(report.read_text())
    assert payload["value"] == 4
    assert payload["convention"] == "unreduced"


def test_cat_and_tc_without_cat_bound(tmp_path, capsys):
    code, out = _run(capsys, "cat", "circle:3", "-o", tmp_path / "cat.json")
    assert code == EXIT_OK
    assert "value=2 status=proven" in out
    code, out = _run(capsys, "certify", tmp_path / "cat.json")
    assert code == EXIT_OK
    assert "trusted 1 exhaustion refutations" in out
    code, out = _run(capsys, "tc", "circle:2", "--no-cat-bound", "-o", tmp_path / "tc.json")
    assert code == EXIT_OK
    assert "value=4" in out


def test_tampered_block_fails_certification(tmp_path, capsys):
    report = tmp_path / "cat.json"
    assert _run(capsys, "cat", "circle:3", "-o", report)[0] == EXIT_OK
    _break_openness(report)
    code, out = _run(capsys, "certify", report)
    assert code == EXIT_CERTIFICATE
    assert "not open" in out


def test_build_then_validate(tmp_path, capsys):
    space_file = tmp_path / "sphere.json"
    code, out = _run(capsys, "build", "sphere:2", "-o", space_file)
    assert code == EXIT_OK
    assert "points=6 kind=sphere:2" in out
    assert len(parse_space(space_file.read_text())) == 6

    code, out = _run(capsys, "validate", space_file)
    assert code == EXIT_OK
    assert out.strip().endswith("valid")


def test_core_of_an_interval_is_a_point(tmp_path, capsys):
    code, out = _run(capsys, "core", "interval:5", "-o", tmp_path / "core.json")
    assert code == EXIT_OK
    assert "points=1 removed=5 contractible=True" in out


def test_homology_of_a_join(tmp_path, capsys):
    output = tmp_path / "complex.json"
    code, out = _run(capsys, "homology", "join:discrete:3,discrete:3", "-o", output)
    assert code == EXIT_OK
    assert "b0=1 b1=4 euler=-3" in out
    assert json.loads(output.read_text())["betti"] == [1, 4]


def test_export_dot(tmp_path, capsys):
    output = tmp_path / "circle.dot"
    assert _run(capsys, "export-dot", "circle:3", "-o", output)[0] == EXIT_OK
    assert "rankdir=BT" in output.read_text()


@pytest.mark.slow
def test_explore_circle_artifact_certifies(tmp_path, capsys):
    output = tmp_path / "explore.json"
    code, out = _run(capsys, "explore-circle", "5", "--limits", "visited=2000,seconds=30", "-o", output)
    assert code in (EXIT_OK, EXIT_INCONCLUSIVE)
    assert "Q1: points=" in out and "Q2: points=" in out
    assert _run(capsys, "certify", output)[0] == EXIT_OK


@pytest.mark.parametrize("argv", [
    ["tc", "join:discrete:2"],
    ["build", "circle:1"],
    ["explore-circle", "five"],
    ["explore-circle", "4"],
])
def test_invalid_input_exits_with_invalid(argv, tmp_path, capsys):
    code, out = _run(capsys, *argv, "-o", tmp_path / "out.json")
    assert code == EXIT_INVALID
    assert out.startswith("error: ")


def test_certify_of_a_missing_file(tmp_path, capsys):
    code, out = _run(capsys, "certify", tmp_path / "missing.json")
    assert code == EXIT_INVALID
    assert "cannot read" in out


def test_cyclic_space_file_is_rejected(tmp_path, capsys):
    space_file = tmp_path / "cycle.json"
    space_file.write_text(json.dumps({"points": ["a", "b"], "hasse": [["a", "b"], ["b", "a"]]}))
    code, out = _run(capsys, "validate", space_file)
    assert code == EXIT_INVALID
    assert "'a'" in out


def test_disconnected_space_has_no_tc(tmp_path, capsys):
    code, out = _run(capsys, "tc", "discrete:2", "-o", tmp_path / "tc.json")
    assert code == EXIT_INVALID
    assert "connected" in out


@pytest.mark.parametrize("argv", [
    ["tc"],
    ["frobnicate", "circle:2"],
    ["tc", "circle:2", "--bogus"],
])
def test_usage_errors_exit_with_invalid(argv, capsys):
    code, out = _run(capsys, *argv)
    assert code == EXIT_INVALID
    assert out.startswith("error: ")


@pytest.mark.parametrize("verb", ["validate", "certify"])
def test_files_that_are_not_utf8_are_invalid_input(verb, tmp_path, capsys):
    binary = tmp_path / "binary.json"
    binary.write_bytes(b"\xff\xfe{")
    code, out = _run(capsys, verb, binary)
    assert code == EXIT_INVALID
    assert "not UTF-8" in out
