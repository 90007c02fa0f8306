import pytest

from finite_spaces.constructors import circle_model, interval_model, product
from finite_spaces.homotopy import core_retraction, homotopic, is_nullhomotopic_inclusion, projection_maps
from finite_spaces.maps import (
    ContinuousMap,
    Direction,
    Fence,
    check_fence,
    constant,
    fence_to_interval_map,
    identity,
    inclusion,
    interval_map_to_fence,
    relative_mask,
)
from finite_spaces.space import PointSet, downset


def test_order_preserving_maps_are_continuous(circle2):
    swap = ContinuousMap.from_labels(circle2, circle2, {"x0": "x1", "x1": "x0", "y0": "y1", "y1": "y0"})
    assert swap.is_continuous()
    assert swap("y0") == "y1"

    broken = ContinuousMap.from_labels(circle2, circle2, ["y0", "x0", "x1", "y1"])
    assert not broken.is_continuous()
    assert ("x0", "y0") in broken.discontinuities()


def test_composition_and_restriction(circle2):
    swap = ContinuousMap.from_labels(circle2, circle2, ["x1", "y1", "x0", "y0"])
    assert swap.compose(swap).values == identity(circle2).values
    block = downset(circle2, "y0")
    restricted = swap.restrict(block)
    assert restricted.domain == block.as_space()
    assert restricted.labels() == ["x1", "y1", "x0"]


def test_map_values_must_fit(circle2):
    with pytest.raises(ValueError):
        ContinuousMap(circle2, circle2, (0, 1))
    with pytest.raises(ValueError):
        ContinuousMap(circle2, circle2, (0, 1, 2, 9))


def test_relative_mask():
    assert relative_mask(0b10110, 0b00100) == 0b010
    assert relative_mask(0b10110, 0b10010) == 0b101


def _contraction_of_interval():
    """identity(J_2) >= (x1 everywhere), via x0 -> x1 and x2 -> x1."""
    space = interval_model(2)
    start = identity(space)
    middle = ContinuousMap(space, space, (1, 1, 2))
    end = constant(space, space, 1)
    return space, Fence.from_path([start, middle, end])


def test_fence_from_path_infers_directions():
    _, fence = _contraction_of_interval()
    assert fence.dirs == (Direction.LE, Direction.LE)
    assert check_fence(fence) == []
    assert fence.compressed().dirs == (Direction.LE,)
    assert len(fence.compressed()) == 2


def test_fence_algebra_keeps_validity():
    space, fence = _contraction_of_interval()
    back = fence.reversed()
    assert back.first.values == fence.last.values
    assert back.dirs == (Direction.GE, Direction.GE)
    assert check_fence(back) == []

    loop = fence.concatenate(back)
    assert check_fence(loop) == []
    assert loop.first.values == loop.last.values

    with pytest.raises(ValueError):
        fence.concatenate(fence)

    sub = PointSet(space, 0b011)
    assert check_fence(fence.restrict(sub)) == []

    into = inclusion(PointSet(space, space.full_mask))
    assert check_fence(fence.compose_left(into)) == []
    assert check_fence(fence.compose_right(identity(space))) == []


def test_check_fence_reports_wrong_directions():
    _, fence = _contraction_of_interval()
    wrong = Fence(fence.maps, (Direction.GE, Direction.LE))
    problems = check_fence(wrong)
    assert any("not related by ge" in p for p in problems)


def test_check_fence_reports_discontinuous_maps(circle2):
    broken = ContinuousMap(circle2, circle2, (1, 0, 2, 3))
    problems = check_fence(Fence.trivial(broken))
    assert problems and "not order preserving" in problems[0]


def test_alternating_fence_matches_interval_maps():
    space, fence = _contraction_of_interval()
    reversed_fence = fence.compressed().reversed()
    steps = reversed_fence.alternating()
    assert steps.dirs[0] is Direction.LE
    assert check_fence(steps) == []

    homotopy = fence_to_interval_map(reversed_fence)
    assert homotopy.is_continuous()
    recovered = interval_map_to_fence(homotopy)
    assert recovered.first.values == reversed_fence.first.values
    assert recovered.last.values == reversed_fence.last.values
    assert check_fence(recovered) == []


def _searched_fences():
    _, contraction = _contraction_of_interval()
    fences = [contraction, contraction.reversed(), core_retraction(interval_model(4)).chain()]
    circle = circle_model(3)
    fences.append(is_nullhomotopic_inclusion(downset(circle, "y0")).fence)
    square = product(circle_model(2), circle_model(2))
    pr1, pr2 = projection_maps(downset(square, "(y0,y1)"))
    fences.append(homotopic(pr1, pr2).fence)
    return fences


@pytest.mark.parametrize("position", range(5))
def test_fences_and_interval_maps_convert_both_ways(position):
    fence = _searched_fences()[position]
    assert check_fence(fence) == []
    homotopy = fence_to_interval_map(fence)
    assert homotopy.is_continuous()
    assert interval_map_to_fence(homotopy) == fence.alternating()
    assert fence_to_interval_map(interval_map_to_fence(homotopy)) == homotopy
