import pytest

from finite_spaces.constructors import circle_model, discrete, nh_join, opposite, product, sphere_model
from finite_spaces.errors import InvalidSpaceError, UnknownPointError
from finite_spaces.space import (
    FiniteSpace,
    PointSet,
    down_closure,
    downset,
    is_connected,
    is_isomorphic,
    maximal_points,
    minimal_points,
    open_sets,
    up_closure,
    upset,
    validate,
    whole,
)
from posets import connected_posets


def test_circle_model_is_valid_with_expected_order(circle3):
    assert validate(circle3).ok
    assert len(circle3) == 6
    assert downset(circle3, "y0").labels() == ["x0", "y0", "x2"]
    assert upset(circle3, "x0").labels() == ["x0", "y0", "y1"]
    assert maximal_points(circle3).labels() == ["y0", "y1", "y2"]
    assert minimal_points(circle3).labels() == ["x0", "x1", "x2"]


def test_from_relations_closes_and_reminimises():
    space = FiniteSpace.from_relations(
        ["a", "b", "c"],
        [("a", "b"), ("b", "c"), ("a", "c"), ("a", "a")],
    )
    assert validate(space).ok
    assert space.hasse == ((0, 1), (1, 2))
    assert space.leq(space.index("a"), space.index("c"))


def test_from_relations_rejects_cycles_with_the_pair():
    with pytest.raises(InvalidSpaceError) as raised:
        FiniteSpace.from_relations(["a", "b"], [("a", "b"), ("b", "a")])
    assert set(raised.value.pair) == {"a", "b"}


def test_duplicate_labels_are_rejected():
    with pytest.raises(InvalidSpaceError):
        FiniteSpace.from_relations(["a", "a"], [])
    with pytest.raises(InvalidSpaceError):
        FiniteSpace(["a", "a"], [1, 2])


def test_unknown_labels_are_reported():
    with pytest.raises(UnknownPointError):
        FiniteSpace.from_relations(["a"], [("a", "z")])
    with pytest.raises(UnknownPointError):
        circle_model(2).index("nope")


def test_validate_reports_every_broken_axiom():
    not_antisymmetric = FiniteSpace(["a", "b"], [0b11, 0b11], hasse=[])
    report = validate(not_antisymmetric)
    assert not report.ok
    assert "antisymmetry" in {v.axiom for v in report.violations}

    not_transitive = FiniteSpace(["a", "b", "c"], [0b001, 0b011, 0b110], hasse=[(0, 1), (1, 2)])
    axioms = {v.axiom for v in validate(not_transitive).violations}
    assert "transitivity" in axioms


def test_product_sizes_and_maximal_points(circle3):
    square = product(circle3, circle3)
    assert len(square) == 36
    assert len(maximal_points(square)) == 9
    assert square.factors == (circle3, circle3)
    assert validate(square).ok


def test_opposite_swaps_extremal_points(join23):
    flipped = opposite(join23)
    assert maximal_points(flipped).labels() == minimal_points(join23).labels()
    assert minimal_points(flipped).labels() == maximal_points(join23).labels()


def test_open_sets_are_downsets_listed_once(circle2):
    found = [s.mask for s in open_sets(circle2)]
    assert len(found) == len(set(found)) == 7
    assert all(PointSet(circle2, m).is_open for m in found)
    assert found[0] == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_open_sets_of_discrete_space(n):
    assert sum(1 for _ in open_sets(discrete(n))) == 2 ** n


def test_point_set_algebra(circle2):
    a = downset(circle2, "y0")
    b = downset(circle2, "y1")
    assert (a | b).mask == circle2.full_mask
    assert (a & b).labels() == ["x0", "x1"]
    assert (a - b).labels() == ["y0"]
    assert not (a - b).is_open
    assert (a & b).issubset(a)
    assert a.complement().labels() == ["y1"]
    assert "x1" in a


def test_closures_of_masks(circle2):
    x0 = 1 << circle2.index("x0")
    y0 = 1 << circle2.index("y0")
    assert PointSet(circle2, down_closure(circle2, y0)).labels() == ["x0", "y0", "x1"]
    assert PointSet(circle2, up_closure(circle2, x0)).labels() == ["x0", "y0", "y1"]
    assert down_closure(circle2, 0) == up_closure(circle2, 0) == 0


def test_connectivity(circle2):
    assert is_connected(circle2, whole(circle2))
    assert not is_connected(discrete(2), whole(discrete(2)))
    assert not is_connected(circle2, PointSet.of(circle2, ["x0", "x1"]))


def test_isomorphism_of_small_circles():
    assert is_isomorphic(circle_model(2), sphere_model(1))
    assert is_isomorphic(nh_join(discrete(2), discrete(2)), circle_model(2))
    assert not is_isomorphic(circle_model(2), circle_model(3))


def test_subspace_keeps_parent_order(circle3):
    block = downset(circle3, "y1") | downset(circle3, "y2")
    sub = block.as_space()
    assert sub.points == ("x0", "x1", "y1", "x2", "y2")
    assert validate(sub).ok
    assert sub.leq(sub.index("x1"), sub.index("y2"))


def test_heights_and_linear_extension(join23):
    heights = dict(zip(join23.points, join23.heights))
    assert heights["x0"] == 0 and heights["y2"] == 1
    position = {p: k for k, p in enumerate(join23.linear_extension)}
    for below, above in join23.hasse:
        assert position[below] < position[above]


def test_connected_poset_counts():
    assert [len(connected_posets(n)) for n in range(1, 5)] == [1, 1, 3, 10]


@pytest.mark.slow
def test_connected_poset_count_on_five_points():
    assert len(connected_posets(5)) == 44
