import pytest

from finite_spaces.constructors import (
    circle_model,
    discrete,
    interval_model,
    nh_join,
    nh_suspension,
    point,
    product,
    sphere_model,
    wedge,
)
from finite_spaces.errors import ParameterError
from finite_spaces.homology import (
    betti,
    chain_count,
    euler_characteristic,
    graph_first_betti,
    maximal_chains,
    mccord_vertex_map,
    order_complex,
)
from finite_spaces.homotopy import core


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_joins_of_discrete_spaces_are_wedges_of_circles(m, n):
    complex_ = order_complex(nh_join(discrete(m), discrete(n)))
    assert complex_.count(0) == m + n
    assert complex_.count(1) == m * n
    assert complex_.count(2) == 0
    assert betti(complex_) == (1, (m - 1) * (n - 1))
    assert graph_first_betti(complex_) == (m - 1) * (n - 1)


@pytest.mark.parametrize("m", [0, 1, 4, 7])
def test_interval_models_give_paths(m):
    complex_ = order_complex(interval_model(m))
    assert complex_.count(0) == m + 1
    assert complex_.count(1) == m
    assert betti(complex_) == (1, 0)


def test_point_gives_a_single_vertex():
    complex_ = order_complex(point())
    assert complex_.simplices == ((0,),)
    assert euler_characteristic(complex_) == 1


@pytest.mark.parametrize("n", [2, 3, 6])
def test_circle_models_are_circles(n):
    complex_ = order_complex(circle_model(n))
    assert euler_characteristic(complex_) == 0
    assert betti(complex_) == (1, 1)


def test_two_sphere_uses_boundary_ranks():
    complex_ = order_complex(sphere_model(2))
    assert complex_.dimension == 2
    assert [complex_.count(d) for d in range(3)] == [6, 12, 8]
    assert euler_characteristic(complex_) == 2
    assert betti(complex_) == (1, 0)


def test_torus_model():
    circle = circle_model(2)
    complex_ = order_complex(product(circle, circle))
    assert euler_characteristic(complex_) == 0
    assert betti(complex_) == (1, 2)


def test_components_of_a_discrete_space():
    assert betti(order_complex(discrete(3))) == (3, 0)


@pytest.mark.parametrize(
    "space",
    [
        circle_model(5),
        interval_model(9),
        sphere_model(3),
        nh_join(discrete(4), discrete(5)),
        nh_suspension(circle_model(2)),
        nh_join(circle_model(3), point()),
        wedge([circle_model(2), circle_model(2)], ["y0", "y0"]),
    ],
    ids=["circle5", "fence9", "sphere3", "join45", "suspended-circle", "cone", "wedge"],
)
def test_euler_characteristic_survives_core_reduction(space):
    assert len(space) <= 10
    assert euler_characteristic(order_complex(space)) == euler_characteristic(order_complex(core(space)))


def test_simplices_are_chains_closed_under_faces(join23):
    complex_ = order_complex(join23)
    assert complex_.is_closed()
    assert chain_count(join23) == len(complex_.simplices)
    for simplex in complex_.simplices:
        for a, b in zip(simplex, simplex[1:]):
            assert join23.leq(a, b)
    assert sorted(complex_.maximal_simplices) == sorted(maximal_chains(join23))


def test_simplex_limit_is_enforced(circle3):
    with pytest.raises(ParameterError):
        order_complex(circle3, max_simplices=5)


def test_mccord_vertex_map_sends_chains_to_their_minimum():
    fence = interval_model(3)
    table = mccord_vertex_map(fence)
    assert table.check_monotone() == []
    labels = table.labels()
    assert labels[("x1",)] == "x1"
    assert labels[("x0", "x1")] == "x0"
    assert labels[("x2", "x3")] == "x2"
