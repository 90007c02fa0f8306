"""Shared fixtures: model spaces and tight limits for fast searches."""

import pytest

from finite_spaces.budget import Limits
from finite_spaces.constructors import circle_model, discrete, interval_model, nh_join, sphere_model


@pytest.fixture
def circle2():
    return circle_model(2)


@pytest.fixture
def circle3():
    return circle_model(3)


@pytest.fixture
def sphere1():
    return sphere_model(1)


@pytest.fixture
def fence4():
    return interval_model(4)


@pytest.fixture
def join23():
    return nh_join(discrete(2), discrete(3))


@pytest.fixture
def limits():
    return Limits(visited=200_000, seconds=300.0)


@pytest.fixture
def tight_limits():
    return Limits(visited=2_000, seconds=30.0)
