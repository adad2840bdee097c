"""
Shared fixtures: a seeded random source and a few small named graphs.
"""
import random

import pytest

from src.families.generators import wheel
from tests.strategies import complete_graph, cycle_graph, path_graph

DEFAULT_SEED = 20240611


def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help="seed for the randomized acceptance suites",
    )


@pytest.fixture(scope="session")
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    """Fresh generator per test so suites do not depend on execution order."""
    return random.Random(seed)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def w7():
    return wheel(7)
