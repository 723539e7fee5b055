import math

import pytest

from minktrig import euclidean, lp, regular_polygon


@pytest.fixture(scope="session")
def euclid():
    return euclidean()


@pytest.fixture(scope="session")
def diamond():
    return lp(1.0)


@pytest.fixture(scope="session")
def p15():
    return lp(1.5)


@pytest.fixture(scope="session")
def p3():
    return lp(3.0)


@pytest.fixture(scope="session")
def square():
    return lp(math.inf)


@pytest.fixture(scope="session")
def hexagon():
    return regular_polygon(6)


@pytest.fixture(scope="session")
def octagon():
    return regular_polygon(8)


@pytest.fixture(scope="session")
def all_specs(euclid, diamond, p15, p3, square, hexagon, octagon):
    return [euclid, diamond, p15, p3, square, hexagon, octagon]
