import pytest

from cabcodes.curve import parse_curve
from cabcodes.field import make_field


@pytest.fixture(scope="session")
def gf8():
    return make_field(2, 3)


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def ex1_curve(gf8):
    return parse_curve("y^3=x^4+1", gf8)


@pytest.fixture(scope="session")
def ex2_curve(gf8):
    return parse_curve("y^3=x^4-x", gf8)


@pytest.fixture(scope="session")
def ex3_curve(gf4):
    return parse_curve("y^3-y=x^4", gf4)
