import pytest

from sympdiff.exprparse import parse_poly
from sympdiff.fields import field_make


@pytest.fixture(scope="session")
def F2():
    return field_make("GF(2)")


@pytest.fixture(scope="session")
def F3():
    return field_make("GF(3)")


@pytest.fixture(scope="session")
def F5():
    return field_make("GF(5)")


@pytest.fixture(scope="session")
def Q():
    return field_make("Q")


@pytest.fixture(scope="session")
def F2s():
    return field_make("GF(2)(s)")


@pytest.fixture
def poly():
    """poly(ctx, text) shorthand."""
    return parse_poly
