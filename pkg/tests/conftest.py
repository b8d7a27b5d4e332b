import pytest

from galring import ring


@pytest.fixture(scope="session")
def z4():
    return ring(2, 2, 1)


@pytest.fixture(scope="session")
def z8():
    return ring(2, 3, 1)


@pytest.fixture(scope="session")
def z9():
    return ring(3, 2, 1)


@pytest.fixture(scope="session")
def z16():
    return ring(2, 4, 1)


@pytest.fixture(scope="session")
def gr42():
    return ring(2, 2, 2)
