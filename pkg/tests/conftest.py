import pytest

from edense import construction

SEMILATTICE_FIXTURES = ("CHAIN3", "N2", "Z2", "Z3", "Z6", "B2", "Z3E", "Z6E")


@pytest.fixture(scope="session")
def corpus():
    return {name: construction.fixture(name) for name in construction.FIXTURE_NAMES}


def fx(name):
    return construction.fixture(name)
