import pytest

from tribsum.catalog import list_all, lookup


@pytest.fixture(scope="session")
def tribonacci():
    return lookup("tribonacci").definition


@pytest.fixture(scope="session")
def perrin():
    return lookup("perrin").definition


@pytest.fixture(scope="session")
def pell_padovan():
    return lookup("pell-padovan").definition


@pytest.fixture(scope="session")
def catalog_defs():
    return [entry.definition for entry in list_all()]
