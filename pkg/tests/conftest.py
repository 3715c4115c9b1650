import pytest

from pinborel.corpus import load_entry


@pytest.fixture(scope="session")
def x1():
    return load_entry("X1").complex


@pytest.fixture(scope="session")
def x2():
    return load_entry("X2").complex
