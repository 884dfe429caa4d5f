import pytest

from egyfrac import build_table


@pytest.fixture(scope="session")
def table():
    # one shared table large enough for the sieve-density experiment
    return build_table(2_000_000)


@pytest.fixture(scope="session")
def small_table():
    return build_table(10_000)
