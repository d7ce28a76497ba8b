import pytest

from pezzo.store import Store


@pytest.fixture(scope="session")
def store():
    """Shared in-memory store with the bundled fixtures loaded."""
    return Store(cache_dir=None)


@pytest.fixture(scope="session")
def bare_store():
    """Store without fixtures, for empty-store behaviour."""
    return Store(cache_dir=None, load_fixtures=False)


class ExplodingStore(Store):
    """Store that fails on any access; proves a code path needs no data."""

    def __init__(self):
        super().__init__(cache_dir=None, load_fixtures=False)

    def get_or_compute(self, key):
        raise AssertionError(f"unexpected store access: {key}")

    def lookup(self, key):
        raise AssertionError(f"unexpected store access: {key}")


@pytest.fixture
def exploding_store():
    return ExplodingStore()
