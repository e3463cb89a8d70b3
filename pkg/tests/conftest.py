import pytest

from frobsum import decomposition


@pytest.fixture(scope="session")
def decomp_cache():
    """Session cache of computed summand lists keyed by (p, n, level);
    callers must not mutate the returned objects."""
    cache = {}

    def get(p, n, level="invariants"):
        key = (p, n, level)
        if key not in cache:
            cache[key] = decomposition.decompose(p, n, level)
        return cache[key]

    return get
