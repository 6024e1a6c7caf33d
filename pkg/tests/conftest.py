import pytest

from linwenger.graphs import FamilySpec, Graph


@pytest.fixture(scope="session")
def graph_cache():
    """Materialized linearized graphs, shared across the whole test session."""
    cache: dict[tuple[int, int, int], Graph] = {}

    def get(p: int, e: int, m: int) -> Graph:
        key = (p, e, m)
        if key not in cache:
            cache[key] = Graph(FamilySpec.linearized(p, e, m)).materialize()
        return cache[key]

    return get
