import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

import bergefree as bf

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@st.composite
def graphs(draw, max_n: int = 10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n < 2:
        return bf.Graph(n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs)))
    return bf.Graph(n, frozenset(edges))


@st.composite
def hypergraphs(draw, max_n: int = 8, max_m: int = 6,
                min_size: int = 1, max_size: int = 5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    m = draw(st.integers(min_value=0, max_value=max_m))
    hyperedges = []
    for _ in range(m):
        size = draw(st.integers(min_value=min(min_size, n),
                                max_value=min(max_size, n)))
        hyperedges.append(frozenset(draw(
            st.sets(st.integers(0, n - 1), min_size=size, max_size=size))))
    return bf.Hypergraph(n, tuple(hyperedges))


@pytest.fixture(scope="session")
def loose_four_cycle() -> bf.Hypergraph:
    return bf.Hypergraph(8, ({0, 1, 4}, {1, 2, 5}, {2, 3, 6}, {3, 0, 7}))


@pytest.fixture(scope="session")
def heawood_graph() -> bf.Graph:
    return bf.projective_plane_incidence(2).graph()


@pytest.fixture(scope="session")
def heawood_blowup(heawood_graph) -> bf.Hypergraph:
    return bf.blow_up(heawood_graph, 3)
