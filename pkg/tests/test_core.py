"""Core types, statistics, and JSON interchange."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

import bergefree as bf
from conftest import graphs, hypergraphs
from oracles import bfs_neighborhoods, shadow_by_scan


# ---------------------------------------------------------------------------
# weight
# ---------------------------------------------------------------------------

def test_weight_empty_hypergraph():
    assert bf.weight(bf.Hypergraph(0)) == 0
    assert bf.weight(bf.Hypergraph(5)) == 0


def test_weight_single_four_set():
    assert bf.weight(bf.Hypergraph(4, ({0, 1, 2, 3},))) == 1


def test_weight_heawood_blowup(heawood_blowup):
    # naive summation oracle: 21 hyperedges of size 6
    assert len(heawood_blowup) == 21
    assert all(len(h) == 6 for h in heawood_blowup.hyperedges)
    naive = sum(len(h) for h in heawood_blowup.hyperedges) - 3 * len(heawood_blowup)
    assert bf.weight(heawood_blowup) == naive == 63


def test_weight_can_be_negative():
    assert bf.weight(bf.Hypergraph(3, ({0, 1},))) == -1


@given(hypergraphs(min_size=3))
def test_weight_equals_clamped_sum_for_big_hyperedges(h):
    if any(len(e) < 3 for e in h.hyperedges):  # tiny n clamps the strategy
        return
    assert bf.weight(h) == sum(max(0, len(e) - 3) for e in h.hyperedges)


# ---------------------------------------------------------------------------
# neighborhoods
# ---------------------------------------------------------------------------

def test_neighborhoods_path():
    path = bf.Graph(3, frozenset({(0, 1), (1, 2)}))
    assert bf.neighborhoods(path, 0) == (frozenset({1}), frozenset({2}))


def test_neighborhoods_isolated_vertex():
    g = bf.Graph(4, frozenset({(1, 2)}))
    assert bf.neighborhoods(g, 0) == (frozenset(), frozenset())


def test_neighborhoods_out_of_range():
    with pytest.raises(ValueError):
        bf.neighborhoods(bf.Graph(3), 3)


def test_neighborhoods_accepts_colored_graph():
    cg = bf.ColoredGraph(3, ((0, 1, 0), (1, 2, 1)))
    assert bf.neighborhoods(cg, 0) == (frozenset({1}), frozenset({2}))


@given(graphs(), st.data())
def test_neighborhoods_match_bfs_distance_classes(g, data):
    if g.n == 0:
        return
    v = data.draw(st.integers(0, g.n - 1))
    n1, n2 = bf.neighborhoods(g, v)
    assert (n1, n2) == bfs_neighborhoods(g, v)
    assert not n1 & n2
    assert v not in n1 | n2


# ---------------------------------------------------------------------------
# shadow
# ---------------------------------------------------------------------------

def test_shadow_single_hyperedge_is_clique():
    g = bf.shadow(bf.Hypergraph(3, ({0, 1, 2},)))
    assert g.edges == frozenset({(0, 1), (0, 2), (1, 2)})


def test_shadow_disjoint_hyperedges():
    g = bf.shadow(bf.Hypergraph(4, ({0, 1}, {2, 3})))
    assert g.edges == frozenset({(0, 1), (2, 3)})


@given(hypergraphs())
def test_shadow_matches_pair_scan(h):
    assert bf.shadow(h).edges == frozenset(shadow_by_scan(h))


@given(hypergraphs(max_n=6), st.sets(st.integers(0, 5), min_size=2, max_size=4))
def test_shadow_monotone_under_hyperedge_addition(h, extra):
    extra = frozenset(v for v in extra if v < h.n)
    if len(extra) < 2:
        return
    bigger = bf.Hypergraph(h.n, h.hyperedges + (extra,))
    assert bf.shadow(h).edges <= bf.shadow(bigger).edges


# ---------------------------------------------------------------------------
# degree_stats
# ---------------------------------------------------------------------------

def test_degree_stats_triangle():
    degrees, avg = bf.degree_stats(bf.Graph(3, frozenset({(0, 1), (1, 2), (0, 2)})))
    assert degrees == [2, 2, 2]
    assert avg == 2.0


def test_degree_stats_single_edge():
    degrees, avg = bf.degree_stats(bf.Graph(2, frozenset({(0, 1)})))
    assert degrees == [1, 1]
    assert avg == 1.0


def test_degree_stats_heawood_is_cubic(heawood_graph):
    degrees, avg = bf.degree_stats(heawood_graph)
    assert set(degrees) == {3}  # q + 1 with q = 2
    assert avg == 3.0


def test_degree_stats_empty_graph_is_signaled():
    with pytest.raises(ValueError):
        bf.degree_stats(bf.Graph(0))


# ---------------------------------------------------------------------------
# type invariants
# ---------------------------------------------------------------------------

def test_hypergraph_rejects_out_of_range_vertex():
    with pytest.raises(ValueError):
        bf.Hypergraph(3, ({0, 3},))


def test_hypergraph_allows_duplicate_hyperedges():
    h = bf.Hypergraph(4, ({0, 1, 2}, {0, 1, 2}))
    assert h.hyperedges[0] == h.hyperedges[1]
    assert len(h) == 2


def test_graph_rejects_loops_and_normalizes():
    with pytest.raises(ValueError):
        bf.Graph(3, frozenset({(1, 1)}))
    g = bf.Graph(3, frozenset({(2, 0)}))
    assert g.edges == frozenset({(0, 2)})


def test_colored_graph_rejects_duplicate_pair_color():
    with pytest.raises(ValueError):
        bf.ColoredGraph(3, ((0, 1, 5), (1, 0, 5)))


def test_colored_graph_allows_parallel_distinct_colors():
    cg = bf.ColoredGraph(3, ((0, 1, 0), (0, 1, 1)))
    assert cg.colors_of(1, 0) == (0, 1)
    assert cg.simple_projection.edges == frozenset({(0, 1)})


def test_bipartite_graph_rejects_overlapping_parts():
    with pytest.raises(ValueError):
        bf.BipartiteGraph((0, 1), (1, 2), frozenset())


def test_bipartite_graph_rejects_non_crossing_edge():
    with pytest.raises(ValueError):
        bf.BipartiteGraph((0, 1), (2, 3), frozenset({(0, 1)}))


def test_digraph_rejects_self_arc():
    with pytest.raises(ValueError):
        bf.Digraph(2, frozenset({(1, 1)}))


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

def test_hypergraph_json_round_trip(tmp_path):
    h = bf.Hypergraph(6, ({3, 1, 0, 2}, {4, 5}, {3, 1, 0, 2}))
    path = tmp_path / "h.json"
    bf.save_hypergraph(h, str(path))
    again = bf.load_hypergraph(str(path))
    assert again == h
    # canonical writer is byte-stable
    bf.save_hypergraph(again, str(path.with_suffix(".2.json")))
    assert path.read_bytes() == path.with_suffix(".2.json").read_bytes()


def test_hypergraph_json_preserves_hyperedge_order():
    doc = {"n": 4, "hyperedges": [[2, 3], [0, 1]]}
    h = bf.Hypergraph.from_json_dict(doc)
    assert h.hyperedges == (frozenset({2, 3}), frozenset({0, 1}))
    assert h.to_json_dict() == {"n": 4, "hyperedges": [[2, 3], [0, 1]]}


@pytest.mark.parametrize("doc", [
    [],
    {"n": 3},
    {"hyperedges": []},
    {"n": "3", "hyperedges": []},
    {"n": 3, "hyperedges": [[0, 0]]},
    {"n": 3, "hyperedges": [[0, 5]]},
    {"n": 3, "hyperedges": [["a"]]},
    {"n": 3, "hyperedges": "nope"},
])
def test_hypergraph_json_rejects_malformed(doc):
    with pytest.raises(bf.FormatError):
        bf.Hypergraph.from_json_dict(doc)


def test_graph_json_round_trip():
    g = bf.Graph(4, frozenset({(0, 3), (1, 2)}))
    assert bf.Graph.from_json_dict(g.to_json_dict()) == g
    assert g.to_json_dict() == {"n": 4, "edges": [[0, 3], [1, 2]]}


def test_colored_graph_json_round_trip():
    cg = bf.ColoredGraph(4, ((0, 1, 0), (0, 1, 2), (2, 3, 1)))
    assert bf.ColoredGraph.from_json_dict(cg.to_json_dict()) == cg


def test_invalid_json_reports_position():
    with pytest.raises(bf.FormatError, match="line 1"):
        bf.core.loads_document("{nope}")


def test_worker_count_env_parsing(monkeypatch):
    monkeypatch.delenv("BERGE_THREADS", raising=False)
    assert bf.core.worker_count() == 1
    monkeypatch.setenv("BERGE_THREADS", "4")
    assert bf.core.worker_count() == 4
    monkeypatch.setenv("BERGE_THREADS", "0")
    assert bf.core.worker_count() == 1
    monkeypatch.setenv("BERGE_THREADS", "many")
    assert bf.core.worker_count() == 1
