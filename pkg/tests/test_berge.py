"""Berge cycle detection: examples, oracle agreement, and witness validity."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bergefree as bf
from conftest import hypergraphs


def test_loose_four_cycle_witness(loose_four_cycle):
    witness = bf.find_berge_cycle(loose_four_cycle, 4)
    assert witness == bf.BergeCycleWitness((0, 1, 2, 3), (0, 1, 2, 3))
    bf.validate_witness(loose_four_cycle, witness)
    assert not bf.is_berge_c4_free(loose_four_cycle)


def test_three_copies_of_a_four_set_are_free():
    h = bf.Hypergraph(4, ({0, 1, 2, 3},) * 3)
    assert bf.find_berge_cycle(h, 4) is None
    assert bf.naive_berge_oracle(h, 4) is None
    assert bf.is_berge_c4_free(h)


def test_four_copies_of_a_four_set_contain_a_cycle():
    h = bf.Hypergraph(4, ({0, 1, 2, 3},) * 4)
    witness = bf.find_berge_cycle(h, 4)
    assert witness is not None
    bf.validate_witness(h, witness)
    assert bf.naive_berge_oracle(h, 4) is not None


def test_empty_hypergraph_is_free():
    assert bf.is_berge_c4_free(bf.Hypergraph(0))
    assert bf.is_berge_c4_free(bf.Hypergraph(10))


def test_heawood_blowup_is_free(heawood_blowup):
    assert bf.is_berge_c4_free(heawood_blowup)


def test_cycle_length_below_two_is_a_usage_error():
    h = bf.Hypergraph(3, ({0, 1, 2},))
    with pytest.raises(ValueError):
        bf.find_berge_cycle(h, 1)
    with pytest.raises(ValueError):
        bf.naive_berge_oracle(h, 1)


def test_k_beyond_vertex_count_is_impossible():
    h = bf.Hypergraph(3, ({0, 1, 2},) * 5)
    assert bf.find_berge_cycle(h, 4) is None


def test_berge_c2_needs_two_hyperedges_sharing_a_pair():
    shared = bf.Hypergraph(4, ({0, 1, 2}, {1, 2, 3}))
    witness = bf.find_berge_cycle(shared, 2)
    assert witness is not None
    assert set(witness.vertices) == {1, 2}
    lean = bf.Hypergraph(4, ({0, 1}, {1, 2}, {2, 3}))
    assert bf.find_berge_cycle(lean, 2) is None


@pytest.mark.parametrize("k", [5, 6, 7, 8])
def test_loose_cycles_up_to_length_eight(k):
    # hyperedge i covers the pair (i, i+1 mod k) plus a private vertex
    hyperedges = tuple(frozenset({i, (i + 1) % k, k + i}) for i in range(k))
    h = bf.Hypergraph(2 * k, hyperedges)
    witness = bf.find_berge_cycle(h, k)
    assert witness is not None
    bf.validate_witness(h, witness)
    # the oracle hits the witness on its first vertex tuple (0..k-1); keep it
    # that way, a negative oracle run at n=16 would not terminate in test time
    assert bf.naive_berge_oracle(h, k, max_vertices=16) is not None
    # one hyperedge short of closing: no cycle of that length
    clipped = bf.Hypergraph(2 * k, hyperedges[:-1])
    assert bf.find_berge_cycle(clipped, k) is None


def test_oracle_size_guard():
    big = bf.Hypergraph(13, ({0, 1},))
    with pytest.raises(ValueError, match="guard"):
        bf.naive_berge_oracle(big, 2)


def test_witness_validation_rejects_corrupt_witnesses(loose_four_cycle):
    with pytest.raises(ValueError):
        bf.validate_witness(loose_four_cycle,
                            bf.BergeCycleWitness((0, 1, 2, 2), (0, 1, 2, 3)))
    with pytest.raises(ValueError):
        bf.validate_witness(loose_four_cycle,
                            bf.BergeCycleWitness((0, 1, 2, 3), (0, 1, 2, 2)))
    with pytest.raises(ValueError):
        bf.validate_witness(loose_four_cycle,
                            bf.BergeCycleWitness((0, 2, 1, 3), (0, 1, 2, 3)))


@settings(max_examples=200)
@given(hypergraphs(max_n=5, max_m=4, min_size=2, max_size=5),
       st.integers(2, 5))
def test_detector_agrees_with_naive_oracle(h, k):
    fast = bf.find_berge_cycle(h, k)
    slow = bf.naive_berge_oracle(h, k)
    assert (fast is None) == (slow is None)
    if fast is not None:
        bf.validate_witness(h, fast)
        bf.validate_witness(h, slow)


@settings(max_examples=100)
@given(hypergraphs(max_n=6, max_m=5, min_size=2, max_size=4),
       st.sets(st.integers(0, 5), min_size=2, max_size=4))
def test_found_cycle_survives_hyperedge_addition(h, extra):
    extra = frozenset(v for v in extra if v < h.n)
    if len(extra) < 2:
        return
    if bf.find_berge_cycle(h, 4) is None:
        return
    bigger = bf.Hypergraph(h.n, h.hyperedges + (extra,))
    assert bf.find_berge_cycle(bigger, 4) is not None


def test_find_c4_in_k22():
    k22 = bf.Graph(4, frozenset({(0, 2), (0, 3), (1, 2), (1, 3)}))
    cycle = bf.find_c4_in_graph(k22)
    assert cycle is not None
    x, a, y, b = cycle
    assert len({x, a, y, b}) == 4
    for u, v in ((x, a), (a, y), (y, b), (b, x)):
        assert (min(u, v), max(u, v)) in k22.edges


def test_find_c4_in_trees_is_empty():
    path = bf.Graph(5, frozenset({(0, 1), (1, 2), (2, 3), (3, 4)}))
    star = bf.Graph(5, frozenset({(0, 1), (0, 2), (0, 3), (0, 4)}))
    assert bf.find_c4_in_graph(path) is None
    assert bf.find_c4_in_graph(star) is None


def test_heawood_graph_has_no_c4(heawood_graph):
    assert bf.find_c4_in_graph(heawood_graph) is None


def test_find_triangle():
    assert bf.find_triangle(bf.Graph(3, frozenset({(0, 1), (1, 2), (0, 2)}))) == (0, 1, 2)
    assert bf.find_triangle(bf.Graph(4, frozenset({(0, 1), (1, 2), (2, 3)}))) is None


def test_heawood_graph_is_triangle_free(heawood_graph):
    assert bf.find_triangle(heawood_graph) is None
