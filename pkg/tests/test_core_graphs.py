import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swapdist import (
    BipartiteDegreeSequence,
    BipartiteGraph,
    DegreeMismatch,
    DegreeSequence,
    DirectedDegreeSequence,
    DirectedGraph,
    SimpleGraph,
    bipartite_representation,
    degree_sequence,
    fingerprint,
    halved_hamming,
    symmetric_difference,
)

from conftest import two_triangles_shared_vertex_pair, random_simple_pair


def test_degree_sequence_triangle():
    g = SimpleGraph(3, [(0, 1), (1, 2), (0, 2)])
    assert degree_sequence(g) == DegreeSequence([2, 2, 2])


def test_degree_sequence_empty():
    assert degree_sequence(SimpleGraph(4)) == DegreeSequence([0, 0, 0, 0])


def test_degree_sequence_two_triangle_example():
    g1, _ = two_triangles_shared_vertex_pair()
    assert degree_sequence(g1) == DirectedDegreeSequence([2, 1, 1, 1, 1], [2, 1, 1, 1, 1])


def test_degree_sequence_bipartite():
    b = BipartiteGraph(2, 3, [(0, 0), (0, 1), (1, 1)])
    assert degree_sequence(b) == BipartiteDegreeSequence([2, 1], [1, 2, 0])


def test_graph_validation():
    with pytest.raises(ValueError):
        SimpleGraph(3, [(0, 0)])
    with pytest.raises(ValueError):
        SimpleGraph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        DirectedGraph(2, [(0, 2)])
    # antiparallel pair is fine
    DirectedGraph(2, [(0, 1), (1, 0)])


def test_symmetric_difference_identical():
    g = SimpleGraph(4, [(0, 1), (2, 3)])
    rb = symmetric_difference(g, g)
    assert rb.edge_count == 0 and rb.is_balanced()


def test_symmetric_difference_matchings():
    g1 = SimpleGraph(4, [(0, 1), (2, 3)])
    g2 = SimpleGraph(4, [(0, 2), (1, 3)])
    rb = symmetric_difference(g1, g2)
    assert rb.red == frozenset({(0, 1), (2, 3)})
    assert rb.blue == frozenset({(0, 2), (1, 3)})
    assert rb.is_balanced()


def test_symmetric_difference_degree_mismatch_is_eager():
    g1 = SimpleGraph(3, [(0, 1)])
    g2 = SimpleGraph(3, [(1, 2)])
    with pytest.raises(DegreeMismatch):
        symmetric_difference(g1, g2)


def test_two_triangle_pair_difference_is_twelve_edges():
    g1, g2 = two_triangles_shared_vertex_pair()
    rb = symmetric_difference(g1, g2)
    assert rb.kind == "d"
    assert rb.edge_count == 12
    assert rb.is_balanced()
    assert rb.non_chords == frozenset((x, 5 + x) for x in range(5))


def test_halved_hamming():
    g1 = SimpleGraph(4, [(0, 1), (2, 3)])
    g2 = SimpleGraph(4, [(0, 2), (1, 3)])
    assert halved_hamming(g1, g1) == 0
    assert halved_hamming(g1, g2) == 2
    d1, d2 = two_triangles_shared_vertex_pair()
    assert halved_hamming(d1, d2) == 6


def test_bipartite_representation_single_edge():
    rep = bipartite_representation(DirectedGraph(2, [(0, 1)]))
    assert rep.graph.edges == frozenset({(0, 1)})
    assert (0, 0) in rep.non_chords and (1, 1) in rep.non_chords


def test_bipartite_representation_three_cycle():
    rep = bipartite_representation(DirectedGraph(3, [(0, 1), (1, 2), (2, 0)]))
    assert rep.graph.edges == frozenset({(0, 1), (1, 2), (2, 0)})


def test_bipartite_representation_two_triangle_realization():
    g1, _ = two_triangles_shared_vertex_pair()
    rep = bipartite_representation(g1)
    assert len(rep.graph.edges) == 6
    assert not rep.graph.edges & rep.non_chords


def test_bipartite_representation_roundtrip_random():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(1, 8)
        arcs = [(x, y) for x in range(n) for y in range(n) if x != y and rng.random() < 0.4]
        g = DirectedGraph(n, arcs)
        rep = bipartite_representation(g)
        assert rep.to_directed() == g
        assert degree_sequence(rep.graph).class_u == degree_sequence(g).out_degrees
        assert degree_sequence(rep.graph).class_w == degree_sequence(g).in_degrees


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**9), n=st.integers(4, 9))
def test_difference_balanced_and_red_count(seed, n):
    g1, g2 = random_simple_pair(random.Random(seed), n)
    rb = symmetric_difference(g1, g2)
    assert rb.is_balanced()
    assert halved_hamming(g1, g2) == len(rb.red) == len(rb.blue)


def test_fingerprint_stability():
    g = SimpleGraph(4, [(2, 3), (0, 1)])
    h = SimpleGraph(4, [(0, 1), (2, 3)])
    assert fingerprint(g) == fingerprint(h)
    assert fingerprint(g) != fingerprint(SimpleGraph(4, [(0, 1)]))
