import itertools

import pytest

from swapdist import (
    BipartiteDegreeSequence,
    DegreeSequence,
    DirectedDegreeSequence,
    NotGraphical,
    bipartite_realize,
    degree_sequence,
    directed_realize,
    erdos_gallai_check,
    havel_hakimi,
)

from conftest import all_digraphs, all_simple_graphs


def brute_force_graphical(degrees) -> bool:
    n = len(degrees)
    return any(degree_sequence(g) == DegreeSequence(degrees) for g in all_simple_graphs(n))


def test_erdos_gallai_examples():
    assert erdos_gallai_check(DegreeSequence([3, 3, 3, 3]))
    assert not erdos_gallai_check(DegreeSequence([3, 3, 1, 1]))
    assert not brute_force_graphical([3, 3, 1, 1])
    for n in (2, 4, 6, 8):
        assert erdos_gallai_check(DegreeSequence([1] * n))
    assert not erdos_gallai_check(DegreeSequence([1, 1, 1]))


def test_havel_hakimi_examples():
    tri = havel_hakimi(DegreeSequence([2, 2, 2]))
    assert tri.edges == frozenset({(0, 1), (0, 2), (1, 2)})
    assert havel_hakimi(DegreeSequence([0, 0, 0])).edges == frozenset()
    with pytest.raises(NotGraphical):
        havel_hakimi(DegreeSequence([3, 3, 1, 1]))


def test_havel_hakimi_output_realizes_input():
    for degs in itertools.combinations_with_replacement(range(6), 6):
        d = DegreeSequence(tuple(sorted(degs, reverse=True)))
        if erdos_gallai_check(d):
            assert degree_sequence(havel_hakimi(d)) == d


def test_havel_hakimi_matches_erdos_gallai_small():
    for n in range(1, 6):
        for degs in itertools.product(range(n), repeat=n):
            d = DegreeSequence(degs)
            constructed = True
            try:
                havel_hakimi(d)
            except NotGraphical:
                constructed = False
            assert constructed == erdos_gallai_check(d), degs


def test_bipartite_realize_examples():
    m = bipartite_realize(BipartiteDegreeSequence([1, 1], [1, 1]))
    assert m.edges == frozenset({(0, 0), (1, 1)})  # lexicographically least matching
    k22 = bipartite_realize(BipartiteDegreeSequence([2, 2], [2, 2]))
    assert k22.edges == frozenset({(0, 0), (0, 1), (1, 0), (1, 1)})
    with pytest.raises(NotGraphical):
        bipartite_realize(BipartiteDegreeSequence([3], [1, 1]))


def test_bipartite_realize_matches_enumeration():
    achievable = set()
    for bits in range(1 << 6):  # all bipartite graphs on classes of size 2 and 3
        edges = [(u, w) for i, (u, w) in enumerate((u, w) for u in range(2) for w in range(3)) if bits >> i & 1]
        from swapdist import BipartiteGraph

        ds = degree_sequence(BipartiteGraph(2, 3, edges))
        achievable.add((ds.class_u, ds.class_w))
    for cu in itertools.product(range(4), repeat=2):
        for cw in itertools.product(range(3), repeat=3):
            ok = True
            try:
                g = bipartite_realize(BipartiteDegreeSequence(cu, cw))
                assert degree_sequence(g) == BipartiteDegreeSequence(cu, cw)
            except NotGraphical:
                ok = False
            assert ok == ((tuple(cu), tuple(cw)) in achievable), (cu, cw)


def test_directed_realize_examples():
    tri = directed_realize(DirectedDegreeSequence([1, 1, 1], [1, 1, 1]))
    assert tri.edges in (
        frozenset({(0, 1), (1, 2), (2, 0)}),
        frozenset({(0, 2), (2, 1), (1, 0)}),
    )
    assert directed_realize(DirectedDegreeSequence([0, 0], [0, 0])).edges == frozenset()
    with pytest.raises(NotGraphical):
        directed_realize(DirectedDegreeSequence([2, 0], [0, 2]))


def test_directed_realize_matches_enumeration_small():
    for n in (2, 3):
        achievable = set()
        for g in all_digraphs(n):
            ds = degree_sequence(g)
            achievable.add((ds.out_degrees, ds.in_degrees))
        for alpha in itertools.product(range(n), repeat=n):
            for beta in itertools.product(range(n), repeat=n):
                d = DirectedDegreeSequence(alpha, beta)
                ok = True
                try:
                    g = directed_realize(d)
                    assert degree_sequence(g) == d
                except NotGraphical:
                    ok = False
                assert ok == ((alpha, beta) in achievable), (alpha, beta)
