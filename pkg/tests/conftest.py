"""Shared builders and brute-force baselines for the test suite."""

from __future__ import annotations

import random

import pytest

from swapdist import DirectedGraph, SimpleGraph


def all_simple_graphs(n: int):
    """Every labeled simple graph on n vertices (use only for tiny n)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in range(1 << len(pairs)):
        yield SimpleGraph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def all_digraphs(n: int):
    """Every labeled loop-free digraph on n vertices (use only for tiny n)."""
    arcs = [(x, y) for x in range(n) for y in range(n) if x != y]
    for bits in range(1 << len(arcs)):
        yield DirectedGraph(n, [arcs[i] for i in range(len(arcs)) if bits >> i & 1])


def two_triangles_shared_vertex_pair():
    """Two oriented triangles sharing one vertex, and the reversed pair."""
    g1 = DirectedGraph(5, [(1, 2), (2, 0), (0, 1), (0, 3), (3, 4), (4, 0)])
    g2 = DirectedGraph(5, [(2, 1), (0, 2), (1, 0), (3, 0), (4, 3), (0, 4)])
    return g1, g2


def regular_triangle_difference_pair():
    """Two 2-regular digraphs on six vertices differing in one oriented
    triangle's orientation."""
    rest = [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0), (3, 4), (4, 5), (5, 3)]
    g1 = DirectedGraph(6, [(0, 1), (1, 2), (2, 0)] + rest)
    g2 = DirectedGraph(6, [(1, 0), (2, 1), (0, 2)] + rest)
    return g1, g2


def oriented_triangle_pair():
    return (
        DirectedGraph(3, [(0, 1), (1, 2), (2, 0)]),
        DirectedGraph(3, [(1, 0), (2, 1), (0, 2)]),
    )


def random_simple_pair(rng: random.Random, n: int, swap_attempts: int | None = None):
    """A random graph and a degree-equal partner reached by a random swap walk."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = {p for p in pairs if rng.random() < 0.5}
    g1 = SimpleGraph(n, edges)
    state = set(edges)
    for _ in range(swap_attempts if swap_attempts is not None else 3 * max(1, len(edges))):
        es = sorted(state)
        if len(es) < 2:
            break
        e1, e2 = rng.sample(es, 2)
        a, c = e1
        b, d = e2
        if len({a, b, c, d}) != 4:
            continue
        p, q = rng.choice((((a, b), (c, d)), ((a, d), (c, b))))
        p, q = tuple(sorted(p)), tuple(sorted(q))
        if p in state or q in state:
            continue
        state -= {e1, e2}
        state |= {p, q}
    return g1, SimpleGraph(n, state)


def random_directed_pair(rng: random.Random, n: int, swap_attempts: int | None = None):
    arcs = [(x, y) for x in range(n) for y in range(n) if x != y]
    edges = {a for a in arcs if rng.random() < 0.5}
    g1 = DirectedGraph(n, edges)
    state = set(edges)
    for _ in range(swap_attempts if swap_attempts is not None else 3 * max(1, len(edges))):
        es = sorted(state)
        if len(es) < 2:
            break
        (x, y), (z, w) = rng.sample(es, 2)
        if x == z or y == w or x == w or z == y:
            continue
        p, q = (x, w), (z, y)
        if p in state or q in state:
            continue
        state -= {(x, y), (z, w)}
        state |= {p, q}
    return g1, DirectedGraph(n, state)


@pytest.fixture
def rng():
    return random.Random(20240817)
