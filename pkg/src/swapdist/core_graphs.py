"""Labeled simple graphs (undirected, bipartite, directed), degree sequences,
symmetric differences, and the directed-to-bipartite representation.

Vertices are dense 0-based indices.  All types are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import DegreeMismatch

Edge = tuple[int, int]


def _as_int_tuple(values: Iterable[int], what: str) -> tuple[int, ...]:
    out = []
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"{what} must be integers, got {v!r}")
        if v < 0:
            raise ValueError(f"{what} must be non-negative, got {v}")
        out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class DegreeSequence:
    """Per-vertex degree counts of an undirected graph, in vertex order."""

    degrees: tuple[int, ...]

    def __init__(self, degrees: Iterable[int]):
        object.__setattr__(self, "degrees", _as_int_tuple(degrees, "degrees"))
        if len(self.degrees) < 1:
            raise ValueError("degree sequence must have length >= 1")

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)


@dataclass(frozen=True)
class BipartiteDegreeSequence:
    """Degrees of the two vertex classes of a bipartite graph."""

    class_u: tuple[int, ...]
    class_w: tuple[int, ...]

    def __init__(self, class_u: Iterable[int], class_w: Iterable[int]):
        object.__setattr__(self, "class_u", _as_int_tuple(class_u, "class_u degrees"))
        object.__setattr__(self, "class_w", _as_int_tuple(class_w, "class_w degrees"))
        if not self.class_u or not self.class_w:
            raise ValueError("both vertex classes must be non-empty")


@dataclass(frozen=True)
class DirectedDegreeSequence:
    """Out-degree and in-degree of every vertex of a directed graph."""

    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]

    def __init__(self, out_degrees: Iterable[int], in_degrees: Iterable[int]):
        object.__setattr__(self, "out_degrees", _as_int_tuple(out_degrees, "out-degrees"))
        object.__setattr__(self, "in_degrees", _as_int_tuple(in_degrees, "in-degrees"))
        if len(self.out_degrees) != len(self.in_degrees):
            raise ValueError("out- and in-degree lists must have equal length")
        if len(self.out_degrees) < 1:
            raise ValueError("directed degree sequence must have length >= 1")

    def __len__(self) -> int:
        return len(self.out_degrees)


def _normalize_undirected(edges: Iterable[Iterable[int]], n: int) -> frozenset[Edge]:
    out = set()
    for e in edges:
        a, b = e
        if a == b:
            raise ValueError(f"loop at vertex {a} not allowed")
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"edge ({a},{b}) out of range for {n} vertices")
        key = (a, b) if a < b else (b, a)
        if key in out:
            raise ValueError(f"duplicate edge {key}")
        out.add(key)
    return frozenset(out)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", _normalize_undirected(edges, n))

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self.edges


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with classes of size k and l; edges are (u, w) index pairs."""

    k: int
    l: int
    edges: frozenset[Edge]

    def __init__(self, k: int, l: int, edges: Iterable[Iterable[int]] = ()):
        if k < 0 or l < 0:
            raise ValueError("class sizes must be non-negative")
        out = set()
        for e in edges:
            u, w = e
            if not (0 <= u < k and 0 <= w < l):
                raise ValueError(f"edge ({u},{w}) out of range for classes {k},{l}")
            if (u, w) in out:
                raise ValueError(f"duplicate edge ({u},{w})")
            out.add((u, w))
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "edges", frozenset(out))

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class DirectedGraph:
    """Loop-free directed graph; antiparallel edge pairs are allowed."""

    n: int
    edges: frozenset[Edge]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        out = set()
        for e in edges:
            x, y = e
            if x == y:
                raise ValueError(f"loop at vertex {x} not allowed")
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"edge ({x},{y}) out of range for {n} vertices")
            if (x, y) in out:
                raise ValueError(f"duplicate directed edge ({x},{y})")
            out.add((x, y))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(out))

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)


Graph = Union[SimpleGraph, BipartiteGraph, DirectedGraph]
AnyDegreeSequence = Union[DegreeSequence, BipartiteDegreeSequence, DirectedDegreeSequence]


@dataclass(frozen=True)
class BipartiteRepresentation:
    """A directed graph encoded as a bipartite graph with k = l = n.

    Edge (u_x, w_y) stands for the directed edge x -> y; the diagonal pairs
    (u_x, w_x) can never hold an edge and are recorded as non-chords.
    """

    graph: BipartiteGraph
    non_chords: frozenset[Edge] = field(default_factory=frozenset)

    def to_directed(self) -> DirectedGraph:
        return DirectedGraph(self.graph.k, self.graph.edges)


@dataclass(frozen=True)
class RedBlueGraph:
    """Symmetric difference of two realizations, edges colored by origin.

    Vertices use one global index space: plain 0..n-1 for the undirected
    kind; for the bipartite kinds the u-class occupies 0..left_size-1 and
    the w-class occupies left_size..n_vertices-1.  The directed kind is the
    bipartite representation with the diagonal pairs stored in non_chords.
    """

    kind: str  # "u" | "b" | "d"
    n_vertices: int
    red: frozenset[Edge]
    blue: frozenset[Edge]
    left_size: int = 0
    non_chords: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind not in ("u", "b", "d"):
            raise ValueError(f"unknown red-blue graph kind {self.kind!r}")
        if self.red & self.blue:
            raise ValueError("an edge cannot be both red and blue")

    @property
    def edge_count(self) -> int:
        return len(self.red) + len(self.blue)

    def edges(self) -> frozenset[Edge]:
        return self.red | self.blue

    def color_of(self, edge: Edge) -> str:
        if edge in self.red:
            return "red"
        if edge in self.blue:
            return "blue"
        raise KeyError(f"edge {edge} not in red-blue graph")

    def is_bipartite_kind(self) -> bool:
        return self.kind in ("b", "d")

    def partner(self, v: int) -> int:
        """The opposite-class copy of the same source vertex (directed kind)."""
        if self.kind != "d":
            raise ValueError("partner is defined only for the directed kind")
        return v + self.left_size if v < self.left_size else v - self.left_size

    def is_chord(self, a: int, b: int) -> bool:
        """Whether the vertex pair {a, b} is eligible to hold an edge."""
        if a == b:
            return False
        if self.kind == "u":
            return True
        key = (a, b) if a < b else (b, a)
        if not (key[0] < self.left_size <= key[1]):
            return False
        return key not in self.non_chords

    def degree_imbalances(self) -> dict[int, int]:
        """Per-vertex red-degree minus blue-degree; empty when balanced."""
        delta: dict[int, int] = {}
        for a, b in self.red:
            delta[a] = delta.get(a, 0) + 1
            delta[b] = delta.get(b, 0) + 1
        for a, b in self.blue:
            delta[a] = delta.get(a, 0) - 1
            delta[b] = delta.get(b, 0) - 1
        return {v: d for v, d in delta.items() if d != 0}

    def is_balanced(self) -> bool:
        return not self.degree_imbalances()


def degree_sequence(g: Graph) -> AnyDegreeSequence:
    """Per-vertex degree counts of g, in input vertex order."""
    if isinstance(g, SimpleGraph):
        deg = [0] * g.n
        for a, b in g.edges:
            deg[a] += 1
            deg[b] += 1
        return DegreeSequence(deg)
    if isinstance(g, BipartiteGraph):
        du = [0] * g.k
        dw = [0] * g.l
        for u, w in g.edges:
            du[u] += 1
            dw[w] += 1
        return BipartiteDegreeSequence(du, dw)
    if isinstance(g, DirectedGraph):
        out = [0] * g.n
        inn = [0] * g.n
        for x, y in g.edges:
            out[x] += 1
            inn[y] += 1
        return DirectedDegreeSequence(out, inn)
    raise TypeError(f"unsupported graph type {type(g).__name__}")


def bipartite_representation(g: DirectedGraph) -> BipartiteRepresentation:
    """Encode a directed graph as a bipartite graph with one copy of every
    vertex in each class; edge x -> y becomes (u_x, w_y)."""
    b = BipartiteGraph(g.n, g.n, g.edges)
    return BipartiteRepresentation(b, frozenset((x, x) for x in range(g.n)))


def _global_bipartite_edges(edges: Iterable[Edge], k: int) -> frozenset[Edge]:
    return frozenset((u, k + w) for u, w in edges)


def symmetric_difference(g1: Graph, g2: Graph) -> RedBlueGraph:
    """The red-blue graph with red = edges of g1 only, blue = edges of g2 only.

    Raises DegreeMismatch unless both graphs realize the same degree sequence.
    """
    if type(g1) is not type(g2):
        raise TypeError("both graphs must have the same type")
    if degree_sequence(g1) != degree_sequence(g2):
        raise DegreeMismatch("graphs do not share a degree sequence")
    if isinstance(g1, SimpleGraph):
        return RedBlueGraph("u", g1.n, g1.edges - g2.edges, g2.edges - g1.edges)
    if isinstance(g1, BipartiteGraph):
        red = _global_bipartite_edges(g1.edges - g2.edges, g1.k)
        blue = _global_bipartite_edges(g2.edges - g1.edges, g1.k)
        return RedBlueGraph("b", g1.k + g1.l, red, blue, left_size=g1.k)
    # directed: work on the bipartite representation, diagonal pairs excluded
    n = g1.n
    red = _global_bipartite_edges(g1.edges - g2.edges, n)
    blue = _global_bipartite_edges(g2.edges - g1.edges, n)
    non_chords = frozenset((x, n + x) for x in range(n))
    return RedBlueGraph("d", 2 * n, red, blue, left_size=n, non_chords=non_chords)


def halved_hamming(g1: Graph, g2: Graph) -> int:
    """Half the size of the symmetric difference; equals the red edge count."""
    rb = symmetric_difference(g1, g2)
    return len(rb.red)


def fingerprint(g: Graph) -> str:
    """Canonical sorted-edge-list hash of a graph, stable across runs."""
    if isinstance(g, SimpleGraph):
        head = f"u {g.n}"
    elif isinstance(g, BipartiteGraph):
        head = f"b {g.k} {g.l}"
    elif isinstance(g, DirectedGraph):
        head = f"d {g.n}"
    else:
        raise TypeError(f"unsupported graph type {type(g).__name__}")
    body = ";".join(f"{a},{b}" for a, b in g.edge_list())
    return hashlib.sha256(f"{head}|{body}".encode()).hexdigest()
