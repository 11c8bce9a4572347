"""Alternating circuits over red-blue graphs and the Euler-style starting
decomposition that every refinement routine builds on.

A circuit is stored as its closed vertex sequence v_0 .. v_2t with
v_0 = v_2t; edge colors are recovered from the red-blue graph it lives in.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core_graphs import Edge, RedBlueGraph
from .errors import NotBalanced

__all__ = [
    "RedBlueGraph",
    "Circuit",
    "Decomposition",
    "euler_decompose",
    "validate_circuit",
    "is_elementary",
]


def edge_key(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Circuit:
    """Closed walk v_0 .. v_2t (with v_0 = v_2t) meant to alternate colors."""

    vertices: tuple[int, ...]

    def __init__(self, vertices):
        vs = tuple(vertices)
        if len(vs) < 2 or vs[0] != vs[-1]:
            raise ValueError("circuit must be a closed vertex sequence")
        object.__setattr__(self, "vertices", vs)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def half_length(self) -> int:
        return self.length // 2

    def edge_keys(self) -> list[Edge]:
        vs = self.vertices
        return [edge_key(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    def interior(self) -> tuple[int, ...]:
        """The vertex sequence with the duplicated endpoint dropped."""
        return self.vertices[:-1]

    def occurrence_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for v in self.interior():
            counts[v] = counts.get(v, 0) + 1
        return counts

    def unique_vertex_count(self) -> int:
        return sum(1 for c in self.occurrence_counts().values() if c == 1)

    def repeated_vertex_count(self) -> int:
        return sum(1 for c in self.occurrence_counts().values() if c > 1)

    def is_cycle(self) -> bool:
        inner = self.interior()
        return len(set(inner)) == len(inner)

    def rotate(self, offset: int) -> "Circuit":
        inner = self.interior()
        offset %= len(inner)
        rotated = inner[offset:] + inner[:offset]
        return Circuit(rotated + (rotated[0],))

    def reverse(self) -> "Circuit":
        return Circuit(tuple(reversed(self.vertices)))


@dataclass(frozen=True)
class Decomposition:
    """A partition of a red-blue graph's edges into alternating circuits."""

    graph: RedBlueGraph
    circuits: tuple[Circuit, ...]

    def __init__(self, graph: RedBlueGraph, circuits):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "circuits", tuple(circuits))

    @property
    def circuit_count(self) -> int:
        return len(self.circuits)

    def covers_exactly(self) -> bool:
        """True iff every edge of the graph appears in exactly one circuit once."""
        seen: set[Edge] = set()
        for c in self.circuits:
            for e in c.edge_keys():
                if e in seen:
                    return False
                seen.add(e)
        return seen == set(self.graph.edges())


def validate_circuit(c: Circuit, g: RedBlueGraph) -> bool:
    """Whether c is a valid alternating circuit of g: even length, edges of g
    used at most once each, colors alternating including the wrap-around."""
    vs = c.vertices
    m = len(vs) - 1
    if m < 4 or m % 2 != 0:
        return False
    keys = c.edge_keys()
    if len(set(keys)) != m:
        return False
    colors = []
    for key in keys:
        if key in g.red:
            colors.append("red")
        elif key in g.blue:
            colors.append("blue")
        else:
            return False
    for i in range(m):
        if colors[i] == colors[(i + 1) % m]:
            return False
    return True


def is_elementary(c: Circuit) -> bool:
    """No vertex appears more than twice and some two consecutive vertices
    each appear exactly once.

    Occurrences are counted over the full closed listing v_0 .. v_2t, so the
    start vertex contributes twice; a repeated vertex must not sit at the
    start of an elementary listing (rotate first if it does).
    """
    counts: dict[int, int] = {}
    for v in c.vertices:
        counts[v] = counts.get(v, 0) + 1
    if any(cnt > 2 for cnt in counts.values()):
        return False
    vs = c.vertices
    return any(counts[vs[i]] == 1 and counts[vs[i + 1]] == 1 for i in range(len(vs) - 1))


def _split_to_cycles(vertices: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Split a closed walk at repeated vertices until all pieces are simple.

    In a bipartite walk every repeat sits at even arc-distance, so each
    piece stays alternating.
    """
    inner = vertices[:-1]
    pos: dict[int, int] = {}
    for idx, v in enumerate(inner):
        if v in pos:
            i, j = pos[v], idx
            first = inner[i:j] + (inner[j],)
            second = inner[:i] + inner[j:] + (inner[0],)
            return _split_to_cycles(first) + _split_to_cycles(second)
        pos[v] = idx
    return [vertices]


def euler_decompose(g: RedBlueGraph) -> Decomposition:
    """Peel alternating closed trails off g until no edge remains.

    Walks start at the lowest-index vertex with remaining edges, first step
    red, always taking the lowest-index neighbor of the required color, and
    close as soon as the walk returns to its pivot on a blue edge.  For the
    bipartite kinds the trails are further split into simple cycles.
    Raises NotBalanced when g is not balanced.
    """
    if not g.is_balanced():
        raise NotBalanced("red-blue graph has unequal red/blue degree at some vertex")
    adj: dict[int, dict[str, list[int]]] = {}
    for color, edges in (("red", g.red), ("blue", g.blue)):
        for a, b in edges:
            adj.setdefault(a, {"red": [], "blue": []})[color].append(b)
            adj.setdefault(b, {"red": [], "blue": []})[color].append(a)
    remaining = set(g.edges())

    def take(v: int, color: str) -> int:
        usable = [w for w in adj[v][color] if edge_key(v, w) in remaining]
        if not usable:
            raise AssertionError("balanced graph ran out of required color")
        w = min(usable)
        remaining.discard(edge_key(v, w))
        return w

    circuits: list[Circuit] = []
    while remaining:
        pivot = min(a for e in remaining for a in e)
        walk = [pivot]
        color = "red"
        while True:
            nxt = take(walk[-1], color)
            walk.append(nxt)
            if nxt == pivot and color == "blue":
                break
            color = "blue" if color == "red" else "red"
        if g.is_bipartite_kind():
            for piece in _split_to_cycles(tuple(walk)):
                circuits.append(Circuit(piece))
        else:
            circuits.append(Circuit(tuple(walk)))
    return Decomposition(g, circuits)
