"""Swap-sequence emission and distance reports.

For a decomposition into k circuits of a difference with H' red edges, the
emitted sequence has total weight exactly H' - k: each undirected or
bipartite circuit of half-length t costs t - 1 swaps, and a directed
triangular C6 cycle costs a single weight-2 move (again t - 1 for t = 3).

Some shrink steps apply to the stop graph rather than the start graph; the
emitted script appends those stop-side swaps inverted and in reverse order,
so callers always receive one replayable start-to-stop sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core_graphs import (
    BipartiteDegreeSequence,
    BipartiteGraph,
    DegreeSequence,
    DirectedDegreeSequence,
    DirectedGraph,
    Edge,
    Graph,
    RedBlueGraph,
    SimpleGraph,
    degree_sequence,
    fingerprint,
    symmetric_difference,
)
from .decomp import (
    DEFAULT_EXACT_BUDGET,
    DecompositionReport,
    _elementary_rotation,
    _find_crossing,
    _reroute_crossing,
    _split_exhaust,
    exact_max_decomposition,
    greedy_maximize,
)
from .errors import DifferenceMismatch, NotElementary
from .rbgraph import Circuit, Decomposition, edge_key, euler_decompose, is_elementary, validate_circuit


@dataclass(frozen=True)
class Swap:
    """Replace the two removed edges by the two added edges (weight 1).

    Edges are native pairs: sorted vertex pairs for undirected graphs,
    (u-index, w-index) for bipartite graphs, (tail, head) for directed.
    """

    removed: tuple[Edge, Edge]
    added: tuple[Edge, Edge]

    def __init__(self, removed, added):
        object.__setattr__(self, "removed", tuple(sorted(tuple(e) for e in removed)))
        object.__setattr__(self, "added", tuple(sorted(tuple(e) for e in added)))

    @property
    def weight(self) -> int:
        return 1

    def inverse(self) -> "Swap":
        return Swap(self.added, self.removed)


@dataclass(frozen=True)
class TriangularC6Swap:
    """Reverse the oriented triangle x -> y -> z -> x (weight 2)."""

    triangle: tuple[int, int, int]

    def __init__(self, triangle):
        object.__setattr__(self, "triangle", tuple(triangle))

    @property
    def weight(self) -> int:
        return 2

    def inverse(self) -> "TriangularC6Swap":
        x, y, z = self.triangle
        return TriangularC6Swap((x, z, y))


Move = Union[Swap, TriangularC6Swap]


@dataclass(frozen=True)
class SwapSequence:
    """An ordered, replayable move script between two fingerprinted graphs."""

    kind: str
    moves: tuple[Move, ...]
    start_fingerprint: str
    stop_fingerprint: str

    @property
    def total_weight(self) -> int:
        return sum(m.weight for m in self.moves)

    def __len__(self) -> int:
        return len(self.moves)


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of replaying a sequence; failed_at is the first failing move
    index, len(moves) when the end state mismatches, -1 for shape errors."""

    ok: bool
    failed_at: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class DistanceReport:
    kind: str
    h_prime: int
    k: int
    distance_value: int
    exact: bool
    m: int
    m_star: int
    bound: float
    bound_formula: str
    bound_m_star: float = 0.0
    bound_m: float = 0.0
    triangular_c6_count: Optional[int] = None


# ---------------------------------------------------------------------------
# move application and verification


def _norm_pair(kind: str, p: Edge) -> Edge:
    return tuple(sorted(p)) if kind == "u" else tuple(p)


def _swap_applies(edges: set[Edge], mv: Swap, kind: str, dims: tuple[int, ...]) -> str:
    r1, r2 = mv.removed
    a1, a2 = mv.added
    if kind == "u":
        if len({r1[0], r1[1], r2[0], r2[1]}) != 4:
            return "swap vertices not distinct"
        if sorted(r1 + r2) != sorted(a1 + a2):
            return "added edges do not rewire the removed edges"
        if any(p[0] == p[1] for p in (a1, a2)):
            return "added edge would be a loop"
    else:
        # first coordinates and second coordinates live in separate classes
        if len({r1[0], r2[0]}) != 2 or len({r1[1], r2[1]}) != 2:
            return "swap vertices not distinct"
        if sorted((r1[0], r2[0])) != sorted((a1[0], a2[0])) or sorted(
            (r1[1], r2[1])
        ) != sorted((a1[1], a2[1])):
            return "added edges do not rewire the removed edges"
        if {a1, a2} == {r1, r2}:
            return "added edges equal removed edges"
        if kind == "d" and any(x == y for x, y in (a1, a2)):
            return "added edge would be a loop"
        if kind == "b":
            k, l = dims
            if not all(0 <= u < k and 0 <= w < l for u, w in (r1, r2, a1, a2)):
                return "vertex out of range"
    for p in (r1, r2):
        if _norm_pair(kind, p) not in edges:
            return f"removed edge {p} absent"
    for p in (a1, a2):
        if _norm_pair(kind, p) in edges:
            return f"added edge {p} already present"
    return ""


def _move_applies(edges: set[Edge], mv: Move, kind: str, dims: tuple[int, ...]) -> str:
    if isinstance(mv, Swap):
        return _swap_applies(edges, mv, kind, dims)
    if kind != "d":
        return "triangular moves apply only to directed graphs"
    x, y, z = mv.triangle
    if len({x, y, z}) != 3:
        return "triangle vertices not distinct"
    for arc in ((x, y), (y, z), (z, x)):
        if arc not in edges:
            return f"triangle arc {arc} absent"
    for arc in ((x, z), (z, y), (y, x)):
        if arc in edges:
            return f"reversed arc {arc} already present"
    return ""


def _apply_move_edges(edges: set[Edge], mv: Move, kind: str) -> None:
    if isinstance(mv, Swap):
        for p in mv.removed:
            edges.discard(_norm_pair(kind, p))
        for p in mv.added:
            edges.add(_norm_pair(kind, p))
    else:
        x, y, z = mv.triangle
        for arc in ((x, y), (y, z), (z, x)):
            edges.discard(arc)
        for arc in ((x, z), (z, y), (y, x)):
            edges.add(arc)


def _kind_and_dims(g: Graph) -> tuple[str, tuple[int, ...]]:
    if isinstance(g, SimpleGraph):
        return "u", (g.n,)
    if isinstance(g, BipartiteGraph):
        return "b", (g.k, g.l)
    return "d", (g.n,)


def apply_move(g: Graph, mv: Move) -> Graph:
    """Apply one move to a graph, raising ValueError when it does not apply."""
    kind, dims = _kind_and_dims(g)
    edges = set(g.edges)
    problem = _move_applies(edges, mv, kind, dims)
    if problem:
        raise ValueError(problem)
    _apply_move_edges(edges, mv, kind)
    if kind == "u":
        return SimpleGraph(g.n, edges)
    if kind == "b":
        return BipartiteGraph(g.k, g.l, edges)
    return DirectedGraph(g.n, edges)


def verify(seq: SwapSequence, g1: Graph, g2: Graph) -> VerifyReport:
    """Replay seq from g1 and check that it reaches g2 through valid simple
    loop-free realizations of the shared degree sequence."""
    kind, dims = _kind_and_dims(g1)
    if type(g1) is not type(g2) or seq.kind != kind:
        return VerifyReport(False, -1, "sequence kind does not match the graphs")
    if _kind_and_dims(g2)[1] != dims:
        return VerifyReport(False, -1, "graph dimensions differ")
    if degree_sequence(g1) != degree_sequence(g2):
        return VerifyReport(False, -1, "degree sequences differ")
    edges = set(g1.edges)
    for i, mv in enumerate(seq.moves):
        problem = _move_applies(edges, mv, kind, dims)
        if problem:
            return VerifyReport(False, i, problem)
        _apply_move_edges(edges, mv, kind)
    if edges != set(g2.edges):
        return VerifyReport(False, len(seq.moves), "replayed end state differs from stop graph")
    return VerifyReport(True)


# ---------------------------------------------------------------------------
# script generation over global edge keys

_GlobalMove = tuple[tuple[Edge, Edge], tuple[Edge, Edge]]  # (removed, added)


def _assemble(forward: list, backward: list) -> list:
    return forward + [(added, removed) for (removed, added) in reversed(backward)]


def _force_elementary(c: Circuit) -> list[Circuit]:
    work = _split_exhaust(c)
    out: list[Circuit] = []
    while work:
        p = work.pop(0)
        rotated = _elementary_rotation(p)
        if rotated is not None:
            out.append(rotated)
            continue
        pair = _find_crossing(p)
        if pair is None:
            raise AssertionError("crossing-free split-exhausted circuit must rotate to elementary")
        work = _split_exhaust(_reroute_crossing(p, pair)) + work
    return out


def _unique_positions(vs: tuple[int, ...]) -> list[int]:
    inner = vs[:-1]
    counts: dict[int, int] = {}
    for v in inner:
        counts[v] = counts.get(v, 0) + 1
    return [i for i, v in enumerate(inner) if counts[v] == 1]


def _orient_first_in(vs: tuple[int, ...], side: set[Edge]) -> tuple[int, ...]:
    if edge_key(vs[0], vs[1]) in side:
        return vs
    return tuple(reversed(vs))


def _step(
    S: set[Edge], T: set[Edge], vs: tuple[int, ...], forward: list, backward: list
) -> tuple[int, ...]:
    """One shrink step on the first four vertices of vs; the first edge must
    lie in exactly one of S, T.  Returns the shrunken closed listing."""
    q0, q1, q2, q3 = vs[0], vs[1], vs[2], vs[3]
    e01, e12, e23 = edge_key(q0, q1), edge_key(q1, q2), edge_key(q2, q3)
    chord = edge_key(q3, q0)
    if e01 in S:
        side_a, side_b, a_is_start = S, T, True
    else:
        side_a, side_b, a_is_start = T, S, False
    shortcut = (chord in S) != (chord in T)
    if chord not in side_a:
        side_a.discard(e01)
        side_a.discard(e23)
        side_a.add(e12)
        side_a.add(chord)
        (forward if a_is_start else backward).append(((e01, e23), (e12, chord)))
    else:
        if chord not in side_b:
            raise AssertionError("chord in the mutated side must also sit in the other side")
        side_b.discard(e12)
        side_b.discard(chord)
        side_b.add(e01)
        side_b.add(e23)
        (backward if a_is_start else forward).append(((e12, chord), (e01, e23)))
    if shortcut:
        # the chord was the circuit's own closing edge: four edges left the
        # difference at once and the residual starts (and ends) at q3
        m = len(vs) - 1
        if vs[m - 1] != q3:
            raise AssertionError("difference chord must be the closing edge")
        return vs[3:m]
    return (q0,) + vs[3:]


def _circuit_moves_plain(
    start_edges: frozenset[Edge], stop_edges: frozenset[Edge], vs: tuple[int, ...]
) -> list[_GlobalMove]:
    """Moves replaying start_edges to stop_edges when their difference is
    exactly the circuit vs (undirected/bipartite kinds)."""
    S, T = set(start_edges), set(stop_edges)
    forward: list[_GlobalMove] = []
    backward: list[_GlobalMove] = []
    while True:
        m = len(vs) - 1
        if m == 0:
            break
        if m == 4:
            vs = _orient_first_in(vs, S)
            q0, q1, q2, q3 = vs[0], vs[1], vs[2], vs[3]
            pairs = (edge_key(q0, q1), edge_key(q1, q2), edge_key(q2, q3), edge_key(q3, q0))
            forward.append(((pairs[0], pairs[2]), (pairs[1], pairs[3])))
            break
        uniq = _unique_positions(vs)
        if not uniq:
            # even-distance repeats present: fall back to splitting into
            # elementary pieces; the emitted script only gets shorter
            middle: list[_GlobalMove] = []
            cur = frozenset(S)
            for piece in _force_elementary(Circuit(vs)):
                piece_edges = set(piece.edge_keys())
                target = frozenset((cur - piece_edges) | (piece_edges - cur))
                middle.extend(_circuit_moves_plain(cur, target, piece.vertices))
                cur = target
            return forward + middle + [(a, r) for (r, a) in reversed(backward)]
        rotated = Circuit(vs).rotate(uniq[0]).vertices
        vs = _step(S, T, _orient_first_in(rotated, S), forward, backward)
    return _assemble(forward, backward)


def _directed_case_trail(vs: tuple[int, ...], partner, left: int) -> tuple[tuple[int, ...], int]:
    """Pick the step position per the directed case order: a vertex whose
    partner lies outside the cycle, else a u-class vertex whose forward
    trail of length 3 misses its partner, else the same on the reversed
    listing.  Returns the (possibly reversed) listing and the position."""
    inner = vs[:-1]
    m = len(inner)
    present = set(inner)
    for p, v in enumerate(inner):
        if partner(v) not in present:
            return vs, p
    for p, v in enumerate(inner):
        if v < left and inner[(p + 3) % m] != partner(v):
            return vs, p
    reversed_vs = tuple(reversed(vs))
    inner_r = reversed_vs[:-1]
    for p, v in enumerate(inner_r):
        if v < left and inner_r[(p + 3) % m] != partner(v):
            return reversed_vs, p
    raise AssertionError("no usable trail; cycle should have been triangular")


def _triangle_of(S: set[Edge], vs: tuple[int, ...], left: int) -> tuple[int, int, int]:
    arcs = []
    for i in range(len(vs) - 1):
        key = edge_key(vs[i], vs[i + 1])
        if key in S:
            arcs.append((key[0], key[1] - left))
    if len(arcs) != 3:
        raise AssertionError("triangular cycle must hold three start-side arcs")
    nxt = {x: y for x, y in arcs}
    x = min(nxt)
    y = nxt[x]
    z = nxt[y]
    if nxt.get(z) != x:
        raise AssertionError("start-side arcs of a triangular cycle must form a triangle")
    return (x, y, z)


def _circuit_moves_directed(
    start_edges: frozenset[Edge], stop_edges: frozenset[Edge], vs: tuple[int, ...], left: int
) -> list:
    """Moves (global C4 tuples or ('tri', triangle)) replaying start_edges to
    stop_edges when their difference is exactly the cycle vs; never adds a
    non-chord and never creates a new triangular C6 cycle mid-circuit."""
    S, T = set(start_edges), set(stop_edges)
    original_length = len(vs) - 1

    def partner(v: int) -> int:
        return v + left if v < left else v - left

    forward: list = []
    backward: list = []
    while True:
        m = len(vs) - 1
        if m == 0:
            break
        if m == 4:
            vs = _orient_first_in(vs, S)
            q0, q1, q2, q3 = vs[0], vs[1], vs[2], vs[3]
            pairs = (edge_key(q0, q1), edge_key(q1, q2), edge_key(q2, q3), edge_key(q3, q0))
            forward.append(((pairs[0], pairs[2]), (pairs[1], pairs[3])))
            break
        inner = vs[:-1]
        if m == 6 and all(partner(inner[i]) == inner[i + 3] for i in range(3)):
            if original_length != 6:
                raise AssertionError("triangular residual from a non-triangular cycle")
            triangle = _triangle_of(S, vs, left)
            forward.append(("tri", triangle))
            break
        listing, p = _directed_case_trail(vs, partner, left)
        rotated = Circuit(listing).rotate(p).vertices
        if partner(rotated[0]) == rotated[3]:
            raise AssertionError("step would add a non-chord")
        new_vs = _step(S, T, rotated, forward, backward)
        if len(new_vs) != len(rotated) - 2:
            raise AssertionError("directed cycles cannot hit the closing-chord shortcut")
        vs = new_vs
    return _assemble(forward, backward)


# ---------------------------------------------------------------------------
# public generation ops


def _global_edges(g: Graph) -> frozenset[Edge]:
    if isinstance(g, SimpleGraph):
        return frozenset(g.edges)
    if isinstance(g, BipartiteGraph):
        return frozenset((u, g.k + w) for u, w in g.edges)
    return frozenset((x, g.n + y) for x, y in g.edges)


def _native_swap(kind: str, left: int, mv: _GlobalMove) -> Swap:
    def native(pair: Edge) -> Edge:
        return pair if kind == "u" else (pair[0], pair[1] - left)

    removed, added = mv
    return Swap((native(removed[0]), native(removed[1])), (native(added[0]), native(added[1])))


def _kind_and_left(g: Graph) -> tuple[str, int]:
    if isinstance(g, SimpleGraph):
        return "u", 0
    if isinstance(g, BipartiteGraph):
        return "b", g.k
    return "d", g.n


def _checked_sequence(moves: tuple[Move, ...], g1: Graph, g2: Graph) -> SwapSequence:
    kind, _ = _kind_and_dims(g1)
    seq = SwapSequence(kind, moves, fingerprint(g1), fingerprint(g2))
    report = verify(seq, g1, g2)
    if not report:
        raise AssertionError(
            f"generated script failed verification at {report.failed_at}: {report.reason}"
        )
    return seq


def circuit_to_swaps(start: Graph, stop: Graph, c: Circuit) -> SwapSequence:
    """Swap script for a difference that is one elementary alternating
    circuit; emits exactly t - 1 swaps when the circuit has no even-distance
    repeat (always the case for circuits out of maximized decompositions).

    Raises NotElementary or DifferenceMismatch on bad inputs.
    """
    if isinstance(start, DirectedGraph):
        raise TypeError("use directed_circuit_to_moves for directed graphs")
    rb = symmetric_difference(start, stop)
    if set(c.edge_keys()) != set(rb.edges()) or not validate_circuit(c, rb):
        raise DifferenceMismatch("circuit does not traverse the symmetric difference exactly")
    if not is_elementary(c):
        raise NotElementary("circuit is not elementary")
    kind, left = _kind_and_left(start)
    global_moves = _circuit_moves_plain(_global_edges(start), _global_edges(stop), c.vertices)
    moves = tuple(_native_swap(kind, left, mv) for mv in global_moves)
    return _checked_sequence(moves, start, stop)


def _check_decomposition_matches(d: Decomposition, rb: RedBlueGraph) -> None:
    if d.graph.red != rb.red or d.graph.blue != rb.blue:
        raise DifferenceMismatch("decomposition belongs to a different symmetric difference")
    if not d.covers_exactly():
        raise DifferenceMismatch("decomposition does not partition the symmetric difference")


def transform(g1: Graph, g2: Graph, d: Decomposition) -> SwapSequence:
    """Swap script from g1 to g2 along a decomposition of their difference;
    total length is exactly H' - d.circuit_count."""
    if isinstance(g1, DirectedGraph):
        raise TypeError("use directed_transform for directed graphs")
    rb = symmetric_difference(g1, g2)
    _check_decomposition_matches(d, rb)
    kind, left = _kind_and_left(g1)
    cur = _global_edges(g1)
    global_moves: list[_GlobalMove] = []
    for c in d.circuits:
        piece_edges = set(c.edge_keys())
        target = frozenset((cur - piece_edges) | (piece_edges - cur))
        global_moves.extend(_circuit_moves_plain(cur, target, c.vertices))
        cur = target
    moves = tuple(_native_swap(kind, left, mv) for mv in global_moves)
    return _checked_sequence(moves, g1, g2)


def _directed_native_moves(global_moves: list, left: int) -> tuple[Move, ...]:
    out: list[Move] = []
    for mv in global_moves:
        if mv[0] == "tri":
            out.append(TriangularC6Swap(mv[1]))
        else:
            out.append(_native_swap("d", left, mv))
    return tuple(out)


def directed_circuit_to_moves(start: DirectedGraph, stop: DirectedGraph, c: Circuit) -> SwapSequence:
    """Move script for a directed difference that is one alternating cycle of
    the bipartite representation; weight is exactly t - 1, no intermediate
    graph ever gains a loop, and no step adds an edge on a diagonal pair."""
    rb = symmetric_difference(start, stop)
    if set(c.edge_keys()) != set(rb.edges()) or not validate_circuit(c, rb):
        raise DifferenceMismatch("cycle does not traverse the symmetric difference exactly")
    pieces = [c] if c.is_cycle() else _split_exhaust(c)
    cur = _global_edges(start)
    global_moves: list = []
    for piece in pieces:
        piece_edges = set(piece.edge_keys())
        target = frozenset((cur - piece_edges) | (piece_edges - cur))
        global_moves.extend(_circuit_moves_directed(cur, target, piece.vertices, start.n))
        cur = target
    moves = _directed_native_moves(global_moves, start.n)
    return _checked_sequence(moves, start, stop)


def directed_transform(g1: DirectedGraph, g2: DirectedGraph, d: Decomposition) -> SwapSequence:
    """Move script from g1 to g2 along a decomposition of the bipartite
    representation of their difference; total weight is exactly H' - k."""
    rb = symmetric_difference(g1, g2)
    _check_decomposition_matches(d, rb)
    cur = _global_edges(g1)
    global_moves: list = []
    for c in d.circuits:
        piece_edges = set(c.edge_keys())
        target = frozenset((cur - piece_edges) | (piece_edges - cur))
        global_moves.extend(_circuit_moves_directed(cur, target, c.vertices, g1.n))
        cur = target
    moves = _directed_native_moves(global_moves, g1.n)
    return _checked_sequence(moves, g1, g2)


# ---------------------------------------------------------------------------
# distance reports


def upper_bound_terms(g1: Graph, h: int) -> tuple[int, int, float, str]:
    """(m, m*, distance upper bound, formula label) for the degree sequence
    of g1 and a difference of h red edges."""
    m, m_star, bounds, formula = upper_bound_chain(g1, h)
    return m, m_star, bounds[0], formula


def upper_bound_chain(g1: Graph, h: int) -> tuple[int, int, tuple[float, float, float], str]:
    """(m, m*, (H'-based, m*-based, m-based bounds), formula label): the full
    chain of distance upper bounds for the degree sequence of g1."""
    seq = degree_sequence(g1)
    if isinstance(seq, DegreeSequence):
        n = len(seq)
        m = seq.total // 2
        m_star = sum(min(x, n - x) for x in seq.degrees)
        if not n:
            return m, m_star, (0.0, 0.0, 0.0), "H'*(1-4/(3n))"
        bounds = (h * (1 - 4 / (3 * n)), m_star * (0.5 - 2 / (3 * n)), m * (1 - 4 / (3 * n)))
        return m, m_star, bounds, "H'*(1-4/(3n))"
    if isinstance(seq, BipartiteDegreeSequence):
        big, small_size = seq.class_u, len(seq.class_w)
        if len(seq.class_u) < len(seq.class_w):
            big, small_size = seq.class_w, len(seq.class_u)
        m = sum(seq.class_u)
        m_star = 2 * sum(min(x, small_size - x) for x in big)
        n_prime = 2 * small_size
        if not n_prime:
            return m, m_star, (0.0, 0.0, 0.0), "H'*(1-2/n')"
        bounds = (h * (1 - 2 / n_prime), m_star * (0.5 - 1 / n_prime), m * (1 - 2 / n_prime))
        return m, m_star, bounds, "H'*(1-2/n')"
    assert isinstance(seq, DirectedDegreeSequence)
    n = len(seq)
    m = sum(seq.out_degrees)
    m_star = sum(min(a, n - a) for a in seq.out_degrees) + sum(
        min(b, n - b) for b in seq.in_degrees
    )
    if not n:
        return m, m_star, (0.0, 0.0, 0.0), "H'*(1-1/n)"
    bounds = (h * (1 - 1 / n), m_star * (0.5 - 1 / (2 * n)), m * (1 - 1 / n))
    return m, m_star, bounds, "H'*(1-1/n)"


def best_decomposition(
    g1: Graph, g2: Graph, mode: str = "exact", budget: int = DEFAULT_EXACT_BUDGET
) -> DecompositionReport:
    """Decomposition of the difference of g1 and g2: certified maximum in
    exact mode, greedy fixpoint otherwise."""
    rb = symmetric_difference(g1, g2)
    if mode == "exact":
        return exact_max_decomposition(rb, budget=budget)
    if mode != "greedy":
        raise ValueError(f"unknown mode {mode!r}")
    return greedy_maximize(euler_decompose(rb))


def distance_report(
    g1: Graph, g2: Graph, mode: str = "exact", budget: int = DEFAULT_EXACT_BUDGET
) -> DistanceReport:
    """Swap distance H' - k for the best decomposition found.

    Exact mode certifies the distance; greedy mode yields a certified upper
    bound (still flagged exact for an empty difference).
    """
    report = best_decomposition(g1, g2, mode=mode, budget=budget)
    h = len(report.decomposition.graph.red)
    m, m_star, bounds, formula = upper_bound_chain(g1, h)
    return DistanceReport(
        kind=report.decomposition.graph.kind,
        h_prime=h,
        k=report.k,
        distance_value=h - report.k,
        exact=report.exact or h == 0,
        m=m,
        m_star=m_star,
        bound=bounds[0],
        bound_formula=formula,
        bound_m_star=bounds[1],
        bound_m=bounds[2],
        triangular_c6_count=report.triangular_c6_count,
    )


def transform_sequence(
    g1: Graph, g2: Graph, mode: str = "exact", budget: int = DEFAULT_EXACT_BUDGET
) -> SwapSequence:
    """Convenience wrapper: decompose, then emit the verified move script."""
    report = best_decomposition(g1, g2, mode=mode, budget=budget)
    if isinstance(g1, DirectedGraph):
        return directed_transform(g1, g2, report.decomposition)
    return transform(g1, g2, report.decomposition)
