"""Ground-truth machinery: exhaustive realization enumeration and
shortest-weight move-sequence search over the realization metagraph.

The searches here know nothing about circuit decompositions; they walk the
space of realizations move by move, which is what makes them usable as an
independent check of the distance identity at desk scale.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .core_graphs import (
    AnyDegreeSequence,
    BipartiteDegreeSequence,
    BipartiteGraph,
    DegreeSequence,
    DirectedDegreeSequence,
    DirectedGraph,
    Edge,
    Graph,
    SimpleGraph,
    symmetric_difference,
)
from .decomp import DEFAULT_EXACT_BUDGET, check_max_decomposition_properties, exact_max_decomposition
from .errors import BudgetExceeded, CapExceeded
from .swapgen import upper_bound_terms

DEFAULT_NODE_BUDGET = 10**6

State = frozenset


def enumerate_realizations(d: AnyDegreeSequence, cap: int = 100_000) -> list[Graph]:
    """All labeled realizations of d, in a fixed deterministic order.

    Raises CapExceeded once more than cap realizations exist.
    """
    if isinstance(d, DegreeSequence):
        return list(_enum_simple(d, cap))
    if isinstance(d, BipartiteDegreeSequence):
        return list(_enum_bipartite(d, cap))
    if isinstance(d, DirectedDegreeSequence):
        return list(_enum_directed(d, cap))
    raise TypeError(f"unsupported degree sequence type {type(d).__name__}")


def _enum_simple(d: DegreeSequence, cap: int):
    n = len(d)
    residual = list(d.degrees)
    edges: list[Edge] = []
    out: list[SimpleGraph] = []

    def rec(i: int) -> None:
        if i == n:
            if len(out) >= cap:
                raise CapExceeded(f"more than {cap} realizations")
            out.append(SimpleGraph(n, edges))
            return
        need = residual[i]
        if need == 0:
            rec(i + 1)
            return
        cands = [j for j in range(i + 1, n) if residual[j] > 0]
        if need > len(cands):
            return
        for combo in itertools.combinations(cands, need):
            residual[i] = 0
            for j in combo:
                residual[j] -= 1
                edges.append((i, j))
            rec(i + 1)
            for j in combo:
                residual[j] += 1
                edges.pop()
            residual[i] = need

    rec(0)
    return out


def _enum_bipartite(d: BipartiteDegreeSequence, cap: int):
    k, l = len(d.class_u), len(d.class_w)
    residual = list(d.class_w)
    edges: list[Edge] = []
    out: list[BipartiteGraph] = []
    if sum(d.class_u) != sum(d.class_w):
        return out

    def rec(u: int) -> None:
        if u == k:
            if any(residual):
                return
            if len(out) >= cap:
                raise CapExceeded(f"more than {cap} realizations")
            out.append(BipartiteGraph(k, l, edges))
            return
        need = d.class_u[u]
        cands = [j for j in range(l) if residual[j] > 0]
        if need > len(cands):
            return
        for combo in itertools.combinations(cands, need):
            for j in combo:
                residual[j] -= 1
                edges.append((u, j))
            rec(u + 1)
            for j in combo:
                residual[j] += 1
                edges.pop()

    rec(0)
    return out


def _enum_directed(d: DirectedDegreeSequence, cap: int):
    n = len(d)
    residual = list(d.in_degrees)
    edges: list[Edge] = []
    out: list[DirectedGraph] = []
    if sum(d.out_degrees) != sum(d.in_degrees):
        return out

    def rec(x: int) -> None:
        if x == n:
            if any(residual):
                return
            if len(out) >= cap:
                raise CapExceeded(f"more than {cap} realizations")
            out.append(DirectedGraph(n, edges))
            return
        need = d.out_degrees[x]
        cands = [j for j in range(n) if j != x and residual[j] > 0]
        if need > len(cands):
            return
        for combo in itertools.combinations(cands, need):
            for j in combo:
                residual[j] -= 1
                edges.append((x, j))
            rec(x + 1)
            for j in combo:
                residual[j] += 1
                edges.pop()

    rec(0)
    return out


# ---------------------------------------------------------------------------
# move generation over edge-set states


def _undirected_moves(state: State) -> list[tuple[State, int]]:
    out: set[State] = set()
    es = sorted(state)
    for i1 in range(len(es)):
        a, c = es[i1]
        for i2 in range(i1 + 1, len(es)):
            b, d = es[i2]
            if len({a, b, c, d}) != 4:
                continue
            for p, q in (((a, b), (c, d)), ((a, d), (c, b))):
                e1 = (p[0], p[1]) if p[0] < p[1] else (p[1], p[0])
                e2 = (q[0], q[1]) if q[0] < q[1] else (q[1], q[0])
                if e1 in state or e2 in state:
                    continue
                out.add(state - {es[i1], es[i2]} | {e1, e2})
    return [(s, 1) for s in sorted(out, key=sorted)]


def _bipartite_moves(state: State) -> list[tuple[State, int]]:
    out: set[State] = set()
    es = sorted(state)
    for i1 in range(len(es)):
        u1, w1 = es[i1]
        for i2 in range(i1 + 1, len(es)):
            u2, w2 = es[i2]
            if u1 == u2 or w1 == w2:
                continue
            e1, e2 = (u1, w2), (u2, w1)
            if e1 in state or e2 in state:
                continue
            out.add(state - {es[i1], es[i2]} | {e1, e2})
    return [(s, 1) for s in sorted(out, key=sorted)]


def _directed_switches(state: State) -> set[State]:
    out: set[State] = set()
    es = sorted(state)
    for i1 in range(len(es)):
        x, y = es[i1]
        for i2 in range(i1 + 1, len(es)):
            z, w = es[i2]
            if x == z or y == w or x == w or z == y:
                continue
            e1, e2 = (x, w), (z, y)
            if e1 in state or e2 in state:
                continue
            out.add(state - {es[i1], es[i2]} | {e1, e2})
    return out


def _triangle_reversals(state: State) -> set[State]:
    out: set[State] = set()
    vertices = sorted({v for e in state for v in e})
    for a, b, c in itertools.combinations(vertices, 3):
        for tri in ((a, b, c), (a, c, b)):
            x, y, z = tri
            fwd = {(x, y), (y, z), (z, x)}
            rev = {(x, z), (z, y), (y, x)}
            if fwd <= state and not (rev & state):
                out.add(state - fwd | rev)
    return out


def _hexagon_rotations(state: State) -> set[State]:
    """All weight-2 three-edge rotations: remove three arcs with distinct
    tails and distinct heads, shift the heads cyclically."""
    out: set[State] = set()
    es = sorted(state)
    for combo in itertools.combinations(es, 3):
        for order in (combo, (combo[0], combo[2], combo[1])):
            (t1, h1), (t2, h2), (t3, h3) = order
            if len({t1, t2, t3}) != 3 or len({h1, h2, h3}) != 3:
                continue
            added = ((t2, h1), (t3, h2), (t1, h3))
            if any(x == y for x, y in added) or any(a in state for a in added):
                continue
            out.add(state - set(order) | set(added))
    return out


def _directed_moves(state: State, move_set: str) -> list[tuple[State, int]]:
    singles = _directed_switches(state)
    doubles: set[State] = set()
    if move_set == "full":
        doubles = _triangle_reversals(state)
    elif move_set == "permissive":
        doubles = _hexagon_rotations(state)
    elif move_set != "c4_only":
        raise ValueError(f"unknown move set {move_set!r}")
    moves = [(s, 1) for s in sorted(singles, key=sorted)]
    moves.extend((s, 2) for s in sorted(doubles - singles, key=sorted))
    return moves


def _moves_fn(g: Graph, move_set: str) -> Callable[[State], list[tuple[State, int]]]:
    if isinstance(g, SimpleGraph):
        return _undirected_moves
    if isinstance(g, BipartiteGraph):
        return _bipartite_moves
    return lambda state: _directed_moves(state, move_set)


def _shortest_weight(
    start: State,
    moves: Callable[[State], list[tuple[State, int]]],
    target: Optional[State],
    node_budget: int,
) -> Union[int, dict[State, int], None]:
    """Uniform-cost search with small integer weights (bucket queue).

    Returns the distance to target (None if unreachable), or the full
    distance map when target is None.
    """
    dist: dict[State, int] = {start: 0}
    buckets: dict[int, list[State]] = {0: [start]}
    level = 0
    max_level = 0
    expanded = 0
    while level <= max_level:
        for state in buckets.get(level, ()):
            if dist[state] != level:
                continue
            if target is not None and state == target:
                return level
            expanded += 1
            if expanded > node_budget:
                raise BudgetExceeded(f"search expanded more than {node_budget} states")
            for nbr, w in moves(state):
                nd = level + w
                old = dist.get(nbr)
                if old is None or nd < old:
                    dist[nbr] = nd
                    buckets.setdefault(nd, []).append(nbr)
                    if nd > max_level:
                        max_level = nd
        level += 1
    if target is not None:
        return None
    return dist


def exact_swap_distance(
    g1: Graph,
    g2: Graph,
    move_set: str = "full",
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Optional[int]:
    """Minimum move count (undirected/bipartite) or minimum total move
    weight (directed) from g1 to g2, by exhaustive search.

    move_set applies to directed graphs: "full" allows weight-1 switches and
    weight-2 triangle reversals, "c4_only" drops the reversals (and may
    return None: unreachable), "permissive" allows any three-edge rotation
    at weight 2.  Raises BudgetExceeded past node_budget expansions.
    """
    symmetric_difference(g1, g2)  # validates same type and degree sequence
    if not isinstance(g1, DirectedGraph) and move_set != "full":
        raise ValueError("move sets other than 'full' apply to directed graphs only")
    result = _shortest_weight(
        frozenset(g1.edges), _moves_fn(g1, move_set), frozenset(g2.edges), node_budget
    )
    assert result is None or isinstance(result, int)
    return result


# ---------------------------------------------------------------------------
# identity certification


@dataclass(frozen=True)
class PairCheck:
    i: int
    j: int
    h_prime: int
    k: int
    oracle_distance: int
    identity_ok: bool


@dataclass
class IdentityReport:
    """Per-sequence record of oracle distance versus H' - c on sampled pairs."""

    sequence: tuple
    realization_count: int
    pairs: list[PairCheck] = field(default_factory=list)
    violations: list[PairCheck] = field(default_factory=list)
    structure_violations: list[str] = field(default_factory=list)
    bound_violations: list[str] = field(default_factory=list)
    permissive_mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.violations
            or self.structure_violations
            or self.bound_violations
            or self.permissive_mismatches
        )


def _sequence_descriptor(d: AnyDegreeSequence) -> tuple:
    if isinstance(d, DegreeSequence):
        return ("u", d.degrees)
    if isinstance(d, BipartiteDegreeSequence):
        return ("b", d.class_u, d.class_w)
    return ("d", d.out_degrees, d.in_degrees)


def certify_identity(
    d: AnyDegreeSequence,
    pair_cap: Optional[int] = 200,
    seed: int = 0,
    budget: int = DEFAULT_EXACT_BUDGET,
    node_budget: int = DEFAULT_NODE_BUDGET,
    compare_permissive: bool = False,
    cap: int = 100_000,
) -> IdentityReport:
    """Assert oracle distance == H' - c over (a sample of) realization pairs.

    Pairs are sampled deterministically from seed when their number exceeds
    pair_cap (pass pair_cap=None for all pairs).  The report also collects
    structural violations of the maximum decompositions and upper-bound
    violations of the exact distances; all lists are expected to stay empty.
    """
    descriptor = _sequence_descriptor(d)
    reals = enumerate_realizations(d, cap=cap)
    report = IdentityReport(descriptor, len(reals))
    pairs = [(i, j) for i in range(len(reals)) for j in range(i + 1, len(reals))]
    if pair_cap is not None and len(pairs) > pair_cap:
        rng = random.Random(f"{seed}|{descriptor}")
        pairs = sorted(rng.sample(pairs, pair_cap))
    by_source: dict[int, list[int]] = {}
    for i, j in pairs:
        by_source.setdefault(i, []).append(j)
    directed = isinstance(d, DirectedDegreeSequence)
    for i in sorted(by_source):
        start = frozenset(reals[i].edges)
        moves = _moves_fn(reals[i], "full")
        dmap = _shortest_weight(start, moves, None, node_budget)
        assert isinstance(dmap, dict)
        pmap: Optional[dict[State, int]] = None
        if compare_permissive and directed:
            pmoves = _moves_fn(reals[i], "permissive")
            pmap = _shortest_weight(start, pmoves, None, node_budget)  # type: ignore[assignment]
        for j in by_source[i]:
            rb = symmetric_difference(reals[i], reals[j])
            h = len(rb.red)
            decomp_report = exact_max_decomposition(rb, budget=budget)
            k = decomp_report.k
            target = frozenset(reals[j].edges)
            dist = dmap.get(target)
            if dist is None:
                raise AssertionError("realization space must be connected under the full move set")
            check = PairCheck(i, j, h, k, dist, dist == h - k)
            report.pairs.append(check)
            if not check.identity_ok:
                report.violations.append(check)
            report.structure_violations.extend(
                f"{descriptor} pair ({i},{j}): {v}"
                for v in check_max_decomposition_properties(decomp_report)
            )
            _, _, bound, formula = upper_bound_terms(reals[i], h)
            if dist > bound + 1e-9:
                report.bound_violations.append(
                    f"{descriptor} pair ({i},{j}): distance {dist} exceeds {formula} = {bound:.6f}"
                )
            if pmap is not None and pmap.get(target) != dist:
                report.permissive_mismatches.append(
                    f"{descriptor} pair ({i},{j}): permissive {pmap.get(target)} != full {dist}"
                )
    return report
