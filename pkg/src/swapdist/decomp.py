"""Refining decompositions toward maximum cardinality.

Tools here take the Euler starting decomposition and increase the circuit
count: splitting circuits at even-distance vertex repeats, rerouting
crossing repeats so a split becomes available, a cheap greedy fixpoint of
both, and an exhaustive bitmask search that certifies the true maximum on
small instances.  The directed flavor additionally minimizes (exactly) or
reduces (greedily) the number of triangular C6 cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .core_graphs import Edge, RedBlueGraph
from .errors import BudgetExceeded, NoEvenRepeat, NotKissing
from .rbgraph import Circuit, Decomposition, edge_key, is_elementary, validate_circuit

DEFAULT_EXACT_BUDGET = 24


@dataclass(frozen=True)
class DecompositionReport:
    """A decomposition plus the certification status of its circuit count."""

    decomposition: Decomposition
    k: int
    exact: bool
    lower_bound_lemma: int
    triangular_c6_count: Optional[int]


def _circuit_count_lower_bound(g: RedBlueGraph) -> int:
    e = g.edge_count
    if e == 0 or g.n_vertices == 0:
        return 0
    return -(-2 * e // (3 * g.n_vertices))


def is_triangular_c6(c: Circuit, g: RedBlueGraph) -> bool:
    """A 6-cycle of the directed flavor whose three diagonals are non-chords,
    i.e. an oriented triangle and its reversal."""
    if g.kind != "d" or c.length != 6 or not c.is_cycle():
        return False
    inner = c.interior()
    return all(g.partner(inner[i]) == inner[i + 3] for i in range(3))


def _make_report(decomp: Decomposition, exact: bool) -> DecompositionReport:
    g = decomp.graph
    tri = None
    if g.kind == "d":
        tri = sum(1 for c in decomp.circuits if is_triangular_c6(c, g))
    return DecompositionReport(decomp, decomp.circuit_count, exact, _circuit_count_lower_bound(g), tri)


# ---------------------------------------------------------------------------
# splitting and rerouting


def split_even_repeat(c: Circuit) -> tuple[Circuit, Circuit]:
    """Split c at a vertex repeated at even arc-distance.

    Both pieces are alternating circuits whose edge sets partition c's.
    Raises NoEvenRepeat when every repeat sits at odd distance (not a fault).
    """
    inner = c.interior()
    m = len(inner)
    for i in range(m):
        for j in range(i + 2, m):
            if (j - i) % 2 == 0 and inner[i] == inner[j]:
                first = Circuit(inner[i:j] + (inner[j],))
                second = Circuit(inner[:i] + inner[j:] + (inner[0],))
                return first, second
    raise NoEvenRepeat("no vertex repeats at even arc-distance")


def _split_exhaust(c: Circuit) -> list[Circuit]:
    try:
        a, b = split_even_repeat(c)
    except NoEvenRepeat:
        return [c]
    return _split_exhaust(a) + _split_exhaust(b)


def _repeat_pairs(c: Circuit) -> list[tuple[int, int]]:
    """Position pairs (i < j) of vertices occurring twice; assumes no vertex
    occurs more than twice (guaranteed after splits are exhausted)."""
    first_at: dict[int, int] = {}
    pairs = []
    for idx, v in enumerate(c.interior()):
        if v in first_at:
            pairs.append((first_at[v], idx))
        else:
            first_at[v] = idx
    return sorted(pairs)


def _crossing(a: tuple[int, int], b: tuple[int, int]) -> bool:
    inside = sum(1 for x in b if a[0] < x < a[1])
    return inside == 1


def _find_crossing(c: Circuit) -> Optional[tuple[tuple[int, int], tuple[int, int]]]:
    pairs = _repeat_pairs(c)
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if _crossing(pairs[i], pairs[j]):
                return pairs[i], pairs[j]
    return None


def _reroute_crossing(c: Circuit, pair: tuple[tuple[int, int], tuple[int, int]]) -> Circuit:
    """Reverse the segment between one repeat's two positions.

    The rerouted listing uses the same edges, and the crossing partner's two
    positions land at even distance, so a split becomes available.
    """
    (i, j), _ = pair
    rotated = c.rotate(i)
    inner = rotated.interior()
    # after rotation the chosen repeat sits at positions (0, j - i)
    jj = j - i
    new_inner = inner[:1] + tuple(reversed(inner[1:jj])) + inner[jj:]
    return Circuit(new_inner + (new_inner[0],))


def _elementary_rotation(c: Circuit) -> Optional[Circuit]:
    """The first rotation whose closed listing is elementary, if any."""
    for offset in range(len(c.interior())):
        cand = c.rotate(offset)
        if is_elementary(cand):
            return cand
    return None


def elementarize(d: Decomposition) -> Decomposition:
    """Split and reroute until every circuit has an elementary listing.

    The circuit count never decreases and the edge partition is preserved.
    A split-exhausted circuit free of crossing repeats always admits an
    elementary rotation, so the reroute loop terminates.
    """
    work: list[Circuit] = []
    for c in d.circuits:
        work.extend(_split_exhaust(c))
    out: list[Circuit] = []
    while work:
        c = work.pop(0)
        rotated = _elementary_rotation(c)
        if rotated is not None:
            out.append(rotated)
            continue
        pair = _find_crossing(c)
        if pair is None:
            raise AssertionError("crossing-free split-exhausted circuit must rotate to elementary")
        pieces = _split_exhaust(_reroute_crossing(c, pair))
        if len(pieces) < 2:
            raise AssertionError("reroute must enable a split")
        work = pieces + work
    return Decomposition(d.graph, out)


def greedy_maximize(d: Decomposition) -> DecompositionReport:
    """Grow the circuit count by exhausting splits and crossing reroutes.

    The result is elementary throughout and certified only as a lower bound
    on the maximum (exact=False).  Directed decompositions additionally get
    kissing triangular C6 cycles resolved away where possible.
    """
    g = d.graph
    circuits = list(elementarize(d).circuits)
    while True:
        circuits.sort(key=lambda c: (-c.length, c.vertices))
        for idx, c in enumerate(circuits):
            pair = _find_crossing(c)
            if pair is None:
                continue
            pieces = _split_exhaust(_reroute_crossing(c, pair))
            if len(pieces) < 2:
                raise AssertionError("reroute must enable a split")
            circuits[idx : idx + 1] = pieces
            break
        else:
            break
    circuits = [_elementary_rotation(c) or c for c in circuits]
    if g.kind == "d":
        circuits = _resolve_all_kissing(circuits, g)
    return _make_report(Decomposition(g, circuits), exact=False)


# ---------------------------------------------------------------------------
# kissing resolution (directed flavor)


def _trails_between(c: Circuit, u: int, w: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    inner = c.interior()
    pu, pw = inner.index(u), inner.index(w)
    if pu < pw:
        a = inner[pu : pw + 1]
        b = inner[pw:] + inner[: pu + 1]
    else:
        a = inner[pu:] + inner[: pw + 1]
        b = inner[pw : pu + 1]
    return a, b


def resolve_kissing(c1: Circuit, c2: Circuit, x: int, g: RedBlueGraph) -> tuple[Circuit, Circuit]:
    """Re-pair two cycles kissing at x so that neither output is triangular.

    Both cycles must contain u_x and w_x and at least one must be a
    triangular C6 cycle.  The four trails meeting at (u_x, w_x) admit exactly
    one alternation-valid re-pairing; it never reproduces a triangular C6.
    Raises NotKissing when the preconditions fail or when extra shared
    vertices would make the re-paired walks non-simple.
    """
    if g.kind != "d":
        raise NotKissing("kissing resolution is defined for the directed flavor")
    if not (0 <= x < g.left_size):
        raise NotKissing(f"vertex {x} out of range")
    u, w = x, g.left_size + x
    for c in (c1, c2):
        if not c.is_cycle():
            raise NotKissing("kissing resolution expects simple cycles")
        inner = set(c.interior())
        if u not in inner or w not in inner:
            raise NotKissing(f"cycle does not contain both copies of vertex {x}")
    if not (is_triangular_c6(c1, g) or is_triangular_c6(c2, g)):
        raise NotKissing("neither cycle is a triangular C6 cycle")
    t1a, t1b = _trails_between(c1, u, w)
    t2a, t2b = _trails_between(c2, u, w)
    color1 = g.color_of(edge_key(t1a[0], t1a[1]))
    color2 = g.color_of(edge_key(t2a[0], t2a[1]))
    if color1 == color2:
        n1 = t1a + t2b[1:]
        n2 = t2a + t1b[1:]
    else:
        n1 = t1a + tuple(reversed(t2a))[1:]
        n2 = tuple(reversed(t1b)) + t2b[1:]
    out1, out2 = Circuit(n1), Circuit(n2)
    for c in (out1, out2):
        if not c.is_cycle() or not validate_circuit(c, g):
            raise NotKissing("cycles share vertices beyond the kissing pair; not resolvable")
        if is_triangular_c6(c, g):
            raise AssertionError("re-pairing may not produce a triangular C6 cycle")
    return out1, out2


def _kissing_vertices(c1: Circuit, c2: Circuit, g: RedBlueGraph) -> list[int]:
    s1, s2 = set(c1.interior()), set(c2.interior())
    shared = s1 & s2
    out = []
    for v in sorted(shared):
        if v < g.left_size and g.partner(v) in shared:
            out.append(v)
    return out


def _resolve_all_kissing(circuits: list[Circuit], g: RedBlueGraph) -> list[Circuit]:
    """Resolve kissing pairs involving a triangular C6 until none remains
    resolvable.  Keeps the circuit count; never increases triangular count."""
    work = list(circuits)
    progress = True
    while progress:
        progress = False
        for i in range(len(work)):
            for j in range(i + 1, len(work)):
                if not (is_triangular_c6(work[i], g) or is_triangular_c6(work[j], g)):
                    continue
                for x in _kissing_vertices(work[i], work[j], g):
                    try:
                        a, b = resolve_kissing(work[i], work[j], x, g)
                    except NotKissing:
                        continue
                    work[i], work[j] = a, b
                    progress = True
                    break
                if progress:
                    break
            if progress:
                break
    return work


# ---------------------------------------------------------------------------
# exhaustive maximum search


def _edge_components(edges: list[Edge]) -> list[list[Edge]]:
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[Edge]] = {}
    for e in edges:
        groups.setdefault(find(e[0]), []).append(e)
    return [groups[root] for root in sorted(groups, key=lambda r: min(groups[r]))]


def _component_blocks(
    mask: int,
    edges: list[Edge],
    colors: list[bool],
    adj: dict[int, dict[bool, list[tuple[int, int]]]],
    bipartite: bool,
) -> dict[int, tuple[int, ...]]:
    """All even-repeat-free alternating circuits (simple cycles when
    bipartite) through the lowest edge of mask, as used-mask -> listing."""
    anchor = (mask & -mask).bit_length() - 1
    a, b = edges[anchor]
    c0 = colors[anchor]
    results: dict[int, tuple[int, ...]] = {}
    visits = {a: 1, b: 2}
    listing = [a, b]

    def extend(v: int, used: int, nedges: int) -> None:
        req = c0 if nedges % 2 == 0 else not c0
        for ei, nxt in adj.get(v, {}).get(req, ()):
            bit = 1 << ei
            if not (mask & bit) or (used & bit):
                continue
            parity_bit = 1 << ((nedges + 1) % 2)
            if nxt == a and parity_bit == 1:
                results.setdefault(used | bit, tuple(listing) + (nxt,))
                continue
            seen = visits.get(nxt, 0)
            if (seen and bipartite) or (seen & parity_bit):
                continue
            visits[nxt] = seen | parity_bit
            listing.append(nxt)
            extend(nxt, used | bit, nedges + 1)
            listing.pop()
            if seen:
                visits[nxt] = seen
            else:
                del visits[nxt]

    extend(b, 1 << anchor, 1)
    return results


def _solve_component(
    comp_edges: list[Edge], g: RedBlueGraph
) -> tuple[int, int, list[tuple[int, ...]]]:
    """Maximum circuit count over all decompositions of one component,
    minimizing the triangular C6 count as a tiebreak; returns
    (k, triangular_count, circuit listings)."""
    edges = sorted(comp_edges)
    colors = [e in g.red for e in edges]
    bipartite = g.is_bipartite_kind()
    left = g.left_size
    directed = g.kind == "d"
    adj: dict[int, dict[bool, list[tuple[int, int]]]] = {}
    for ei, (a, b) in enumerate(edges):
        col = colors[ei]
        adj.setdefault(a, {True: [], False: []})[col].append((ei, b))
        adj.setdefault(b, {True: [], False: []})[col].append((ei, a))
    for slots in adj.values():
        slots[True].sort(key=lambda t: (t[1], t[0]))
        slots[False].sort(key=lambda t: (t[1], t[0]))

    def listing_is_triangular(listing: tuple[int, ...]) -> bool:
        return directed and len(listing) == 7 and all(
            abs(listing[i] - listing[i + 3]) == left for i in range(3)
        )

    memo: dict[int, tuple[tuple[int, int], Optional[tuple[int, tuple[int, ...]]]]] = {}

    def best(mask: int) -> tuple[tuple[int, int], Optional[tuple[int, tuple[int, ...]]]]:
        if mask == 0:
            return (0, 0), None
        hit = memo.get(mask)
        if hit is not None:
            return hit
        value = None
        choice = None
        blocks = _component_blocks(mask, edges, colors, adj, bipartite)
        for used in sorted(blocks):
            listing = blocks[used]
            rest = mask & ~used
            if value is not None and value[0] > 1 + bin(rest).count("1") // 4:
                continue  # cannot beat the current count even with all-C4 remainder
            sub, _ = best(rest)
            tri = 1 if listing_is_triangular(listing) else 0
            cand = (sub[0] + 1, sub[1] - tri)
            if value is None or cand > value:
                value = cand
                choice = (used, listing)
        if value is None:
            raise AssertionError("no alternating circuit through anchor of a balanced component")
        memo[mask] = (value, choice)
        return memo[mask]

    full = (1 << len(edges)) - 1
    (k, neg_tri), _ = best(full)
    listings: list[tuple[int, ...]] = []
    mask = full
    while mask:
        _, choice = best(mask)
        assert choice is not None
        used, listing = choice
        listings.append(listing)
        mask &= ~used
    return k, -neg_tri, listings


def check_max_decomposition_properties(report: DecompositionReport) -> list[str]:
    """Structural facts every exact maximum decomposition must satisfy;
    returns human-readable violations (expected: none)."""
    out: list[str] = []
    g = report.decomposition.graph
    n = g.n_vertices
    for c in report.decomposition.circuits:
        if not validate_circuit(c, g):
            out.append(f"invalid circuit {c.vertices}")
        if not is_elementary(c):
            out.append(f"non-elementary circuit {c.vertices}")
        t = c.half_length
        mu = c.unique_vertex_count()
        if 3 * mu < 2 * t + 6:
            out.append(f"circuit {c.vertices}: {mu} unique vertices < 2t/3 + 2")
        if 2 * c.length > 3 * (n - 1):
            out.append(f"circuit {c.vertices}: length {c.length} > (3/2)(n-1)")
        for i, j in _repeat_pairs(c):
            if (j - i) % 2 == 0:
                out.append(f"circuit {c.vertices}: repeat at even distance ({i},{j})")
    if report.k < report.lower_bound_lemma:
        out.append(f"k={report.k} below lower bound {report.lower_bound_lemma}")
    if g.kind == "d":
        circuits = report.decomposition.circuits
        for i in range(len(circuits)):
            for j in range(len(circuits)):
                if i == j or not is_triangular_c6(circuits[i], g):
                    continue
                if _kissing_vertices(circuits[i], circuits[j], g):
                    out.append(f"triangular C6 {circuits[i].vertices} kisses another cycle")
    return out


def exact_max_decomposition(g: RedBlueGraph, budget: int = DEFAULT_EXACT_BUDGET) -> DecompositionReport:
    """Certified maximum-cardinality alternating circuit decomposition.

    Exhaustive search over partitions, component by component, memoized on
    the residual edge bitmask.  The directed flavor maximizes the count and
    then minimizes the number of triangular C6 cycles.  Raises
    BudgetExceeded when the edge count exceeds budget.
    """
    all_edges = sorted(g.edges())
    if len(all_edges) > budget:
        raise BudgetExceeded(f"{len(all_edges)} edges exceed exhaustive-search budget {budget}")
    circuits: list[Circuit] = []
    for comp in _edge_components(all_edges):
        _, _, listings = _solve_component(comp, g)
        for listing in listings:
            c = Circuit(listing)
            circuits.append(_elementary_rotation(c) or c)
    report = _make_report(Decomposition(g, circuits), exact=True)
    violations = check_max_decomposition_properties(report)
    if violations:
        raise AssertionError("; ".join(violations))
    return report


def shortest_alternating_circuit(g: RedBlueGraph) -> Optional[Circuit]:
    """A shortest alternating circuit of a balanced red-blue graph, found by
    anchored walk enumeration with length pruning; None when g is empty.

    A shortest circuit never repeats a vertex at even distance (it would
    split into something shorter), so the even-repeat-free walker is
    exhaustive for this purpose.
    """
    edges = sorted(g.edges())
    if not edges:
        return None
    colors = [e in g.red for e in edges]
    bipartite = g.is_bipartite_kind()
    adj: dict[int, dict[bool, list[tuple[int, int]]]] = {}
    for ei, (a, b) in enumerate(edges):
        col = colors[ei]
        adj.setdefault(a, {True: [], False: []})[col].append((ei, b))
        adj.setdefault(b, {True: [], False: []})[col].append((ei, a))
    for slots in adj.values():
        slots[True].sort(key=lambda t: (t[1], t[0]))
        slots[False].sort(key=lambda t: (t[1], t[0]))
    best: Optional[tuple[int, ...]] = None

    def extend(anchor: int, start: int, c0: bool, v: int, used: int, nedges: int,
               listing: list[int], visits: dict[int, int]) -> None:
        nonlocal best
        if best is not None and nedges + 1 >= len(best):
            return
        req = c0 if nedges % 2 == 0 else not c0
        for ei, nxt in adj.get(v, {}).get(req, ()):
            if ei < anchor or (used >> ei) & 1:
                continue
            parity_bit = 1 << ((nedges + 1) % 2)
            if nxt == start and parity_bit == 1:
                candidate = tuple(listing) + (nxt,)
                if best is None or len(candidate) < len(best):
                    best = candidate
                continue
            seen = visits.get(nxt, 0)
            if (seen and bipartite) or (seen & parity_bit):
                continue
            visits[nxt] = seen | parity_bit
            listing.append(nxt)
            extend(anchor, start, c0, nxt, used | (1 << ei), nedges + 1, listing, visits)
            listing.pop()
            if seen:
                visits[nxt] = seen
            else:
                del visits[nxt]

    for anchor, (a, b) in enumerate(edges):
        extend(anchor, a, colors[anchor], b, 1 << anchor, 1, [a, b], {a: 1, b: 2})
    assert best is not None, "a balanced nonempty red-blue graph holds an alternating circuit"
    return Circuit(best)


def _enumerate_max_decompositions(g: RedBlueGraph, limit: int = 10000) -> Iterator[list[Circuit]]:
    """All maximum-cardinality decompositions of a small red-blue graph
    (used by diagnostics and tests; instances must fit the default budget)."""
    target = exact_max_decomposition(g).k
    edges = sorted(g.edges())
    colors = [e in g.red for e in edges]
    bipartite = g.is_bipartite_kind()
    adj: dict[int, dict[bool, list[tuple[int, int]]]] = {}
    for ei, (a, b) in enumerate(edges):
        col = colors[ei]
        adj.setdefault(a, {True: [], False: []})[col].append((ei, b))
        adj.setdefault(b, {True: [], False: []})[col].append((ei, a))
    for slots in adj.values():
        slots[True].sort(key=lambda t: (t[1], t[0]))
        slots[False].sort(key=lambda t: (t[1], t[0]))
    full = (1 << len(edges)) - 1
    found = 0

    def rec(mask: int, acc: list[Circuit]) -> Iterator[list[Circuit]]:
        nonlocal found
        if found >= limit:
            return
        if mask == 0:
            if len(acc) == target:
                found += 1
                yield list(acc)
            return
        if len(acc) + bin(mask).count("1") // 4 < target:
            return
        blocks = _component_blocks(mask, edges, colors, adj, bipartite)
        for used in sorted(blocks):
            acc.append(Circuit(blocks[used]))
            yield from rec(mask & ~used, acc)
            acc.pop()

    yield from rec(full, [])
