"""Graphicality tests and greedy constructions of one realization per
degree sequence.

All constructions are deterministic: ties in target selection are broken
by lowest vertex index.
"""

from __future__ import annotations

from .core_graphs import (
    BipartiteDegreeSequence,
    BipartiteGraph,
    DegreeSequence,
    DirectedDegreeSequence,
    DirectedGraph,
    SimpleGraph,
)
from .errors import NotGraphical


def erdos_gallai_check(d: DegreeSequence) -> bool:
    """Whether d is the degree sequence of some simple graph.

    Runs in O(n log n): sort once, then prefix sums against the classic
    inequality chain.
    """
    degs = sorted(d.degrees, reverse=True)
    n = len(degs)
    if degs[0] > n - 1:
        return False
    total = sum(degs)
    if total % 2 != 0:
        return False
    prefix = [0]
    for x in degs:
        prefix.append(prefix[-1] + x)
    # degs is non-increasing, so for each k the tail split point where
    # d_i < k can be found by scanning once overall.
    for k in range(1, n + 1):
        lhs = prefix[k]
        # sum over i > k of min(d_i, k)
        lo, hi = k, n
        while lo < hi:
            mid = (lo + hi) // 2
            if degs[mid] >= k:
                lo = mid + 1
            else:
                hi = mid
        rhs_tail = (lo - k) * k + (prefix[n] - prefix[lo])
        if lhs > k * (k - 1) + rhs_tail:
            return False
    return True


def havel_hakimi(d: DegreeSequence) -> SimpleGraph:
    """Greedy construction of a simple graph realizing d.

    Raises NotGraphical when no realization exists; success agrees exactly
    with erdos_gallai_check.
    """
    n = len(d)
    residual = list(d.degrees)
    edges: list[tuple[int, int]] = []
    for _ in range(n):
        # highest remaining degree, lowest index on ties
        v = max(range(n), key=lambda i: (residual[i], -i))
        need = residual[v]
        if need == 0:
            break
        residual[v] = 0
        targets = sorted(
            (i for i in range(n) if i != v and residual[i] > 0),
            key=lambda i: (-residual[i], i),
        )[:need]
        if len(targets) < need:
            raise NotGraphical(f"{d.degrees} is not graphical")
        for t in targets:
            residual[t] -= 1
            edges.append((min(v, t), max(v, t)))
    return SimpleGraph(n, edges)


def bipartite_realize(bd: BipartiteDegreeSequence) -> BipartiteGraph:
    """Greedy construction of a bipartite graph realizing bd.

    Raises NotGraphical when infeasible.  Deterministic tie-break picks the
    lexicographically least edge set.
    """
    k, l = len(bd.class_u), len(bd.class_w)
    if sum(bd.class_u) != sum(bd.class_w):
        raise NotGraphical("class degree totals differ")
    residual_w = list(bd.class_w)
    edges: list[tuple[int, int]] = []
    # u-vertices served by decreasing demand (lowest index on ties); each is
    # wired to the currently most-demanding w-vertices.
    for u in sorted(range(k), key=lambda i: (-bd.class_u[i], i)):
        need = bd.class_u[u]
        targets = sorted(
            (j for j in range(l) if residual_w[j] > 0),
            key=lambda j: (-residual_w[j], j),
        )[:need]
        if len(targets) < need:
            raise NotGraphical(f"{(bd.class_u, bd.class_w)} is not graphical")
        for j in targets:
            residual_w[j] -= 1
            edges.append((u, j))
    if any(residual_w):
        raise NotGraphical(f"{(bd.class_u, bd.class_w)} is not graphical")
    return BipartiteGraph(k, l, edges)


def directed_realize(dd: DirectedDegreeSequence) -> DirectedGraph:
    """Greedy construction of a loop-free directed graph realizing dd.

    Each round satisfies the vertex with the largest remaining out-degree,
    wiring it to the vertices of largest remaining in-degree (excluding
    itself); ties prefer larger remaining out-degree, then lower index.
    Raises NotGraphical when infeasible.
    """
    n = len(dd)
    alpha = list(dd.out_degrees)
    beta = list(dd.in_degrees)
    if sum(alpha) != sum(beta):
        raise NotGraphical("out- and in-degree totals differ")
    edges: list[tuple[int, int]] = []
    for _ in range(n):
        x = max(range(n), key=lambda i: (alpha[i], -i))
        need = alpha[x]
        if need == 0:
            break
        alpha[x] = 0
        targets = sorted(
            (j for j in range(n) if j != x and beta[j] > 0),
            key=lambda j: (-beta[j], -alpha[j], j),
        )[:need]
        if len(targets) < need:
            raise NotGraphical(f"{(dd.out_degrees, dd.in_degrees)} is not graphical")
        for j in targets:
            beta[j] -= 1
            edges.append((x, j))
    if any(alpha) or any(beta):
        raise NotGraphical(f"{(dd.out_degrees, dd.in_degrees)} is not graphical")
    return DirectedGraph(n, edges)
