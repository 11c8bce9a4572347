"""Command-line surface: graphicality checks, distance reports, swap-script
emission and replay, and the experiment suites.

Exit codes: 0 ok/true, 1 negative verdict, 2 parse error, 3 degree/kind
mismatch, 4 search budget exceeded, 5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from typing import Optional

from . import oracle, realize
from .core_graphs import (
    BipartiteDegreeSequence,
    BipartiteGraph,
    DegreeSequence,
    DirectedDegreeSequence,
    DirectedGraph,
    Graph,
    SimpleGraph,
    symmetric_difference,
)
from .decomp import DEFAULT_EXACT_BUDGET, shortest_alternating_circuit
from .errors import (
    BudgetExceeded,
    CapExceeded,
    DegreeMismatch,
    NotGraphical,
    ParseError,
    SwapDistError,
)
from .swapgen import (
    Move,
    Swap,
    SwapSequence,
    TriangularC6Swap,
    distance_report,
    transform_sequence,
    verify,
)

_TOKEN = re.compile(r"\S+")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield lineno, line


def _int_token(tok: str, lineno: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno, col) from None


def read_graph_file(path: str) -> Graph:
    """Edge-list format: header 'u n' | 'b k l' | 'd n', one edge per line,
    '#' starts a comment."""
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty graph file", 1, 1)
    lineno, header = lines[0]
    toks = list(_TOKEN.finditer(header))
    kind = toks[0].group()
    if kind == "u" and len(toks) == 2:
        n = _int_token(toks[1].group(), lineno, toks[1].start() + 1)
        dims: tuple[int, ...] = (n,)
    elif kind == "b" and len(toks) == 3:
        dims = tuple(_int_token(t.group(), lineno, t.start() + 1) for t in toks[1:])
    elif kind == "d" and len(toks) == 2:
        dims = (_int_token(toks[1].group(), lineno, toks[1].start() + 1),)
    else:
        raise ParseError("header must be 'u n', 'b k l' or 'd n'", lineno, toks[0].start() + 1)
    edges = []
    for lineno, line in lines[1:]:
        toks = list(_TOKEN.finditer(line))
        if len(toks) != 2:
            raise ParseError("expected exactly two vertex indices", lineno, toks[0].start() + 1)
        a = _int_token(toks[0].group(), lineno, toks[0].start() + 1)
        b = _int_token(toks[1].group(), lineno, toks[1].start() + 1)
        edges.append((a, b))
    try:
        if kind == "u":
            return SimpleGraph(dims[0], edges)
        if kind == "b":
            return BipartiteGraph(dims[0], dims[1], edges)
        return DirectedGraph(dims[0], edges)
    except ValueError as exc:
        raise ParseError(str(exc), lines[0][0], 1) from None


def read_degree_file(path: str, kind: str):
    """Whitespace-separated integers; bipartite/directed files separate the
    two halves with '/'."""
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    stripped = "\n".join(line for _, line in _content_lines(text))
    if kind == "u":
        if "/" in stripped:
            raise ParseError("undirected degree file must not contain '/'")
        values = [_int_token(t, 1, 1) for t in stripped.split()]
        if not values:
            raise ParseError("empty degree file")
        return DegreeSequence(values)
    parts = stripped.split("/")
    if len(parts) != 2:
        raise ParseError("expected two '/'-separated halves")
    first = [_int_token(t, 1, 1) for t in parts[0].split()]
    second = [_int_token(t, 1, 1) for t in parts[1].split()]
    if not first or not second:
        raise ParseError("each half must contain at least one degree")
    if kind == "b":
        return BipartiteDegreeSequence(first, second)
    if kind == "d":
        if len(first) != len(second):
            raise ParseError("out- and in-degree halves must have equal length")
        return DirectedDegreeSequence(first, second)
    raise ParseError(f"unknown kind {kind!r}")


def sequence_to_json(seq: SwapSequence) -> dict:
    moves = []
    for mv in seq.moves:
        if isinstance(mv, Swap):
            moves.append(
                {
                    "type": "c4",
                    "remove": [list(mv.removed[0]), list(mv.removed[1])],
                    "add": [list(mv.added[0]), list(mv.added[1])],
                }
            )
        else:
            moves.append({"type": "tri_c6", "triangle": list(mv.triangle)})
    return {
        "kind": seq.kind,
        "start_fingerprint": seq.start_fingerprint,
        "stop_fingerprint": seq.stop_fingerprint,
        "moves": moves,
        "total_weight": seq.total_weight,
    }


def sequence_from_json(data: dict) -> SwapSequence:
    try:
        kind = data["kind"]
        moves: list[Move] = []
        for mv in data["moves"]:
            if mv["type"] == "c4":
                (r1, r2), (a1, a2) = mv["remove"], mv["add"]
                moves.append(Swap((tuple(r1), tuple(r2)), (tuple(a1), tuple(a2))))
            elif mv["type"] == "tri_c6":
                moves.append(TriangularC6Swap(tuple(mv["triangle"])))
            else:
                raise ParseError(f"unknown move type {mv['type']!r}")
        return SwapSequence(kind, tuple(moves), data["start_fingerprint"], data["stop_fingerprint"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed swap-sequence JSON: {exc}") from None


def _graph_kind(g: Graph) -> str:
    if isinstance(g, SimpleGraph):
        return "u"
    if isinstance(g, BipartiteGraph):
        return "b"
    return "d"


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("SWAPDIST_BUDGET")
    return int(env) if env else DEFAULT_EXACT_BUDGET


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args) -> int:
    d = read_degree_file(args.seqfile, args.kind)
    if isinstance(d, DegreeSequence):
        ok = realize.erdos_gallai_check(d)
    else:
        try:
            if isinstance(d, BipartiteDegreeSequence):
                realize.bipartite_realize(d)
            else:
                realize.directed_realize(d)
            ok = True
        except NotGraphical:
            ok = False
    print("GRAPHICAL" if ok else "NOT GRAPHICAL")
    return 0 if ok else 1


def _load_pair(args) -> tuple[Graph, Graph]:
    g1 = read_graph_file(args.graph1)
    g2 = read_graph_file(args.graph2)
    if _graph_kind(g1) != _graph_kind(g2):
        raise DegreeMismatch("graphs have different kinds")
    return g1, g2


def cmd_distance(args) -> int:
    g1, g2 = _load_pair(args)
    report = distance_report(g1, g2, mode=args.mode, budget=_budget(args))
    tag = "EXACT" if report.exact else "UPPER BOUND"
    if args.json:
        payload = {
            "kind": report.kind,
            "h_prime": report.h_prime,
            "k": report.k,
            "distance": report.distance_value,
            "exact": report.exact,
            "bound": round(report.bound, 6),
            "bound_formula": report.bound_formula,
            "bound_m_star": round(report.bound_m_star, 6),
            "bound_m": round(report.bound_m, 6),
            "m": report.m,
            "m_star": report.m_star,
            "triangular_c6_count": report.triangular_c6_count,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"kind: {report.kind}")
        print(f"H' = {report.h_prime}")
        print(f"k = {report.k}")
        print(f"distance = {report.distance_value} ({tag})")
        print(f"upper bound {report.bound_formula} = {report.bound:.6f}")
        print(f"upper bound from m* ({report.m_star}) = {report.bound_m_star:.6f}")
        print(f"upper bound from m ({report.m}) = {report.bound_m:.6f}")
        if report.triangular_c6_count is not None:
            print(f"triangular C6 count = {report.triangular_c6_count}")
    return 0


def cmd_transform(args) -> int:
    g1, g2 = _load_pair(args)
    seq = transform_sequence(g1, g2, mode=args.mode, budget=_budget(args))
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(sequence_to_json(seq), fh, sort_keys=True, indent=1)
        fh.write("\n")
    print(f"moves = {len(seq)}")
    print(f"total weight = {seq.total_weight}")
    return 0


def cmd_verify(args) -> int:
    try:
        data = json.load(open(args.seqfile, encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read sequence file: {exc}") from None
    seq = sequence_from_json(data)
    g1 = read_graph_file(args.graph1)
    g2 = read_graph_file(args.graph2)
    report = verify(seq, g1, g2)
    if report.ok:
        print("VERIFIED")
        return 0
    print(f"replay failed at move index {report.failed_at}: {report.reason}", file=sys.stderr)
    return 5


# ---------------------------------------------------------------------------
# experiment suites


def _sorted_graphical_sequences(n: int):
    import itertools

    for combo in itertools.combinations_with_replacement(range(n), n):
        degs = tuple(sorted(combo, reverse=True))
        d = DegreeSequence(degs)
        if realize.erdos_gallai_check(d):
            yield d


def _directed_sequences(n: int):
    """All directed degree sequences realized by some digraph on n vertices,
    by grouping every arc set (desk scale: n <= 4)."""
    import itertools

    if n > 4:
        raise BudgetExceeded("directed sequence sweep supports n <= 4")
    arcs = [(x, y) for x in range(n) for y in range(n) if x != y]
    seen = set()
    for bits in range(1 << len(arcs)):
        chosen = [arcs[i] for i in range(len(arcs)) if bits >> i & 1]
        out = [0] * n
        inn = [0] * n
        for x, y in chosen:
            out[x] += 1
            inn[y] += 1
        seen.add((tuple(out), tuple(inn)))
    for out, inn in sorted(seen):
        yield DirectedDegreeSequence(out, inn)


def _run_identity(args) -> dict:
    rows = []
    totals = {"violations": 0, "structure_violations": 0, "bound_violations": 0}
    n = args.n if args.n is not None else (5 if args.kind == "u" else 3)
    trials = args.trials if args.trials is not None else 200
    if args.kind == "u":
        sequences = list(_sorted_graphical_sequences(n))
    elif args.kind == "d":
        sequences = list(_directed_sequences(n))
    else:
        raise BudgetExceeded("identity suite supports kinds u and d")
    for d in sequences:
        try:
            report = oracle.certify_identity(d, pair_cap=trials, seed=args.seed, budget=args.exact_budget)
        except (BudgetExceeded, CapExceeded) as exc:
            rows.append({"sequence": str(oracle._sequence_descriptor(d)), "skipped": str(exc)})
            continue
        rows.append(
            {
                "sequence": " ".join(map(str, report.sequence[1]))
                + ("" if args.kind == "u" else " / " + " ".join(map(str, report.sequence[2]))),
                "realizations": report.realization_count,
                "pairs": len(report.pairs),
                "violations": len(report.violations),
            }
        )
        totals["violations"] += len(report.violations)
        totals["structure_violations"] += len(report.structure_violations)
        totals["bound_violations"] += len(report.bound_violations)
    return {"rows": rows, "summary": totals}


def _random_pair(rng: random.Random, kind: str, n: int) -> tuple[Graph, Graph]:
    if kind == "u":
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        edges = [p for p in pairs if rng.random() < 0.5]
        g1: Graph = SimpleGraph(n, edges)
    elif kind == "b":
        k = (n + 1) // 2
        l = n - k
        edges = [(u, w) for u in range(k) for w in range(l) if rng.random() < 0.5]
        g1 = BipartiteGraph(k, l, edges)
    else:
        edges = [(x, y) for x in range(n) for y in range(n) if x != y and rng.random() < 0.5]
        g1 = DirectedGraph(n, edges)
    g2 = _random_walk(rng, g1, steps=3 * max(1, len(edges)))
    return g1, g2


def _random_walk(rng: random.Random, g: Graph, steps: int) -> Graph:
    state = set(g.edges)
    kind = _graph_kind(g)
    for _ in range(steps):
        es = sorted(state)
        if len(es) < 2:
            break
        e1, e2 = rng.sample(es, 2)
        if kind == "u":
            a, c = e1
            b, dd = e2
            if len({a, b, c, dd}) != 4:
                continue
            p, q = rng.choice((((a, b), (c, dd)), ((a, dd), (c, b))))
            p = tuple(sorted(p))
            q = tuple(sorted(q))
        else:
            (x, y), (z, w) = e1, e2
            if x == z or y == w or x == w or z == y:
                continue
            p, q = (x, w), (z, y)
        if p in state or q in state:
            continue
        state -= {e1, e2}
        state |= {p, q}
    if isinstance(g, SimpleGraph):
        return SimpleGraph(g.n, state)
    if isinstance(g, BipartiteGraph):
        return BipartiteGraph(g.k, g.l, state)
    return DirectedGraph(g.n, state)


def _run_bounds(args) -> dict:
    n = args.n if args.n is not None else 6
    trials = args.trials if args.trials is not None else 100
    rng = random.Random(args.seed)
    rows = []
    skipped = 0
    violations = 0
    slacks = []
    for trial in range(trials):
        g1, g2 = _random_pair(rng, args.kind, n)
        try:
            report = distance_report(g1, g2, mode="exact", budget=args.exact_budget)
        except BudgetExceeded:
            skipped += 1
            continue
        slack = report.bound - report.distance_value
        ok = report.distance_value <= report.bound + 1e-9
        if not ok:
            violations += 1
        slacks.append(slack)
        rows.append(
            {
                "trial": trial,
                "h_prime": report.h_prime,
                "distance": report.distance_value,
                "bound": round(report.bound, 6),
                "slack": round(slack, 6),
                "ok": ok,
            }
        )
    summary = {
        "cases": len(rows),
        "skipped_budget": skipped,
        "violations": violations,
        "min_slack": round(min(slacks), 6) if slacks else None,
        "max_slack": round(max(slacks), 6) if slacks else None,
    }
    return {"rows": rows, "summary": summary}


def _run_conjectures(args) -> dict:
    n = args.n if args.n is not None else 8
    trials = args.trials if args.trials is not None else 50
    rng = random.Random(args.seed)
    rows = []
    skipped = 0
    for trial in range(trials):
        g1, g2 = _random_pair(rng, "u", n)
        rb = symmetric_difference(g1, g2)
        m_rb = rb.edge_count
        if m_rb == 0:
            continue
        try:
            report = distance_report(g1, g2, mode="exact", budget=args.exact_budget)
        except BudgetExceeded:
            skipped += 1
            continue
        shortest = shortest_alternating_circuit(rb)
        assert shortest is not None
        dist = report.distance_value
        m, m_star = report.m, report.m_star
        h = report.h_prime
        row = {
            "trial": trial,
            "h_prime": h,
            "distance": dist,
            "shortest_circuit": shortest.length,
            "slack_short_circuit": round(3 * n * n / m_rb - shortest.length, 6),
            "slack_circuit_count": round(report.k - m_rb * m_rb / (6 * n * n), 6),
            "slack_i": round(h * (1 - m / (3 * n * n)) - dist, 6),
            "slack_ii": round(m_star * (0.5 - m / (6 * n * n)) - dist, 6),
            "slack_iii": round(m * (1 - m / (3 * n * n)) - dist, 6),
            "slack_iv": round(5 * n * n / 24 - dist, 6),
        }
        rows.append(row)
    slack_keys = [k for k in (rows[0] if rows else {}) if k.startswith("slack")]
    summary = {"cases": len(rows), "skipped_budget": skipped, "label": "EMPIRICAL"}
    for key in slack_keys:
        values = [r[key] for r in rows]
        summary[f"min_{key}"] = round(min(values), 6) if values else None
        summary[f"max_{key}"] = round(max(values), 6) if values else None
    return {"rows": rows, "summary": summary}


def cmd_experiment(args) -> int:
    if args.suite == "identity":
        result = _run_identity(args)
    elif args.suite == "bounds":
        result = _run_bounds(args)
    else:
        result = _run_conjectures(args)
    payload = {
        "suite": args.suite,
        "kind": args.kind,
        "n": args.n,
        "trials": args.trials,
        "seed": args.seed,
        **result,
    }
    if args.json:
        print(json.dumps(payload, sort_keys=True))
        return 0
    print(f"suite: {args.suite} (kind={args.kind}, n={args.n}, trials={args.trials}, seed={args.seed})")
    for row in result["rows"]:
        print("  " + "  ".join(f"{key}={value}" for key, value in row.items()))
    print("summary: " + "  ".join(f"{key}={value}" for key, value in result["summary"].items()))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swapdist",
        description="Swap distances between realizations of graphical degree sequences",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="test a degree-sequence file for graphicality")
    p_check.add_argument("seqfile")
    p_check.add_argument("--kind", choices=("u", "b", "d"), default="u")
    p_check.set_defaults(func=cmd_check)

    def add_pair_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph1")
        p.add_argument("graph2")
        p.add_argument("--mode", choices=("exact", "greedy"), default="exact")
        p.add_argument("--budget", type=int, default=None, help="exhaustive-search edge budget")
        p.set_defaults(func=func)
        return p

    p_dist = add_pair_command("distance", cmd_distance, "swap distance between two realizations")
    p_dist.add_argument("--json", action="store_true")

    p_tr = add_pair_command("transform", cmd_transform, "emit a verified swap sequence")
    p_tr.add_argument("--out", required=True, help="output path for the sequence JSON")

    p_ver = sub.add_parser("verify", help="replay a swap-sequence file")
    p_ver.add_argument("seqfile")
    p_ver.add_argument("graph1")
    p_ver.add_argument("graph2")
    p_ver.set_defaults(func=cmd_verify)

    p_exp = sub.add_parser("experiment", help="run an empirical suite")
    p_exp.add_argument("--suite", choices=("identity", "bounds", "conjectures"), required=True)
    p_exp.add_argument("--kind", choices=("u", "b", "d"), default="u")
    p_exp.add_argument("--n", type=int, default=None)
    p_exp.add_argument("--trials", type=int, default=None)
    p_exp.add_argument("--seed", type=int, default=0)
    p_exp.add_argument("--budget", type=int, default=None)
    p_exp.add_argument("--json", action="store_true")
    p_exp.set_defaults(func=cmd_experiment)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "budget"):
        args.exact_budget = _budget(args)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DegreeMismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return 3
    except (BudgetExceeded, CapExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 4
    except (SwapDistError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
