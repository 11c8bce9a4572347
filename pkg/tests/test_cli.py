import json

from swapdist.cli import main

from conftest import two_triangles_shared_vertex_pair


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return str(path)


def graph_file(path, g):
    from swapdist import BipartiteGraph, DirectedGraph, SimpleGraph

    if isinstance(g, SimpleGraph):
        head = f"u {g.n}"
    elif isinstance(g, BipartiteGraph):
        head = f"b {g.k} {g.l}"
    else:
        assert isinstance(g, DirectedGraph)
        head = f"d {g.n}"
    body = "\n".join(f"{a} {b}" for a, b in g.edge_list())
    return write(path, head + "\n" + body + "\n")


def matching_files(tmp_path):
    from swapdist import SimpleGraph

    m1 = SimpleGraph(10, [(i, i + 1) for i in range(0, 10, 2)])
    m2 = SimpleGraph(10, [(i, (i + 1) % 10) for i in range(1, 10, 2)])
    return graph_file(tmp_path / "m1.g", m1), graph_file(tmp_path / "m2.g", m2)


def test_check_graphical(tmp_path, capsys):
    f = write(tmp_path / "d.txt", "3 3 3 3\n")
    assert main(["check", f]) == 0
    assert "GRAPHICAL" in capsys.readouterr().out


def test_check_not_graphical(tmp_path, capsys):
    f = write(tmp_path / "d.txt", "3 3 1 1\n")
    assert main(["check", f]) == 1
    assert "NOT GRAPHICAL" in capsys.readouterr().out


def test_check_directed(tmp_path, capsys):
    f = write(tmp_path / "d.txt", "1 1 1 / 1 1 1\n")
    assert main(["check", f, "--kind", "d"]) == 0
    assert "GRAPHICAL" in capsys.readouterr().out


def test_check_parse_error_reports_position(tmp_path, capsys):
    f = write(tmp_path / "d.txt", "3 x 3\n")
    assert main(["check", f]) == 2
    assert "parse error" in capsys.readouterr().err


def test_graph_parse_error_position(tmp_path, capsys):
    f = write(tmp_path / "g.txt", "u 4\n0 1\n2 oops\n")
    g = write(tmp_path / "h.txt", "u 4\n0 1\n")
    assert main(["distance", f, g]) == 2
    err = capsys.readouterr().err
    assert "line 3" in err and "column 3" in err


def test_distance_identical(tmp_path, capsys):
    from swapdist import SimpleGraph

    g = graph_file(tmp_path / "g.g", SimpleGraph(4, [(0, 1), (2, 3)]))
    assert main(["distance", g, g]) == 0
    out = capsys.readouterr().out
    assert "distance = 0 (EXACT)" in out


def test_distance_matchings(tmp_path, capsys):
    f1, f2 = matching_files(tmp_path)
    assert main(["distance", f1, f2]) == 0
    out = capsys.readouterr().out
    assert "H' = 5" in out and "k = 1" in out and "distance = 4 (EXACT)" in out


def test_distance_two_triangle_pair_json_deterministic(tmp_path, capsys):
    g1, g2 = two_triangles_shared_vertex_pair()
    f1 = graph_file(tmp_path / "g1.g", g1)
    f2 = graph_file(tmp_path / "g2.g", g2)
    assert main(["distance", f1, f2, "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["distance", f1, f2, "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["distance"] == 4 and payload["exact"] is True
    assert payload["h_prime"] == 6 and payload["k"] == 2
    assert payload["triangular_c6_count"] == 0


def test_distance_degree_mismatch(tmp_path, capsys):
    from swapdist import SimpleGraph

    f1 = graph_file(tmp_path / "a.g", SimpleGraph(3, [(0, 1)]))
    f2 = graph_file(tmp_path / "b.g", SimpleGraph(3, [(1, 2)]))
    assert main(["distance", f1, f2]) == 3


def test_distance_kind_mismatch(tmp_path):
    from swapdist import DirectedGraph, SimpleGraph

    f1 = graph_file(tmp_path / "a.g", SimpleGraph(3, [(0, 1)]))
    f2 = graph_file(tmp_path / "b.g", DirectedGraph(3, [(0, 1)]))
    assert main(["distance", f1, f2]) == 3


def test_distance_budget_exceeded(tmp_path, monkeypatch):
    f1, f2 = matching_files(tmp_path)
    assert main(["distance", f1, f2, "--budget", "4"]) == 4
    monkeypatch.setenv("SWAPDIST_BUDGET", "4")
    assert main(["distance", f1, f2]) == 4
    # the flag overrides the environment
    assert main(["distance", f1, f2, "--budget", "24"]) == 0


def test_transform_verify_roundtrip(tmp_path, capsys):
    f1, f2 = matching_files(tmp_path)
    seqfile = str(tmp_path / "seq.json")
    assert main(["transform", f1, f2, "--out", seqfile]) == 0
    out = capsys.readouterr().out
    assert "total weight = 4" in out
    assert main(["verify", seqfile, f1, f2]) == 0

    data = json.loads(open(seqfile).read())
    del data["moves"][1]
    broken = write(tmp_path / "broken.json", json.dumps(data))
    assert main(["verify", broken, f1, f2]) == 5
    err = capsys.readouterr().err
    assert "move index" in err

    # replaying against swapped graphs fails somewhere
    assert main(["verify", seqfile, f2, f1]) == 5


def test_transform_directed_roundtrip(tmp_path):
    g1, g2 = two_triangles_shared_vertex_pair()
    f1 = graph_file(tmp_path / "g1.g", g1)
    f2 = graph_file(tmp_path / "g2.g", g2)
    seqfile = str(tmp_path / "seq.json")
    assert main(["transform", f1, f2, "--out", seqfile]) == 0
    assert main(["verify", seqfile, f1, f2]) == 0
    data = json.loads(open(seqfile).read())
    assert data["kind"] == "d" and data["total_weight"] == 4


def test_triangular_move_serialization(tmp_path):
    from swapdist import DirectedGraph

    t1 = DirectedGraph(3, [(0, 1), (1, 2), (2, 0)])
    t2 = DirectedGraph(3, [(1, 0), (2, 1), (0, 2)])
    f1 = graph_file(tmp_path / "t1.g", t1)
    f2 = graph_file(tmp_path / "t2.g", t2)
    seqfile = str(tmp_path / "seq.json")
    assert main(["transform", f1, f2, "--out", seqfile]) == 0
    data = json.loads(open(seqfile).read())
    assert data["moves"] == [{"type": "tri_c6", "triangle": [0, 1, 2]}]
    assert data["total_weight"] == 2
    assert main(["verify", seqfile, f1, f2]) == 0


def test_verify_malformed_json(tmp_path, capsys):
    from swapdist import SimpleGraph

    f = graph_file(tmp_path / "g.g", SimpleGraph(4, [(0, 1), (2, 3)]))
    bad = write(tmp_path / "bad.json", "{not json")
    assert main(["verify", bad, f, f]) == 2
    wrong_shape = write(tmp_path / "shape.json", json.dumps({"moves": [{"type": "warp"}]}))
    assert main(["verify", wrong_shape, f, f]) == 2


def test_transform_identical_zero_moves(tmp_path, capsys):
    from swapdist import SimpleGraph

    f = graph_file(tmp_path / "g.g", SimpleGraph(4, [(0, 1), (2, 3)]))
    seqfile = str(tmp_path / "seq.json")
    assert main(["transform", f, f, "--out", seqfile]) == 0
    assert "moves = 0" in capsys.readouterr().out
    assert main(["verify", seqfile, f, f]) == 0


def test_bipartite_distance_and_transform(tmp_path, capsys):
    from swapdist import BipartiteGraph

    b1 = graph_file(tmp_path / "b1.g", BipartiteGraph(2, 2, [(0, 0), (1, 1)]))
    b2 = graph_file(tmp_path / "b2.g", BipartiteGraph(2, 2, [(0, 1), (1, 0)]))
    assert main(["distance", b1, b2]) == 0
    assert "distance = 1 (EXACT)" in capsys.readouterr().out
    seqfile = str(tmp_path / "seq.json")
    assert main(["transform", b1, b2, "--out", seqfile]) == 0
    assert main(["verify", seqfile, b1, b2]) == 0


def test_experiment_identity(capsys):
    assert main(["experiment", "--suite", "identity", "--n", "4", "--trials", "30", "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["experiment", "--suite", "identity", "--n", "4", "--trials", "30", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["summary"]["violations"] == 0
    assert payload["summary"]["structure_violations"] == 0
    assert payload["summary"]["bound_violations"] == 0


def test_experiment_identity_directed(capsys):
    assert main(["experiment", "--suite", "identity", "--kind", "d", "--n", "3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"]["violations"] == 0


def test_experiment_bounds(capsys):
    assert main(["experiment", "--suite", "bounds", "--n", "5", "--trials", "20", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"]["violations"] == 0
    assert payload["summary"]["cases"] > 0


def test_experiment_conjectures(capsys):
    assert main(["experiment", "--suite", "conjectures", "--n", "6", "--trials", "8", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"]["label"] == "EMPIRICAL"
