from __future__ import annotations

import json

import pytest

from kplanar.graph import (Drawing, Graph, dump_drawing_json, dump_edge_list,
                           intersection_graph, load_combinatorial_drawing,
                           load_drawing_json, load_graph)


def test_load_triangle():
    g = load_graph("0 1\n1 2\n2 0")
    assert (g.n, g.m, g.max_degree) == (3, 3, 2)
    assert sum(g.degree) == 2 * g.m


def test_duplicate_edge_rejected():
    with pytest.raises(ValueError, match="duplicate"):
        load_graph("0 1\n0 1")
    with pytest.raises(ValueError, match="duplicate"):
        load_graph("0 1\n1 0")


def test_k5_counts():
    text = "\n".join(f"{u} {v}" for u in range(5) for v in range(u + 1, 5))
    g = load_graph(text)
    assert (g.n, g.m, g.max_degree) == (5, 10, 4)


def test_header_allows_isolated_vertices():
    g = load_graph("n 6\n0 1\n")
    assert g.n == 6
    assert g.degree[5] == 0
    with pytest.raises(ValueError, match="smaller than max vertex id"):
        load_graph("n 2\n0 5")


def test_parse_errors():
    with pytest.raises(ValueError, match="line 1"):
        load_graph("0")
    with pytest.raises(ValueError, match="self-loop"):
        load_graph("3 3")
    with pytest.raises(ValueError, match="non-integer"):
        load_graph("a b")
    with pytest.raises(ValueError, match="header"):
        load_graph("0 1\nn 5")


def test_edge_list_round_trip():
    g = load_graph("n 4\n0 1\n2 3")
    again = load_graph(dump_edge_list(g))
    assert again.edges == g.edges and again.n == g.n


def test_combinatorial_single_crossing():
    d = load_combinatorial_drawing(json.dumps(
        {"format": "combinatorial", "edges": [[0, 1], [2, 3]], "crossings": [[0, 1]]}))
    assert d.total_crossings == 1
    assert d.local_crossing_number == 1
    assert not d.has_adjacent_crossings


def test_combinatorial_self_pair_rejected():
    with pytest.raises(ValueError, match="repeats an edge"):
        load_combinatorial_drawing(json.dumps(
            {"format": "combinatorial", "edges": [[0, 1], [2, 3]], "crossings": [[0, 0]]}))


def test_combinatorial_unknown_edge_rejected():
    with pytest.raises(ValueError, match="unknown edge id"):
        load_combinatorial_drawing(json.dumps(
            {"format": "combinatorial", "edges": [[0, 1]], "crossings": [[0, 7]]}))


def test_crossing_cycle_on_edge_ids():
    # C_5 edges whose crossing structure is itself a 5-cycle on edge ids.
    edges = [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]
    crossings = [[i, (i + 1) % 5] for i in range(5)]
    d = load_combinatorial_drawing(json.dumps(
        {"format": "combinatorial", "edges": edges, "crossings": crossings}))
    assert d.local_crossing_number == 2
    assert d.total_crossings == 5
    assert d.has_adjacent_crossings  # consecutive cycle edges share endpoints


def test_multiplicities_accumulate():
    d = Drawing(Graph(4, [(0, 1), (2, 3)]), [(0, 1, 2), (1, 0, 1)])
    assert d.total_crossings == 3
    assert d.load == (3, 3)
    assert d.multiplicity(0, 1) == 3
    with pytest.raises(ValueError, match="multiplicity"):
        Drawing(Graph(4, [(0, 1), (2, 3)]), [(0, 1, 0)])


def test_intersection_graph_k4(k4):
    ig = intersection_graph(k4)
    assert ig.n == 6
    assert ig.m == 1


def test_intersection_graph_crossing_free(path_drawing):
    ig = intersection_graph(path_drawing)
    assert ig.m == 0


def test_intersection_graph_degree_vs_load(k6):
    ig = intersection_graph(k6)
    assert ig.max_degree == k6.local_crossing_number == 4
    # With multiplicities > 1 the inequality is strict.
    d = Drawing(Graph(4, [(0, 1), (2, 3)]), [(0, 1, 3)])
    assert intersection_graph(d).max_degree == 1 < d.local_crossing_number


def test_drawing_json_round_trip(k6, two_disjoint_pairs):
    for d in (k6, two_disjoint_pairs):
        again = load_drawing_json(dump_drawing_json(d))
        assert again.crossings == d.crossings
        assert again.graph.edges == d.graph.edges
        assert again.coords == d.coords


def test_drawing_json_diagnostics():
    with pytest.raises(ValueError, match="malformed JSON"):
        load_drawing_json("{nope")
    with pytest.raises(ValueError, match="'format'"):
        load_drawing_json(json.dumps({"edges": []}))
    with pytest.raises(ValueError, match="'coords'"):
        load_drawing_json(json.dumps({"format": "geometric", "edges": []}))
    with pytest.raises(ValueError, match="edges\\[0\\]"):
        load_drawing_json(json.dumps(
            {"format": "combinatorial", "edges": [[0]], "crossings": []}))


def test_geometric_scaling_through_loader():
    doc = {"format": "geometric",
           "coords": [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]],
           "edges": [[u, v] for u in range(4) for v in range(u + 1, 4)]}
    d = load_drawing_json(json.dumps(doc))
    assert d.total_crossings == 1


def test_graph_validation():
    with pytest.raises(ValueError, match="self-loop"):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError, match="outside"):
        Graph(2, [(0, 5)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph(3, [(0, 1), (1, 0)])
