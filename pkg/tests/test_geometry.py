from __future__ import annotations

import pytest

from kplanar.geometry import (DegenerateDrawingError, crossing_point, extract_crossings,
                              orientation, scale_to_integers, segments_properly_cross)
from kplanar.graph import Graph, crossings_from_geometry


def test_orientation_signs():
    assert orientation((0, 0), (1, 0), (0, 1)) == 1
    assert orientation((0, 0), (1, 0), (0, -1)) == -1
    assert orientation((0, 0), (1, 0), (2, 0)) == 0


def test_square_diagonals_cross():
    assert segments_properly_cross((0, 0), (2, 2), (0, 2), (2, 0))
    x, y = crossing_point((0, 0), (2, 2), (0, 2), (2, 0))
    assert (x, y) == (1, 1)


def test_endpoint_touch_is_not_a_proper_cross():
    assert not segments_properly_cross((0, 0), (2, 2), (2, 2), (4, 0))
    assert not segments_properly_cross((0, 0), (4, 0), (2, 0), (2, 2))


def test_extract_square_k4():
    # Unit square corners: only the two diagonals cross.
    graph = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    drawing = crossings_from_geometry(graph, [(0, 0), (1, 0), (1, 1), (0, 1)])
    assert drawing.total_crossings == 1
    assert drawing.local_crossing_number == 1
    e1 = graph.edge_id(0, 2)
    e2 = graph.edge_id(1, 3)
    assert drawing.crossings == ((min(e1, e2), max(e1, e2), 1),)


def test_path_has_no_crossings(path_drawing):
    assert path_drawing.total_crossings == 0
    assert path_drawing.local_crossing_number == 0


def test_coincident_vertices_rejected():
    with pytest.raises(DegenerateDrawingError) as err:
        extract_crossings([(0, 0), (0, 0)], [(0, 1)])
    assert err.value.witnesses[0][0] == "coincident-vertices"


def test_vertex_on_edge_rejected():
    graph = Graph(3, [(0, 1)])
    with pytest.raises(DegenerateDrawingError) as err:
        crossings_from_geometry(graph, [(0, 0), (4, 0), (2, 0)])
    kinds = {w[0] for w in err.value.witnesses}
    assert "vertex-on-edge" in kinds


def test_collinear_overlap_rejected():
    graph = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DegenerateDrawingError) as err:
        crossings_from_geometry(graph, [(0, 0), (4, 0), (1, 0), (3, 0)])
    kinds = {w[0] for w in err.value.witnesses}
    # The interior endpoints also witness vertex-on-edge; the overlap must
    # be reported regardless.
    assert "collinear-overlap" in kinds


def test_three_concurrent_diagonals_rejected():
    # Centrally symmetric hexagon: the three main diagonals meet at the origin.
    coords = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]
    graph = Graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6)])
    with pytest.raises(DegenerateDrawingError) as err:
        crossings_from_geometry(graph, coords)
    hits = [w for w in err.value.witnesses if w[0] == "concurrent-crossing"]
    assert hits and hits[0][1] == (0.0, 0.0)


def test_deterministic_ordering():
    graph = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    coords = [(0, 0), (7, 1), (9, 8), (1, 6)]
    pairs = extract_crossings(coords, graph.edges)
    assert pairs == sorted(pairs)


def test_rigid_motion_invariance():
    graph = Graph(5, [(0, 2), (1, 3), (2, 4), (0, 3), (1, 4)])
    coords = [(0, 0), (13, 2), (21, 11), (9, 19), (-3, 9)]
    base = extract_crossings(coords, graph.edges)

    translated = [(x + 1000, y - 271) for x, y in coords]
    rotated = [(-y, x) for x, y in coords]
    scaled = [(7 * x, 7 * y) for x, y in coords]
    for moved in (translated, rotated, scaled):
        assert extract_crossings(moved, graph.edges) == base


def test_scale_to_integers():
    pts = scale_to_integers([[0.5, 1], [1.5, -0.25]])
    assert pts == [(2, 4), (6, -1)]
    assert scale_to_integers([[3, 4]]) == [(3, 4)]
    with pytest.raises(ValueError):
        scale_to_integers([[float("nan"), 0]])
    with pytest.raises(ValueError):
        scale_to_integers([["oops", 0]])


def test_load_sum_is_twice_total(k6):
    assert sum(k6.load) == 2 * k6.total_crossings
