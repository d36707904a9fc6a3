"""Graph and drawing data model: crossings, per-edge loads, intersection graph.

A Drawing is a Graph plus a crossing multiset, obtained either from exact
straight-line geometry or from an explicit combinatorial crossing list.
Everything is immutable after construction.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .geometry import Point, extract_crossings, scale_to_integers


class Graph:
    """Simple undirected graph with dense, stable edge ids 0..m-1."""

    __slots__ = ("n", "edges", "adjacency", "degree", "_edge_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        normalized: list[tuple[int, int]] = []
        index: dict[tuple[int, int], int] = {}
        adjacency: list[list[int]] = [[] for _ in range(n)]
        degree = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            index[key] = len(normalized)
            normalized.append(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
            degree[u] += 1
            degree[v] += 1
        self.edges = tuple(normalized)
        self.adjacency = tuple(tuple(sorted(a)) for a in adjacency)
        self.degree = tuple(degree)
        self._edge_index = index

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degree, default=0)

    def edge_id(self, u: int, v: int) -> int:
        return self._edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Drawing:
    """A drawn graph: crossing multiset, per-edge loads, totals.

    ``crossings`` holds (e, f, multiplicity) triples with e < f.
    ``load[e]`` is the multiplicity-weighted number of crossings on edge e,
    ``total_crossings`` their sum over crossing points, and
    ``local_crossing_number`` the maximum load.
    """

    __slots__ = ("graph", "coords", "crossings", "load", "total_crossings",
                 "local_crossing_number", "has_adjacent_crossings")

    def __init__(self, graph: Graph, crossings: Iterable[tuple[int, int, int]],
                 coords: Sequence[Point] | None = None):
        self.graph = graph
        self.coords = tuple(tuple(p) for p in coords) if coords is not None else None
        merged: dict[tuple[int, int], int] = {}
        adjacent = False
        for e, f, mult in crossings:
            if not (0 <= e < graph.m and 0 <= f < graph.m):
                raise ValueError(f"crossing ({e}, {f}) references an unknown edge id")
            if e == f:
                raise ValueError(f"crossing pair ({e}, {e}) repeats an edge with itself")
            if mult < 1:
                raise ValueError(f"crossing ({e}, {f}) has multiplicity {mult} < 1")
            if set(graph.edges[e]) & set(graph.edges[f]):
                adjacent = True
            key = (e, f) if e < f else (f, e)
            merged[key] = merged.get(key, 0) + mult
        self.crossings = tuple((e, f, merged[(e, f)]) for e, f in sorted(merged))
        load = [0] * graph.m
        total = 0
        for e, f, mult in self.crossings:
            load[e] += mult
            load[f] += mult
            total += mult
        self.load = tuple(load)
        self.total_crossings = total
        self.local_crossing_number = max(load, default=0)
        self.has_adjacent_crossings = adjacent

    @property
    def representation(self) -> str:
        return "geometric" if self.coords is not None else "combinatorial"

    def multiplicity(self, e: int, f: int) -> int:
        key = (e, f) if e < f else (f, e)
        for a, b, mult in self.crossings:
            if (a, b) == key:
                return mult
        return 0

    def __repr__(self) -> str:
        return (f"Drawing({self.graph!r}, C={self.total_crossings}, "
                f"L={self.local_crossing_number})")


class IntersectionGraph(Graph):
    """Graph on the edge ids of a drawing; adjacency = the edges cross."""

    __slots__ = ("drawing",)

    def __init__(self, drawing: Drawing):
        super().__init__(drawing.graph.m, ((e, f) for e, f, _ in drawing.crossings))
        self.drawing = drawing


def intersection_graph(drawing: Drawing) -> IntersectionGraph:
    return IntersectionGraph(drawing)


def crossings_from_geometry(graph: Graph, coords: Sequence[Point]) -> Drawing:
    """Drawing of ``graph`` with straight-line edges on integer coordinates.

    Degenerate configurations raise DegenerateDrawingError; use
    geometry.scale_to_integers for non-integer input.
    """
    if len(coords) != graph.n:
        raise ValueError(f"expected {graph.n} coordinates, got {len(coords)}")
    pts: list[Point] = []
    for pt in coords:
        x, y = pt
        if not isinstance(x, int) or not isinstance(y, int):
            raise ValueError(f"coordinate {pt!r} is not integer; scale the input first")
        pts.append((x, y))
    pairs = extract_crossings(pts, graph.edges)
    return Drawing(graph, ((e, f, 1) for e, f in pairs), coords=pts)


def load_graph(edge_list_text: str) -> Graph:
    """Parse the edge-list format: optional header "n <count>", then "u v" lines."""
    header_n: int | None = None
    edges: list[tuple[int, int]] = []
    max_id = -1
    for lineno, raw in enumerate(edge_list_text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if header_n is not None or edges:
                raise ValueError(f"line {lineno}: header must be the first non-empty line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ValueError(f"line {lineno}: malformed header {line!r}")
            header_n = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    n = max_id + 1
    if header_n is not None:
        if header_n < n:
            raise ValueError(f"header n={header_n} smaller than max vertex id {max_id}")
        n = header_n
    return Graph(n, edges)


def dump_edge_list(graph: Graph) -> str:
    lines = [f"n {graph.n}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def load_combinatorial_drawing(text: str) -> Drawing:
    """Parse the combinatorial drawing JSON: edges plus crossing pairs by edge id."""
    doc = _parse_json(text)
    return _drawing_from_doc(doc, expected_format="combinatorial")


def load_drawing_json(text: str) -> Drawing:
    """Parse either drawing JSON format (geometric or combinatorial)."""
    return _drawing_from_doc(_parse_json(text))


def _parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from None


def _drawing_from_doc(doc, expected_format: str | None = None) -> Drawing:
    if not isinstance(doc, dict):
        raise ValueError("drawing JSON must be an object")
    fmt = doc.get("format")
    if fmt not in ("geometric", "combinatorial"):
        raise ValueError(f"field 'format' must be 'geometric' or 'combinatorial', got {fmt!r}")
    if expected_format is not None and fmt != expected_format:
        raise ValueError(f"field 'format' must be {expected_format!r}, got {fmt!r}")
    edges = doc.get("edges")
    if not isinstance(edges, list):
        raise ValueError("field 'edges' must be a list of [u, v] pairs")
    pairs = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ValueError(f"field 'edges[{i}]' must be a pair of vertex ids")
        pairs.append((e[0], e[1]))

    if fmt == "geometric":
        coords = doc.get("coords")
        if not isinstance(coords, list):
            raise ValueError("field 'coords' must be a list of [x, y] points")
        pts = scale_to_integers(coords)
        n = doc.get("n", len(pts))
        if n != len(pts):
            raise ValueError(f"field 'n' ({n}) disagrees with number of coords ({len(pts)})")
        return crossings_from_geometry(Graph(n, pairs), pts)

    n = doc.get("n")
    if n is None:
        n = 1 + max((max(u, v) for u, v in pairs), default=-1)
    graph = Graph(n, pairs)
    raw = doc.get("crossings", [])
    if not isinstance(raw, list):
        raise ValueError("field 'crossings' must be a list of [e, f] or [e, f, mult]")
    crossings = []
    for i, c in enumerate(raw):
        if not (isinstance(c, list) and len(c) in (2, 3) and all(isinstance(x, int) for x in c)):
            raise ValueError(f"field 'crossings[{i}]' must be [e, f] or [e, f, mult]")
        e, f = c[0], c[1]
        mult = c[2] if len(c) == 3 else 1
        crossings.append((e, f, mult))
    return Drawing(graph, crossings)


def dump_drawing_json(drawing: Drawing) -> str:
    if drawing.coords is not None:
        doc = {
            "format": "geometric",
            "n": drawing.graph.n,
            "coords": [list(p) for p in drawing.coords],
            "edges": [list(e) for e in drawing.graph.edges],
        }
    else:
        doc = {
            "format": "combinatorial",
            "n": drawing.graph.n,
            "edges": [list(e) for e in drawing.graph.edges],
            "crossings": [[e, f, mult] for e, f, mult in drawing.crossings],
        }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
