"""Reproducible test instances: convex and two-ring complete-graph drawings,
near-regular random graphs, and random straight-line placements.

All coordinates are integers so the exact crossing predicates apply
directly. Regular polygon positions are deterministically jittered before
rounding: exact regular n-gons have concurrent main diagonals for even n,
which the drawing model rejects. Every generated drawing is validated by
the crossing extractor, and convex drawings additionally against the
closed-form crossing counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import DegenerateDrawingError
from .graph import Drawing, Graph, crossings_from_geometry

_GOLDEN = (math.sqrt(5) - 1) / 2


def _jitter(i: int, salt: int) -> float:
    """Deterministic low-discrepancy value in [0, 1)."""
    return ((i + 1) * _GOLDEN + (salt + 1) * _GOLDEN * _GOLDEN * 7.0) % 1.0


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def convex_kn(n: int) -> Drawing:
    """K_n on strictly convex integer positions.

    Any strictly convex placement realizes exactly C(n, 4) crossings, and
    the chord spanning g positions carries load (g-1)(n-g-1); both facts
    are verified against the extractor before the drawing is returned.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    graph = complete_graph(n)
    expected_c = math.comb(n, 4)
    for attempt in range(16):
        scale = 1 << (14 + min(attempt, 8))
        coords = []
        for i in range(n):
            angle = 2.0 * math.pi * (i + 0.05 + 0.4 * _jitter(i, attempt)) / n
            coords.append((round(scale * math.cos(angle)), round(scale * math.sin(angle))))
        if not _strictly_convex(coords):
            continue
        try:
            drawing = crossings_from_geometry(graph, coords)
        except DegenerateDrawingError:
            continue
        if drawing.total_crossings != expected_c:
            continue
        ok = True
        for e, (u, v) in enumerate(graph.edges):
            gap = abs(u - v)
            gap = min(gap, n - gap)
            if drawing.load[e] != (gap - 1) * (n - gap - 1):
                ok = False
                break
        if ok:
            return drawing
    raise RuntimeError(f"could not realize a valid convex K_{n} placement")


def cylindrical_kn(n: int) -> Drawing:
    """K_n with the vertices split over two concentric rings.

    A second complete-graph drawing family with a different crossing
    profile than convex position; its crossing data is whatever the
    extractor measures, recorded on the returned drawing.
    """
    if n < 6 or n % 2:
        raise ValueError("need even n >= 6")
    graph = complete_graph(n)
    h = n // 2
    for attempt in range(24):
        scale = 1 << (14 + min(attempt, 8))
        inner = scale // 2
        coords = []
        for i in range(h):
            angle = 2.0 * math.pi * (i + 0.05 + 0.4 * _jitter(i, attempt)) / h
            coords.append((round(scale * math.cos(angle)), round(scale * math.sin(angle))))
        rotation = 0.5 + 0.3 * _jitter(attempt, 17)
        for i in range(h):
            angle = 2.0 * math.pi * (i + rotation + 0.4 * _jitter(i + h, attempt)) / h
            coords.append((round(inner * math.cos(angle)), round(inner * math.sin(angle))))
        try:
            return crossings_from_geometry(graph, coords)
        except DegenerateDrawingError:
            continue
    raise RuntimeError(f"could not realize a valid two-ring K_{n} placement")


def random_regularish(n: int, d: int, seed: int) -> Graph:
    """Random near-d-regular simple graph via stub pairing.

    Whole pairings with loops or duplicate edges are rejected and retried;
    if no clean pairing appears, the last one is repaired by re-pairing the
    offending stubs and dropping what cannot be placed. The result keeps
    max degree over average degree at most 1 + 3/d.
    """
    if d < 0 or d >= max(n, 1):
        raise ValueError("need 0 <= d < n")
    if (n * d) % 2:
        raise ValueError("n * d must be even")
    if d == 0:
        return Graph(n, [])
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    stubs = np.repeat(np.arange(n), d)
    last_pairs = None
    for _ in range(60):
        perm = rng.permutation(stubs)
        pairs = perm.reshape(-1, 2)
        last_pairs = pairs
        if _clean_pairing(pairs):
            return Graph(n, ((int(u), int(v)) for u, v in pairs))
    edges, leftovers = _split_pairing(last_pairs)
    for _ in range(40):
        if not leftovers:
            break
        order = rng.permutation(len(leftovers))
        shuffled = [leftovers[i] for i in order]
        leftovers = []
        for a, b in zip(shuffled[::2], shuffled[1::2]):
            key = (a, b) if a < b else (b, a)
            if a == b or key in edges:
                leftovers.extend((a, b))
            else:
                edges.add(key)
        if len(shuffled) % 2:
            leftovers.append(shuffled[-1])
    graph = Graph(n, sorted(edges))
    alpha = graph.max_degree * n / (2 * graph.m) if graph.m else 1.0
    if alpha > 1 + 3 / d:
        raise RuntimeError(f"retry budget exhausted: alpha={alpha:.3f} > 1 + 3/d")
    return graph


def alpha_of(graph: Graph) -> float:
    """Max degree over average degree; 1.0 for edgeless graphs."""
    if graph.m == 0:
        return 1.0
    return graph.max_degree * graph.n / (2 * graph.m)


def random_geometric_drawing(graph: Graph, seed: int) -> Drawing:
    """Straight-line drawing on distinct random integer points in a box of
    side 10 n; degenerate placements are resampled."""
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    side = max(10 * graph.n, 10)
    for _ in range(200):
        pts = rng.integers(0, side + 1, size=(graph.n, 2))
        coords = [(int(x), int(y)) for x, y in pts]
        if len(set(coords)) != graph.n:
            continue
        try:
            return crossings_from_geometry(graph, coords)
        except DegenerateDrawingError:
            continue
    raise RuntimeError("retry budget exhausted placing the graph")


@dataclass(frozen=True)
class GeneratorSpec:
    """Declarative instance spec; the same spec always builds the same instance."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def build(self) -> Drawing | Graph:
        p = self.params
        if self.family == "convex-kn":
            return convex_kn(p["n"])
        if self.family == "cyl-kn":
            return cylindrical_kn(p["n"])
        if self.family == "regularish":
            return random_regularish(p["n"], p["d"], self.seed)
        if self.family == "geometric":
            graph = random_regularish(p["n"], p["d"], self.seed)
            return random_geometric_drawing(graph, self.seed)
        raise ValueError(f"unknown family {self.family!r}")


def _strictly_convex(coords: list[tuple[int, int]]) -> bool:
    n = len(coords)
    if len(set(coords)) != n:
        return False
    for i in range(n):
        a, b, c = coords[i], coords[(i + 1) % n], coords[(i + 2) % n]
        cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        if cross <= 0:
            return False
    return True


def _clean_pairing(pairs: np.ndarray) -> bool:
    seen = set()
    for u, v in pairs:
        if u == v:
            return False
        key = (int(u), int(v)) if u < v else (int(v), int(u))
        if key in seen:
            return False
        seen.add(key)
    return True


def _split_pairing(pairs: np.ndarray) -> tuple[set[tuple[int, int]], list[int]]:
    edges: set[tuple[int, int]] = set()
    leftovers: list[int] = []
    for u, v in pairs:
        u, v = int(u), int(v)
        key = (u, v) if u < v else (v, u)
        if u == v or key in edges:
            leftovers.extend((u, v))
        else:
            edges.add(key)
    return edges, leftovers
