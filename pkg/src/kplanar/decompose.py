"""Randomized k-plane decompositions of a fixed drawing.

The construction labels each vertex independently with a weighted die,
sends every edge to the plane indexed by the label sum mod k, and counts
the crossings that survive (both edges of the same type). Searches repeat
the labeling with local resampling of violated target events until a full
recount certifies the target, in the style of constructive local-lemma
algorithms.

All integer target cutoffs are computed in exact rational arithmetic, so a
certificate never depends on floating rounding.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable

import numpy as np

from .graph import Drawing, Graph, intersection_graph
from .weights import WeightVector, optimal_weights, uniform_weights


@dataclass(frozen=True)
class VertexLabeling:
    labels: tuple[int, ...]
    k: int
    seed: int | None

    def __post_init__(self):
        if any(not 0 <= x < self.k for x in self.labels):
            raise ValueError("labels must lie in 0..k-1")


@dataclass(frozen=True)
class PlaneAssignment:
    """Per-edge plane indices; ``types`` is the sorted endpoint-label pair
    when the assignment came from a vertex labeling, else None."""

    planes: tuple[int, ...]
    k: int
    types: tuple[tuple[int, int], ...] | None = None
    labeling: VertexLabeling | None = None

    @property
    def semantics(self) -> str:
        return "type" if self.types is not None else "plane"


@dataclass
class DecompositionReport:
    g: tuple[int, ...]
    plane_totals: tuple[int, ...]
    plane_maxima: tuple[int, ...]
    thresholds: dict
    certified: bool | None
    semantics: str

    @property
    def max_load(self) -> int:
        return max(self.plane_maxima, default=0)

    @property
    def total(self) -> int:
        return sum(self.plane_totals)


def sample_labeling(graph: Graph, weights: WeightVector, seed: int) -> VertexLabeling:
    """Independent per-vertex labels with Pr[label = i] = p_i, deterministic in seed."""
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    labels = _draw_labels(rng, graph.n, weights)
    return VertexLabeling(tuple(int(x) for x in labels), weights.k, seed)


def assign_planes(graph: Graph, labeling: VertexLabeling) -> PlaneAssignment:
    """Plane of edge (u, v) is (label_u + label_v) mod k; the type is the
    unordered label pair."""
    if len(labeling.labels) != graph.n:
        raise ValueError("labeling does not cover the graph's vertices")
    k = labeling.k
    planes = []
    types = []
    for u, v in graph.edges:
        i, j = labeling.labels[u], labeling.labels[v]
        planes.append((i + j) % k)
        types.append((i, j) if i <= j else (j, i))
    return PlaneAssignment(tuple(planes), k, tuple(types), labeling)


def surviving_report(drawing: Drawing, assignment: PlaneAssignment,
                     thresholds: dict | None = None,
                     certified: bool | None = None) -> DecompositionReport:
    """Recount surviving crossings from scratch.

    With types present, a crossing survives iff both edges have the same
    type; without types (coloring / degree-partition planes) it survives
    iff both edges share a plane.
    """
    m = drawing.graph.m
    if len(assignment.planes) != m:
        raise ValueError("assignment does not cover the drawing's edges")
    g = [0] * m
    totals = [0] * assignment.k
    for e, f, mult in drawing.crossings:
        if assignment.types is not None:
            survives = assignment.types[e] == assignment.types[f]
        else:
            survives = assignment.planes[e] == assignment.planes[f]
        if survives:
            g[e] += mult
            g[f] += mult
            totals[assignment.planes[e]] += mult
    maxima = [0] * assignment.k
    for e in range(m):
        p = assignment.planes[e]
        if g[e] > maxima[p]:
            maxima[p] = g[e]
    return DecompositionReport(tuple(g), tuple(totals), tuple(maxima),
                               thresholds or {}, certified, assignment.semantics)


def decompose_by_coloring(drawing: Drawing) -> PlaneAssignment:
    """Greedy coloring of the intersection graph in descending-degree order.

    Uses at most max_degree + 1 planes and leaves no two crossing edges in
    the same plane, so every surviving load is zero.
    """
    ig = intersection_graph(drawing)
    order = sorted(range(ig.n), key=lambda v: (-ig.degree[v], v))
    color = [-1] * ig.n
    for v in order:
        used = {color[w] for w in ig.adjacency[v] if color[w] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    k = max(color, default=-1) + 1 if ig.n else 1
    return PlaneAssignment(tuple(color), max(k, 1))


def decompose_lcr(drawing: Drawing, k: int, epsilon: float,
                  weights: WeightVector | None = None,
                  budget: int = 1000, seed: int = 0, *,
                  strategy: str = "local",
                  stop_when_certified: bool = True) -> tuple[PlaneAssignment, DecompositionReport]:
    """Search for a labeling whose max surviving load is at most (gamma + eps) L.

    Violated edges trigger resampling of their endpoint labels and those of
    their crossing partners; after budget//10 rounds without improvement the
    whole labeling is redrawn. With ``stop_when_certified`` false the search
    spends the entire budget driving the best max load down and returns the
    best labeling found.
    """
    _check_epsilon(epsilon)
    if weights is None:
        weights = optimal_weights(k)
    if weights.k != k:
        raise ValueError(f"weights have k={weights.k}, expected {k}")
    L = drawing.local_crossing_number
    cutoff = _rational_cutoff(Fraction(weights.gamma) + Fraction(epsilon), L)
    thresholds = {"max_g": float((Fraction(weights.gamma) + Fraction(epsilon)) * L),
                  "cutoff": cutoff, "gamma": float(weights.gamma), "epsilon": float(epsilon)}
    state = _SearchState(drawing, k, seed, weights)
    best_labels = state.run(budget, strategy, stop_when_certified,
                            edge_cutoff=cutoff)
    labeling = VertexLabeling(tuple(int(x) for x in best_labels), k, seed)
    assignment = assign_planes(drawing.graph, labeling)
    report = surviving_report(drawing, assignment, thresholds)
    report.certified = report.max_load <= cutoff
    return assignment, report


def decompose_combined(drawing: Drawing, k: int, epsilon: float,
                       budget: int = 1000, seed: int = 0, *,
                       strategy: str = "local") -> tuple[PlaneAssignment, DecompositionReport]:
    """Search for a labeling meeting both combined targets under uniform weights:
    total survivals at most (2/k^2 - 1/k^3 + eps) C and max load at most
    (2/k^2 + eps) L.

    Uniform weights are forced: the expected-total identity behind the sum
    target is an expectation under uniform labels, and non-uniform optimal
    weights for k=2 push the unconditional survival rate to 11/27 > 3/8.
    """
    if k < 2:
        raise ValueError("combined decomposition needs k >= 2")
    _check_epsilon(epsilon)
    weights = uniform_weights(k)
    L = drawing.local_crossing_number
    C = drawing.total_crossings
    kk = Fraction(k) ** 2
    sum_frac = (2 / kk - 1 / (kk * k) + Fraction(epsilon)) * C
    max_frac = (2 / kk + Fraction(epsilon)) * L
    sum_cutoff = _rational_cutoff_value(sum_frac)
    max_cutoff = _rational_cutoff_value(max_frac)
    thresholds = {"sum_total": float(sum_frac), "sum_cutoff": sum_cutoff,
                  "max_g": float(max_frac), "max_cutoff": max_cutoff,
                  "epsilon": float(epsilon)}
    state = _SearchState(drawing, k, seed, weights)
    best_labels = state.run(budget, strategy, True,
                            edge_cutoff=max_cutoff, sum_cutoff=sum_cutoff)
    labeling = VertexLabeling(tuple(int(x) for x in best_labels), k, seed)
    assignment = assign_planes(drawing.graph, labeling)
    report = surviving_report(drawing, assignment, thresholds)
    report.certified = report.max_load <= max_cutoff and report.total <= sum_cutoff
    return assignment, report


def degree_partition(h: Graph, k: int, epsilon: float,
                     budget: int = 1000, seed: int = 0, *,
                     strategy: str = "local") -> tuple[VertexLabeling, bool]:
    """Partition V(H) into k parts with every induced degree at most
    (1/k + eps) max_degree(H).

    Uniform labels; a vertex whose same-part degree exceeds deg(v)/k +
    eps * max_degree is violated and gets itself and its neighborhood
    resampled. Certification is a final full recount.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    _check_epsilon(epsilon)
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    n = h.n
    delta = h.max_degree
    global_cutoff = _rational_cutoff(Fraction(1, k) + Fraction(epsilon), delta)
    deg = np.array(h.degree, dtype=np.int64)
    # Per-vertex event cutoffs deg(v)/k + eps*Delta, floored exactly.
    eps_delta = Fraction(epsilon) * delta
    vertex_cutoff = np.array(
        [int(floor(Fraction(int(d), k) + eps_delta)) for d in h.degree],
        dtype=np.int64) if n else np.zeros(0, dtype=np.int64)
    if h.m:
        eu = np.array([u for u, _ in h.edges], dtype=np.int64)
        ev = np.array([v for _, v in h.edges], dtype=np.int64)
    else:
        eu = ev = np.zeros(0, dtype=np.int64)

    labels = rng.integers(0, k, size=n)
    best_labels = labels.copy()
    best_metric = None
    stall = 0
    stall_limit = max(1, budget // 10)
    for _ in range(max(1, budget)):
        same = labels[eu] == labels[ev]
        same_deg = (np.bincount(eu[same], minlength=n)
                    + np.bincount(ev[same], minlength=n)) if h.m else np.zeros(n, dtype=np.int64)
        metric = int(same_deg.max()) if n else 0
        if best_metric is None or metric < best_metric:
            best_metric = metric
            best_labels = labels.copy()
            stall = 0
        else:
            stall += 1
        if metric <= global_cutoff:
            break
        violated = np.flatnonzero(same_deg > vertex_cutoff)
        if stall >= stall_limit or violated.size == 0 or strategy == "restart":
            labels = rng.integers(0, k, size=n)
            stall = 0
            continue
        scope = np.unique(np.concatenate(
            [violated] + [np.array(h.adjacency[int(v)], dtype=np.int64) for v in violated]))
        labels[scope] = rng.integers(0, k, size=scope.size)

    labeling = VertexLabeling(tuple(int(x) for x in best_labels), k, seed)
    certified = _max_same_part_degree(h, labeling.labels) <= global_cutoff
    return labeling, certified


def decompose_via_degree_partition(drawing: Drawing, k: int, epsilon: float,
                                   budget: int = 1000, seed: int = 0, *,
                                   strategy: str = "local") -> tuple[PlaneAssignment, DecompositionReport]:
    """Degree-partition the intersection graph; the part of an edge-vertex
    becomes its plane. Loads count co-plane crossing partners (no types)."""
    ig = intersection_graph(drawing)
    labeling, _ = degree_partition(ig, k, epsilon, budget, seed, strategy=strategy)
    assignment = PlaneAssignment(labeling.labels, k)
    cutoff = _rational_cutoff(Fraction(1, k) + Fraction(epsilon), ig.max_degree)
    thresholds = {"coplane_max": float((Fraction(1, k) + Fraction(epsilon)) * ig.max_degree),
                  "cutoff": cutoff, "epsilon": float(epsilon)}
    report = surviving_report(drawing, assignment, thresholds)
    report.certified = report.max_load <= cutoff
    return assignment, report


def _max_same_part_degree(h: Graph, labels: Iterable[int]) -> int:
    """Independent recount of max induced degree over the parts."""
    labels = list(labels)
    best = 0
    for v in range(h.n):
        d = sum(1 for w in h.adjacency[v] if labels[w] == labels[v])
        best = max(best, d)
    return best


class _SearchState:
    """Vectorized resample-until-certified loop shared by the lcr and
    combined searches."""

    def __init__(self, drawing: Drawing, k: int, seed: int, weights: WeightVector):
        self.k = k
        self.weights = weights
        self.rng = np.random.default_rng(np.random.SeedSequence(seed))
        g = drawing.graph
        self.n = g.n
        self.m = g.m
        self.eu = np.array([u for u, _ in g.edges], dtype=np.int64) if g.m else np.zeros(0, np.int64)
        self.ev = np.array([v for _, v in g.edges], dtype=np.int64) if g.m else np.zeros(0, np.int64)
        cross = drawing.crossings
        self.ce = np.array([c[0] for c in cross], dtype=np.int64)
        self.cf = np.array([c[1] for c in cross], dtype=np.int64)
        self.mult = np.array([c[2] for c in cross], dtype=np.int64)
        # Resampling scope of a violated edge: its endpoints plus every
        # endpoint of its crossing partners.
        scopes: list[set[int]] = [set(g.edges[e]) for e in range(g.m)]
        for e, f, _ in cross:
            scopes[e].update(g.edges[f])
            scopes[f].update(g.edges[e])
        self.scopes = [np.array(sorted(s), dtype=np.int64) for s in scopes]

    def loads(self, labels: np.ndarray) -> tuple[np.ndarray, int]:
        """Surviving load per edge and total surviving crossings."""
        if self.ce.size == 0:
            return np.zeros(self.m, dtype=np.int64), 0
        lu = labels[self.eu]
        lv = labels[self.ev]
        type_id = np.minimum(lu, lv) * self.k + np.maximum(lu, lv)
        match = type_id[self.ce] == type_id[self.cf]
        w = self.mult[match]
        g = (np.bincount(self.ce[match], weights=w, minlength=self.m)
             + np.bincount(self.cf[match], weights=w, minlength=self.m)).astype(np.int64)
        return g, int(w.sum())

    def run(self, budget: int, strategy: str, stop_when_certified: bool,
            edge_cutoff: int, sum_cutoff: int | None = None) -> np.ndarray:
        rng = self.rng
        labels = _draw_labels(rng, self.n, self.weights)
        best_labels = labels.copy()
        best_metric: tuple | None = None
        stall = 0
        stall_limit = max(1, budget // 10)
        for _ in range(max(1, budget)):
            g, total = self.loads(labels)
            max_g = int(g.max()) if g.size else 0
            metric = (max(0, max_g - edge_cutoff), max_g) if sum_cutoff is None else \
                (max(0, max_g - edge_cutoff) + max(0, total - sum_cutoff), max_g, total)
            if best_metric is None or metric < best_metric:
                best_metric = metric
                best_labels = labels.copy()
                stall = 0
            else:
                stall += 1
            certified_now = max_g <= edge_cutoff and (sum_cutoff is None or total <= sum_cutoff)
            if certified_now:
                if stop_when_certified:
                    return best_labels
                if sum_cutoff is None and best_metric[1] == 0:
                    return best_labels  # cannot improve on zero load
                # Keep optimizing: aspire below the best max load seen.
            if sum_cutoff is None and not stop_when_certified:
                aspiration = min(edge_cutoff, best_metric[1] - 1)
            else:
                aspiration = edge_cutoff
            violated = np.flatnonzero(g > aspiration)
            if stall >= stall_limit or violated.size == 0 or strategy == "restart":
                labels = _draw_labels(rng, self.n, self.weights)
                stall = 0
                continue
            scope = np.unique(np.concatenate([self.scopes[int(e)] for e in violated]))
            labels[scope] = _draw_labels(rng, scope.size, self.weights)
        return best_labels


def _draw_labels(rng: np.random.Generator, count: int, weights: WeightVector) -> np.ndarray:
    p = np.array(weights.as_floats(), dtype=np.float64)
    p /= p.sum()
    return rng.choice(weights.k, size=count, p=p)


def _rational_cutoff(factor: Fraction, scale: int) -> int:
    return _rational_cutoff_value(factor * scale)


def _rational_cutoff_value(value: Fraction) -> int:
    return int(floor(value))


def _check_epsilon(epsilon: float) -> None:
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if epsilon >= 0.1:
        warnings.warn(f"epsilon={epsilon} is outside the guarantee range (0, 0.1); "
                      "the construction still runs", stacklevel=3)
