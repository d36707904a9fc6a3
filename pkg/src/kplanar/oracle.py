"""Exact brute-force ground truth at desk scale.

Exhaustive enumeration over labelings and edge partitions, exact survival
expectations and load distributions in rational arithmetic, and the
dependency-scope analysis for the per-edge overload events. Enumeration
sizes are capped and the cap is an error, never a silent fallback to
sampling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .decompose import PlaneAssignment, surviving_report
from .graph import Drawing
from .weights import WeightVector

MAX_STATES = 20_000_000
_CHUNK = 1 << 16
_DIST_STATE_CAP = 1 << 20


@dataclass(frozen=True)
class OracleResult:
    objective: int | Fraction
    witness: tuple[int, ...]
    search_space: int
    exhaustive: bool = True


@dataclass(frozen=True)
class ConditionalSurvival:
    """Conditioned on the edge's endpoint labels: per-partner survival
    probability and the exact distribution of the surviving load."""

    partner_probabilities: dict[int, Fraction]
    distribution: dict[int, Fraction]

    @property
    def mean(self) -> Fraction:
        return sum((Fraction(s) * p for s, p in self.distribution.items()), Fraction(0))


@dataclass(frozen=True)
class ScopeReport:
    counts: tuple[int, ...]
    max_degree: int
    scopes: tuple[frozenset[int], ...]


def exact_best_labeling(drawing: Drawing, k: int, objective: str = "max_g",
                        epsilon: float | Fraction | None = None) -> OracleResult:
    """Minimum of the chosen objective over all k^n vertex labelings.

    Objectives: "max_g" (max surviving load), "sum_g" (total surviving
    crossings), "combined" (largest excess over the two combined-target
    thresholds at the given epsilon; nonpositive means feasible). Ties go
    to the lexicographically smallest labeling.
    """
    n = drawing.graph.n
    states = k ** n
    if states > MAX_STATES:
        raise ValueError(f"search space k^n = {states} exceeds cap {MAX_STATES}")
    if objective not in ("max_g", "sum_g", "combined"):
        raise ValueError(f"unknown objective {objective!r}")

    scale = 1
    sum_scaled = max_scaled = 0
    if objective == "combined":
        if epsilon is None:
            raise ValueError("combined objective needs epsilon")
        eps = Fraction(epsilon)
        kk = Fraction(k) ** 2
        t_sum = (2 / kk - 1 / (kk * k) + eps) * drawing.total_crossings
        t_max = (2 / kk + eps) * drawing.local_crossing_number
        scale = lcm(t_sum.denominator, t_max.denominator)
        sum_scaled = int(t_sum * scale)
        max_scaled = int(t_max * scale)

    eval_chunk = _chunk_evaluator(drawing, k)
    best_val: int | None = None
    best_index = 0
    for start in range(0, states, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, states), dtype=np.int64)
        max_g, sum_g = eval_chunk(_indices_to_labels(idx, n, k))
        if objective == "max_g":
            vals = max_g
        elif objective == "sum_g":
            vals = sum_g
        else:
            vals = np.maximum(sum_g * scale - sum_scaled, max_g * scale - max_scaled)
        i = int(np.argmin(vals))
        if best_val is None or int(vals[i]) < best_val:
            best_val = int(vals[i])
            best_index = int(idx[i])
    witness = tuple(int(x) for x in _indices_to_labels(
        np.array([best_index], dtype=np.int64), n, k)[0])
    value: int | Fraction = best_val if objective != "combined" else Fraction(best_val, scale)
    return OracleResult(value, witness, states)


def exact_best_edge_partition(drawing: Drawing, k: int) -> OracleResult:
    """Minimum over all k^m edge partitions of the max co-plane load.

    This is the drawing-restricted variant of the k-plane local crossing
    number: an upper-bound certificate for the drawing-minimized quantity.
    """
    m = drawing.graph.m
    states = k ** m
    if states > MAX_STATES:
        raise ValueError(f"search space k^m = {states} exceeds cap {MAX_STATES}")
    ce = np.array([c[0] for c in drawing.crossings], dtype=np.int64)
    cf = np.array([c[1] for c in drawing.crossings], dtype=np.int64)
    mult = np.array([c[2] for c in drawing.crossings], dtype=np.int64)
    best_val: int | None = None
    best_index = 0
    for start in range(0, states, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, states), dtype=np.int64)
        planes = _indices_to_labels(idx, m, k)
        if ce.size:
            match = planes[:, ce] == planes[:, cf]
            g = np.zeros((idx.size, m), dtype=np.int64)
            for p in range(ce.size):
                col = match[:, p] * mult[p]
                g[:, ce[p]] += col
                g[:, cf[p]] += col
            vals = g.max(axis=1)
        else:
            vals = np.zeros(idx.size, dtype=np.int64)
        i = int(np.argmin(vals))
        if best_val is None or int(vals[i]) < best_val:
            best_val = int(vals[i])
            best_index = int(idx[i])
    witness = tuple(int(x) for x in _indices_to_labels(
        np.array([best_index], dtype=np.int64), m, k)[0])
    return OracleResult(best_val or 0, witness, states)


def evaluate_labeling(drawing: Drawing, labels: tuple[int, ...], k: int) -> tuple[int, int]:
    """(max_g, sum_g) of one labeling under type semantics; round-trips witnesses."""
    from .decompose import VertexLabeling, assign_planes
    assignment = assign_planes(drawing.graph, VertexLabeling(labels, k, None))
    report = surviving_report(drawing, assignment)
    return report.max_load, report.total


def evaluate_edge_partition(drawing: Drawing, planes: tuple[int, ...], k: int) -> int:
    """Max co-plane load of one edge partition; round-trips witnesses."""
    report = surviving_report(drawing, PlaneAssignment(planes, k))
    return report.max_load


def exact_survival_expectation(drawing: Drawing, weights: WeightVector) -> Fraction:
    """Exact expected total of surviving crossings.

    Per crossing pair, the labels of the at most 4 involved vertices are
    enumerated jointly (3 when the pair shares an endpoint), so shared
    endpoints need no special closed form.
    """
    p = [Fraction(x) for x in weights.probabilities]
    k = weights.k
    pr_disjoint = _match_probability_disjoint(p, k)
    pr_shared = _match_probability_shared(p, k)
    total = Fraction(0)
    for e, f, mult in drawing.crossings:
        shared = set(drawing.graph.edges[e]) & set(drawing.graph.edges[f])
        total += mult * (pr_shared if shared else pr_disjoint)
    return total


def exact_survival_variance(drawing: Drawing, weights: WeightVector) -> Fraction:
    """Exact variance of the total of surviving crossings.

    Pairs of crossing pairs with disjoint endpoint sets factorize; the rest
    are enumerated jointly over their at most 7 distinct endpoints.
    """
    p = [Fraction(x) for x in weights.probabilities]
    k = weights.k
    mean = exact_survival_expectation(drawing, weights)
    pr_disjoint = _match_probability_disjoint(p, k)
    pr_shared = _match_probability_shared(p, k)
    edges = drawing.graph.edges
    second = Fraction(0)
    cross = drawing.crossings
    for a in range(len(cross)):
        e1, f1, m1 = cross[a]
        s1 = set(edges[e1]) | set(edges[f1])
        pr1 = pr_shared if len(s1) == 3 else pr_disjoint
        second += m1 * m1 * pr1
        for b in range(a + 1, len(cross)):
            e2, f2, m2 = cross[b]
            s2 = set(edges[e2]) | set(edges[f2])
            if s1 & s2:
                pr_both = _joint_match_probability(p, k, edges[e1], edges[f1],
                                                   edges[e2], edges[f2])
            else:
                pr2 = pr_shared if len(s2) == 3 else pr_disjoint
                pr_both = pr1 * pr2
            second += 2 * m1 * m2 * pr_both
    return second - mean * mean


def exact_g_distribution(drawing: Drawing, weights: WeightVector, edge: int,
                         conditioning: tuple[int, int] | None = None) -> dict[int, Fraction]:
    """Exact distribution of the surviving load of one edge.

    With ``conditioning`` = (i, j) the edge's own endpoint labels are fixed;
    otherwise they are averaged over. Enumerates all label tuples of the
    involved free vertices jointly, so partner edges sharing endpoints are
    handled exactly.
    """
    g = drawing.graph
    u, v = g.edges[edge]
    p = [Fraction(x) for x in weights.probabilities]
    k = weights.k
    partners = [(f if e == edge else e, mult)
                for e, f, mult in drawing.crossings if edge in (e, f)]
    involved: set[int] = {u, v}
    for f, _ in partners:
        involved.update(g.edges[f])
    fixed: dict[int, int] = {}
    if conditioning is not None:
        i, j = conditioning
        if not (0 <= i < k and 0 <= j < k):
            raise ValueError("conditioning labels out of range")
        fixed = {u: i, v: j}
    free = sorted(involved - set(fixed))
    states = k ** len(free)
    if states > _DIST_STATE_CAP:
        raise ValueError(f"free-endpoint state space {states} exceeds cap {_DIST_STATE_CAP}")
    dist: dict[int, Fraction] = {}
    for combo in itertools.product(range(k), repeat=len(free)):
        assignment = dict(zip(free, combo))
        assignment.update(fixed)
        prob = Fraction(1)
        for label in combo:
            prob *= p[label]
        own = _type_of(assignment[u], assignment[v])
        load = 0
        for f, mult in partners:
            a, b = g.edges[f]
            if _type_of(assignment[a], assignment[b]) == own:
                load += mult
        dist[load] = dist.get(load, Fraction(0)) + prob
    return dist


def exact_conditional_survival(drawing: Drawing, weights: WeightVector, edge: int,
                               i: int, j: int) -> ConditionalSurvival:
    """Conditioned on the edge's endpoints having labels (i, j): exact
    per-partner survival probabilities and the distribution of its load.

    For a vertex-disjoint partner the survival probability is p_i^2 when
    i == j and 2 p_i p_j otherwise.
    """
    g = drawing.graph
    u, v = g.edges[edge]
    p = [Fraction(x) for x in weights.probabilities]
    k = weights.k
    own = _type_of(i, j)
    partner_probs: dict[int, Fraction] = {}
    for e, f, _ in drawing.crossings:
        if edge not in (e, f):
            continue
        other = f if e == edge else e
        a, b = g.edges[other]
        fixed = {u: i, v: j}
        free = [w for w in (a, b) if w not in fixed]
        prob = Fraction(0)
        for combo in itertools.product(range(k), repeat=len(free)):
            assignment = dict(zip(free, combo))
            assignment.update(fixed)
            if _type_of(assignment[a], assignment[b]) == own:
                weight = Fraction(1)
                for label in combo:
                    weight *= p[label]
                prob += weight
        partner_probs[other] = prob
    dist = exact_g_distribution(drawing, weights, edge, conditioning=(i, j))
    return ConditionalSurvival(partner_probs, dist)


def dependency_scopes(drawing: Drawing) -> ScopeReport:
    """Dependency degrees of the per-edge overload events.

    The scope of an edge is the set of endpoints of its crossing partners,
    minus its own endpoints (whose labels the events are conditioned on).
    Two events depend on each other when the edges share an endpoint or
    their scopes intersect.
    """
    g = drawing.graph
    m = g.m
    scopes: list[set[int]] = [set() for _ in range(m)]
    for e, f, _ in drawing.crossings:
        scopes[e].update(g.edges[f])
        scopes[f].update(g.edges[e])
    frozen = []
    for e in range(m):
        scopes[e] -= set(g.edges[e])
        frozen.append(frozenset(scopes[e]))
    counts = []
    for e in range(m):
        ue, ve = g.edges[e]
        c = 0
        for f in range(m):
            if f == e:
                continue
            uf, vf = g.edges[f]
            if ue in (uf, vf) or ve in (uf, vf) or (frozen[e] & frozen[f]):
                c += 1
        counts.append(c)
    return ScopeReport(tuple(counts), max(counts, default=0), tuple(frozen))


def _type_of(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


def _match_probability_disjoint(p: list[Fraction], k: int) -> Fraction:
    """Pr[two vertex-disjoint edges get equal types] = sum of squared type
    probabilities."""
    total = Fraction(0)
    for i in range(k):
        total += (p[i] * p[i]) ** 2
        for j in range(i + 1, k):
            total += (2 * p[i] * p[j]) ** 2
    return total


def _match_probability_shared(p: list[Fraction], k: int) -> Fraction:
    """Pr[equal types] for edges (a, b) and (b, c) sharing one endpoint."""
    total = Fraction(0)
    for a in range(k):
        for b in range(k):
            for c in range(k):
                if _type_of(a, b) == _type_of(b, c):
                    total += p[a] * p[b] * p[c]
    return total


def _joint_match_probability(p: list[Fraction], k: int,
                             e1: tuple[int, int], f1: tuple[int, int],
                             e2: tuple[int, int], f2: tuple[int, int]) -> Fraction:
    verts = sorted(set(e1) | set(f1) | set(e2) | set(f2))
    total = Fraction(0)
    for combo in itertools.product(range(k), repeat=len(verts)):
        lab = dict(zip(verts, combo))
        if (_type_of(lab[e1[0]], lab[e1[1]]) == _type_of(lab[f1[0]], lab[f1[1]])
                and _type_of(lab[e2[0]], lab[e2[1]]) == _type_of(lab[f2[0]], lab[f2[1]])):
            weight = Fraction(1)
            for label in combo:
                weight *= p[label]
            total += weight
    return total


def _indices_to_labels(idx: np.ndarray, positions: int, k: int) -> np.ndarray:
    """Decode enumeration indices to label rows; index order is lexicographic
    with position 0 most significant."""
    out = np.empty((idx.size, positions), dtype=np.int64)
    rest = idx.copy()
    for pos in range(positions - 1, -1, -1):
        out[:, pos] = rest % k
        rest //= k
    return out


def _chunk_evaluator(drawing: Drawing, k: int):
    m = drawing.graph.m
    eu = np.array([u for u, _ in drawing.graph.edges], dtype=np.int64)
    ev = np.array([v for _, v in drawing.graph.edges], dtype=np.int64)
    ce = np.array([c[0] for c in drawing.crossings], dtype=np.int64)
    cf = np.array([c[1] for c in drawing.crossings], dtype=np.int64)
    mult = np.array([c[2] for c in drawing.crossings], dtype=np.int64)

    def evaluate(labels: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        rows = labels.shape[0]
        if ce.size == 0 or m == 0:
            zero = np.zeros(rows, dtype=np.int64)
            return zero, zero.copy()
        lu = labels[:, eu]
        lv = labels[:, ev]
        type_id = np.minimum(lu, lv) * k + np.maximum(lu, lv)
        match = type_id[:, ce] == type_id[:, cf]
        sum_g = match @ mult
        g = np.zeros((rows, m), dtype=np.int64)
        for pidx in range(ce.size):
            col = match[:, pidx] * mult[pidx]
            g[:, ce[pidx]] += col
            g[:, cf[pidx]] += col
        return g.max(axis=1), sum_g

    return evaluate
