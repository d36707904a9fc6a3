"""Monte Carlo harness: repeated random labelings of a fixed drawing, with
empirical statistics lined up against their exact values and tail bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import floor

import numpy as np

from .bounds import mcdiarmid_edge_tail
from .graph import Drawing
from .oracle import exact_survival_expectation
from .weights import WeightVector

_TRIAL_CHUNK = 8192
_EXACT_PAIR_CAP = 4000


@dataclass
class MonteCarloSummary:
    trials: int
    k: int
    seed: int
    epsilon: float
    weights: tuple[float, ...]
    mean_total: float
    var_total: float
    exact_mean_total: Fraction | None
    z_mean: float | None
    edge_mean_g: tuple[float, ...]
    edge_tail: tuple[float, ...]
    tail_cutoff: int
    tail_bound: float | None
    tail_z: tuple[float, ...] | None


def run_montecarlo(drawing: Drawing, weights: WeightVector, epsilon: float,
                   trials: int, seed: int) -> MonteCarloSummary:
    """Sample ``trials`` independent labelings and summarize survivals.

    Reports the empirical mean total of surviving crossings with a z-score
    against the exact expectation (when the drawing is small enough to
    enumerate), and the per-edge empirical overload rate
    Pr[g(e) > (gamma + eps) L] next to its concentration bound.
    """
    if trials < 100:
        raise ValueError("need at least 100 trials")
    graph = drawing.graph
    n, m = graph.n, graph.m
    k = weights.k
    L = drawing.local_crossing_number
    delta = graph.max_degree
    cutoff = int(floor((Fraction(weights.gamma) + Fraction(epsilon)) * L))

    rng = np.random.default_rng(np.random.SeedSequence(seed))
    p = np.array([float(x) for x in weights.probabilities])
    p /= p.sum()
    eu = np.array([u for u, _ in graph.edges], dtype=np.int64) if m else np.zeros(0, np.int64)
    ev = np.array([v for _, v in graph.edges], dtype=np.int64) if m else np.zeros(0, np.int64)
    ce = np.array([c[0] for c in drawing.crossings], dtype=np.int64)
    cf = np.array([c[1] for c in drawing.crossings], dtype=np.int64)
    mult = np.array([c[2] for c in drawing.crossings], dtype=np.int64)

    sum_x = 0.0
    sum_x2 = 0.0
    g_sum = np.zeros(m, dtype=np.int64)
    exceed = np.zeros(m, dtype=np.int64)
    done = 0
    while done < trials:
        rows = min(_TRIAL_CHUNK, trials - done)
        labels = rng.choice(k, size=(rows, n), p=p)
        if ce.size:
            lu = labels[:, eu]
            lv = labels[:, ev]
            type_id = np.minimum(lu, lv) * k + np.maximum(lu, lv)
            match = type_id[:, ce] == type_id[:, cf]
            totals = match @ mult
            g = np.zeros((rows, m), dtype=np.int64)
            for pidx in range(ce.size):
                col = match[:, pidx] * mult[pidx]
                g[:, ce[pidx]] += col
                g[:, cf[pidx]] += col
            g_sum += g.sum(axis=0)
            exceed += (g > cutoff).sum(axis=0)
        else:
            totals = np.zeros(rows, dtype=np.int64)
        sum_x += float(totals.sum())
        sum_x2 += float((totals.astype(np.float64) ** 2).sum())
        done += rows

    mean = sum_x / trials
    var = max(0.0, (sum_x2 - sum_x * sum_x / trials) / (trials - 1))

    exact_mean: Fraction | None = None
    z_mean: float | None = None
    if len(drawing.crossings) <= _EXACT_PAIR_CAP:
        exact_mean = exact_survival_expectation(drawing, weights)
        if var > 0:
            z_mean = (mean - float(exact_mean)) / math.sqrt(var / trials)
        else:
            z_mean = 0.0 if mean == float(exact_mean) else math.inf

    tail = tuple(float(x) / trials for x in exceed)
    bound = mcdiarmid_edge_tail(epsilon, L, delta) if L >= 1 and delta >= 1 else None
    tail_z = None
    if bound is not None:
        se = math.sqrt(max(bound * (1.0 - bound), 1.0 / trials) / trials)
        tail_z = tuple((t - bound) / se for t in tail)
    return MonteCarloSummary(
        trials=trials, k=k, seed=seed, epsilon=float(epsilon),
        weights=tuple(float(x) for x in weights.probabilities),
        mean_total=mean, var_total=var,
        exact_mean_total=exact_mean, z_mean=z_mean,
        edge_mean_g=tuple(float(x) / trials for x in g_sum),
        edge_tail=tail, tail_cutoff=cutoff, tail_bound=bound, tail_z=tail_z)
