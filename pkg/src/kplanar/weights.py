"""Partition weight vectors and the minimax survival value.

For weights p_1..p_k, a crossing between vertex-disjoint edges survives the
random vertex partition with conditional probability p_i^2 (equal endpoint
labels) or 2*p_i*p_j (distinct labels); ``gamma`` is the worst case over
label pairs. The closed-form optimum is 4/9 at (2/3, 1/3) for k=2 and
2/k^2 at uniform weights for k>=3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

Number = Fraction | float


def gamma_of(probabilities: Sequence[Number]) -> Number:
    """max over label pairs of {p_i^2, 2 p_i p_j}; reduces to the top two weights."""
    top = sorted(probabilities, reverse=True)
    p1 = top[0]
    if len(top) == 1:
        return p1 * p1
    return max(p1 * p1, 2 * p1 * top[1])


@dataclass(frozen=True)
class WeightVector:
    k: int
    probabilities: tuple[Number, ...]
    gamma: Number

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if len(self.probabilities) != self.k:
            raise ValueError(f"expected {self.k} probabilities, got {len(self.probabilities)}")
        if any(p < 0 or p > 1 for p in self.probabilities):
            raise ValueError("probabilities must lie in [0, 1]")
        total = sum(self.probabilities)
        if isinstance(total, Fraction):
            if total != 1:
                raise ValueError(f"probabilities sum to {total}, expected exactly 1")
        elif abs(total - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {total!r}, expected 1 within 1e-12")
        expected = gamma_of(self.probabilities)
        if isinstance(expected, Fraction) and isinstance(self.gamma, Fraction):
            if expected != self.gamma:
                raise ValueError(f"stored gamma {self.gamma} != recomputed {expected}")
        elif abs(float(expected) - float(self.gamma)) > 1e-12:
            raise ValueError(f"stored gamma {self.gamma!r} != recomputed {expected!r}")

    @classmethod
    def from_probabilities(cls, probabilities: Sequence[Number]) -> "WeightVector":
        probs = tuple(probabilities)
        return cls(len(probs), probs, gamma_of(probs))

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(p) for p in self.probabilities)


def optimal_weights(k: int) -> WeightVector:
    """Minimax-optimal weights, exact rationals.

    k=1 -> (1) with gamma 1; k=2 -> (2/3, 1/3) with gamma 4/9;
    k>=3 -> uniform with gamma 2/k^2.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        probs: tuple[Fraction, ...] = (Fraction(1),)
    elif k == 2:
        probs = (Fraction(2, 3), Fraction(1, 3))
    else:
        probs = tuple(Fraction(1, k) for _ in range(k))
    return WeightVector.from_probabilities(probs)


def uniform_weights(k: int) -> WeightVector:
    if k < 1:
        raise ValueError("k must be at least 1")
    return WeightVector.from_probabilities(tuple(Fraction(1, k) for _ in range(k)))


def minimax_weights_grid(k: int, step: float) -> WeightVector:
    """Independent numerical oracle for the minimax value.

    Exhaustive search over the descending-sorted probability simplex
    discretized at ``step`` (lexicographically smallest vector wins ties),
    then one local refinement pass. The refinement grid is step/1000: at
    step/100 the kink of the minimax surface leaves an error near 4e-6 at
    the k=2 optimum, which would miss the 1e-6 agreement target.

    The objective max{p_i^2, 2 p_i p_j} depends only on the two largest
    weights, so the simplex scan reduces exactly to a scan over (p_1, p_2)
    pairs with a feasibility test for the remaining k-2 weights.
    """
    if not 2 <= k <= 6:
        raise ValueError("grid search supports k in 2..6")
    if step > 1e-2 + 1e-15:
        raise ValueError("step too coarse; need step <= 1e-2")
    units = round(1 / step)
    best = _scan_top_two(k, units)
    fine = units * 1000
    window = 1000
    best = _scan_top_two(k, fine,
                         a_range=(best[1] * 1000 - window, best[1] * 1000 + window),
                         b_range=(best[2] * 1000 - window, best[2] * 1000 + window))
    _, a, b = best
    tail = _balanced_tail(fine - a - b, k - 2)
    probs = tuple(x / fine for x in (a, b, *tail))
    return WeightVector.from_probabilities(probs)


def _scan_top_two(k: int, units: int,
                  a_range: tuple[int, int] | None = None,
                  b_range: tuple[int, int] | None = None) -> tuple[int, int, int]:
    """Best (objective_numerator, a, b) over descending grid vectors with top two (a, b).

    Feasibility of the k-2 tail weights: ceil((units-a)/(k-1)) <= b <= min(a, units-a).
    Objective numerator is max(a^2, 2ab) with implicit denominator units^2;
    iteration order makes the first minimum the lexicographically smallest vector.
    """
    a_lo = -(-units // k)  # p_1 >= 1/k on any simplex point
    a_hi = units
    if a_range is not None:
        a_lo, a_hi = max(a_lo, a_range[0]), min(a_hi, a_range[1])
    best: tuple[int, int, int] | None = None
    for a in range(a_lo, a_hi + 1):
        rest = units - a
        lo = -(-rest // (k - 1))
        hi = min(a, rest)
        if b_range is not None:
            lo, hi = max(lo, b_range[0]), min(hi, b_range[1])
        if lo > hi:
            continue
        b_vals = np.arange(lo, hi + 1, dtype=np.int64)
        obj = np.maximum(a * a, 2 * a * b_vals)
        i = int(np.argmin(obj))
        cand = (int(obj[i]), a, int(b_vals[i]))
        if best is None or cand[0] < best[0]:
            best = cand
    if best is None:
        raise ValueError("empty search window")
    return best


def _balanced_tail(total: int, slots: int) -> list[int]:
    """Lexicographically smallest descending completion with the given sum."""
    if slots == 0:
        if total != 0:
            raise ValueError("infeasible tail")
        return []
    q, r = divmod(total, slots)
    return [q + 1] * r + [q] * (slots - r)
