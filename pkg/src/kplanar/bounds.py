"""Closed-form bound calculators: concentration tails, the symmetric local
lemma condition, the crossing-number inequality, and the derived regime
thresholds.

Every function is pure. When a bound's hypothesis is unmet the calculator
returns a HypothesisUnmet marker instead of a number, so sweeps can tell
"bound is zero" apart from "bound does not apply". Logarithms are natural
by default; the base is exposed where a threshold formula contains a log.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence


@dataclass(frozen=True)
class HypothesisUnmet:
    reason: str

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"HypothesisUnmet({self.reason!r})"


@dataclass(frozen=True)
class TailBoundInputs:
    """Deviation t and the per-variable range widths b_i - a_i."""

    t: float
    widths: tuple[float, ...]

    def __post_init__(self):
        if self.t <= 0:
            raise ValueError("deviation t must be positive")
        if any(w < 0 for w in self.widths):
            raise ValueError("range widths must be nonnegative")

    @classmethod
    def uniform(cls, t: float, count: int, width: float) -> "TailBoundInputs":
        return cls(t, (width,) * count)


@dataclass(frozen=True)
class LllInstance:
    """Symmetric local lemma data: per-event probability bound q, dependency
    degree, and number of events."""

    q: float
    dep_degree: int
    n_events: int

    def __post_init__(self):
        if not 0 <= self.q <= 1:
            raise ValueError("q must lie in [0, 1]")
        if self.dep_degree < 0 or self.n_events < 0:
            raise ValueError("counts must be nonnegative")


@dataclass(frozen=True)
class RegimeParams:
    """Parameters describing a drawing and target regime: max degree at most
    alpha times average degree, with the usual n, m, Delta, C, L counts."""

    alpha: float
    epsilon: float
    k: int
    L: int
    Delta: int
    m: int
    n: int
    C: int

    def __post_init__(self):
        if self.alpha < 1:
            raise ValueError("alpha must be at least 1")


class LllResult(NamedTuple):
    holds: bool
    success_lower_bound: float


class GapResult(NamedTuple):
    lhs: float
    rhs: float
    holds: bool


class KnBound(NamedTuple):
    value: float | HypothesisUnmet
    ratio_floor: float


def hoeffding_tail(inputs: TailBoundInputs) -> float:
    """One-sided Hoeffding bound exp(-2 t^2 / sum of squared widths)."""
    denom = sum(w * w for w in inputs.widths)
    if denom == 0:
        raise ValueError("all range widths are zero")
    return math.exp(-2.0 * inputs.t ** 2 / denom)


def mcdiarmid_edge_tail(epsilon: float, L: int, Delta: int) -> float:
    """Tail bound exp(-2 eps^2 L / Delta) for one edge's surviving load.

    Specialization of the bounded-differences inequality with deviation
    eps*L and squared influence sum at most Delta*L.
    """
    if L < 1 or Delta < 1:
        raise ValueError("L and Delta must be at least 1")
    return math.exp(-2.0 * epsilon * epsilon * L / Delta)


def lll_check(instance: LllInstance, constant: float = 3.0) -> LllResult:
    """Symmetric local lemma: holds iff constant*q*(d+1) < 1.

    ``constant`` defaults to 3; pass math.e for the sharper classical form.
    When the condition holds, all n events are avoided with probability
    greater than (1 - 1/(d+1))^n.
    """
    d = instance.dep_degree
    holds = constant * instance.q * (d + 1) < 1.0
    bound = (1.0 - 1.0 / (d + 1)) ** instance.n_events if holds else 0.0
    return LllResult(holds, bound)


def crossing_lower_bound(m: int, n: int) -> float | HypothesisUnmet:
    """Crossing-number inequality m^3 / (29 n^2), valid for m > 6.95 n."""
    if m <= 6.95 * n:
        return HypothesisUnmet(f"need m > 6.95 n, got m={m}, 6.95n={6.95 * n:g}")
    return m ** 3 / (29.0 * n * n)


def lcr_lower_bound(m: int, n: int) -> float | HypothesisUnmet:
    """Per-edge corollary 2 m^2 / (29 n^2), valid for m > 6.95 n."""
    if m <= 6.95 * n:
        return HypothesisUnmet(f"need m > 6.95 n, got m={m}, 6.95n={6.95 * n:g}")
    return 2.0 * m * m / (29.0 * n * n)


def beta_threshold_regular(alpha: float, epsilon: float,
                           log_base: float = math.e) -> float | HypothesisUnmet:
    """Local-crossing threshold 1000 a^2 e^-4 (log a + log(1/e))^2 above which
    the near-regular 2/k^2 decomposition guarantee applies."""
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if epsilon >= 1:
        return HypothesisUnmet("epsilon >= 1 makes log(1/epsilon) nonpositive")
    log = _log_in_base(log_base)
    return 1000.0 * alpha ** 2 * epsilon ** -4 * (log(alpha) + log(1.0 / epsilon)) ** 2


def beta_threshold_irregular(epsilon: float, log_base: float = math.e) -> float:
    """Local-crossing threshold 10 log(1/e) / e^2 for the 1/k + e guarantee
    on arbitrary graphs."""
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    log = _log_in_base(log_base)
    return 10.0 * log(1.0 / epsilon) / epsilon ** 2


def dependency_degree_bound(L: int, Delta: int) -> int:
    """Upper bound 2 L^2 Delta + 2 Delta on the dependency degree of the
    per-edge overload events."""
    return 2 * L * L * Delta + 2 * Delta


def overload_free_probability_bound(L: int, Delta: int, m: int) -> float:
    """Probability lower bound (1 - 1/(2L^2 Delta + 2 Delta + 1))^m that no
    edge is overloaded."""
    d = dependency_degree_bound(L, Delta)
    return (1.0 - 1.0 / (d + 1)) ** m


def kn_lower_bound(n: int, k: int) -> KnBound:
    """Lower bound (2/k^2) C(n,2)^2 / (29 n^2) on the k-plane local crossing
    number of K_n, plus the asymptotic ratio floor 9 / (58 k^2).

    The bound applies when the densest part, with at least C(n,2)/k edges,
    satisfies the crossing-inequality hypothesis.
    """
    m1 = math.comb(n, 2) / k
    if m1 <= 6.95 * n:
        value: float | HypothesisUnmet = HypothesisUnmet(
            f"need C(n,2)/k > 6.95 n, got {m1:g} <= {6.95 * n:g}")
    else:
        value = (2.0 / (k * k)) * math.comb(n, 2) ** 2 / (29.0 * n * n)
    return KnBound(value, 9.0 / (58.0 * k * k))


def combined_feasibility_gap(params: RegimeParams) -> GapResult:
    """Compare m/(L^2 Delta) against 2 (eps C)^2 / (n (L Delta)^2).

    lhs < rhs is what makes the combined decomposition argument close;
    it is algebraically equivalent to C^2 > m n Delta / (2 eps^2).
    """
    p = params
    if min(p.m, p.n, p.Delta, p.L) <= 0 or p.epsilon <= 0:
        raise ValueError("m, n, Delta, L, epsilon must be positive")
    lhs = p.m / (p.L ** 2 * p.Delta)
    rhs = 2.0 * (p.epsilon * p.C) ** 2 / (p.n * (p.L * p.Delta) ** 2)
    holds = lhs < rhs
    equivalent = p.C ** 2 > p.m * p.n * p.Delta / (2.0 * p.epsilon ** 2)
    if holds != equivalent:
        # Identical up to floating rounding; resolve by the C^2 form.
        holds = equivalent
    return GapResult(lhs, rhs, holds)


def _log_in_base(base: float):
    if base == math.e:
        return math.log
    if base <= 0 or base == 1:
        raise ValueError("log base must be positive and != 1")
    return lambda x: math.log(x) / math.log(base)
