from __future__ import annotations

import math

import pytest

from kplanar.bounds import (GapResult, HypothesisUnmet, LllInstance, RegimeParams,
                            TailBoundInputs, beta_threshold_irregular,
                            beta_threshold_regular, combined_feasibility_gap,
                            crossing_lower_bound, dependency_degree_bound,
                            hoeffding_tail, kn_lower_bound, lcr_lower_bound,
                            lll_check, mcdiarmid_edge_tail,
                            overload_free_probability_bound)


def test_hoeffding_worked_value():
    assert hoeffding_tail(TailBoundInputs.uniform(10, 100, 1)) == pytest.approx(math.exp(-2))


def test_hoeffding_vacuous_deviation():
    assert hoeffding_tail(TailBoundInputs.uniform(1e-9, 10, 1)) == pytest.approx(1.0)


def test_hoeffding_width_doubling_identity():
    # Doubling every width quarters the exponent: bound(t, 2w)^4 == bound(t, w).
    for t in (0.5, 3.0, 11.0):
        b1 = hoeffding_tail(TailBoundInputs.uniform(t, 20, 1.0))
        b2 = hoeffding_tail(TailBoundInputs.uniform(t, 20, 2.0))
        assert b2 ** 4 == pytest.approx(b1, rel=1e-12)


def test_hoeffding_zero_widths_rejected():
    with pytest.raises(ValueError, match="zero"):
        hoeffding_tail(TailBoundInputs.uniform(1, 5, 0.0))
    with pytest.raises(ValueError, match="positive"):
        TailBoundInputs.uniform(0, 5, 1.0)


def test_mcdiarmid_worked_value():
    assert mcdiarmid_edge_tail(0.1, 1000, 10) == pytest.approx(math.exp(-2))
    assert mcdiarmid_edge_tail(0.0, 7, 3) == 1.0


def test_mcdiarmid_monotonicity():
    for delta in (1, 2, 5, 11):
        values = [mcdiarmid_edge_tail(0.05, L, delta) for L in range(1, 200, 13)]
        assert values == sorted(values, reverse=True)
    for L in (1, 10, 100):
        values = [mcdiarmid_edge_tail(0.05, L, d) for d in range(1, 40, 3)]
        assert values == sorted(values)


def test_lll_worked_value():
    holds, bound = lll_check(LllInstance(q=0.01, dep_degree=30, n_events=100))
    assert holds
    assert bound == pytest.approx((30 / 31) ** 100)
    assert bound == pytest.approx(0.0376, abs=2e-4)


def test_lll_edge_cases():
    assert not lll_check(LllInstance(q=1.0, dep_degree=0, n_events=1)).holds
    holds, bound = lll_check(LllInstance(q=0.0, dep_degree=5, n_events=10))
    assert holds and bound == pytest.approx((5 / 6) ** 10)
    # The e-variant is slightly stronger than the default constant 3.
    inst = LllInstance(q=0.12, dep_degree=2, n_events=4)
    assert not lll_check(inst).holds
    assert lll_check(inst, constant=math.e).holds


def test_crossing_lower_bound():
    assert crossing_lower_bound(100, 10) == pytest.approx(1e6 / 2900)
    assert isinstance(crossing_lower_bound(100, 20), HypothesisUnmet)
    # K_15: 105 > 104.25, just over the hypothesis line.
    assert crossing_lower_bound(105, 15) == pytest.approx(105 ** 3 / (29 * 225))


def test_lcr_lower_bound():
    assert lcr_lower_bound(100, 10) == pytest.approx(20000 / 2900)
    assert lcr_lower_bound(700, 100) == pytest.approx(2 * 490000 / 290000)
    assert isinstance(lcr_lower_bound(100, 20), HypothesisUnmet)


def test_beta_threshold_regular():
    assert beta_threshold_regular(1.0, 0.1) == pytest.approx(1000 * 1e4 * math.log(10) ** 2)
    assert beta_threshold_regular(math.e, 1 / math.e) == pytest.approx(4000 * math.e ** 6)
    values = [beta_threshold_regular(a, 0.05) for a in (1.0, 1.5, 2.0, 4.0, 8.0)]
    assert values == sorted(values)
    assert isinstance(beta_threshold_regular(2.0, 1.0), HypothesisUnmet)
    with pytest.raises(ValueError):
        beta_threshold_regular(0.5, 0.1)


def test_beta_threshold_irregular():
    assert beta_threshold_irregular(0.1) == pytest.approx(1000 * math.log(10))
    assert beta_threshold_irregular(1 / math.e) == pytest.approx(10 * math.e ** 2)
    assert beta_threshold_irregular(0.999999) < 1e-4
    with pytest.raises(ValueError):
        beta_threshold_irregular(1.0)


def test_log_base_knob():
    natural = beta_threshold_irregular(0.1)
    base2 = beta_threshold_irregular(0.1, log_base=2.0)
    assert base2 == pytest.approx(natural / math.log(2))


def test_dependency_degree_bound():
    assert dependency_degree_bound(4, 5) == 170
    assert dependency_degree_bound(0, 7) == 14


def test_overload_free_probability():
    assert overload_free_probability_bound(4, 5, 15) == pytest.approx((170 / 171) ** 15)
    assert overload_free_probability_bound(4, 5, 0) == 1.0
    assert overload_free_probability_bound(1, 1, 1) == pytest.approx(0.8)


def test_kn_lower_bound():
    value, floor = kn_lower_bound(100, 2)
    assert value == pytest.approx(0.5 * 4950 ** 2 / (29 * 1e4))
    assert floor == pytest.approx(9 / 232)
    assert kn_lower_bound(1000, 1).ratio_floor == pytest.approx(9 / 58)
    assert isinstance(kn_lower_bound(10, 4).value, HypothesisUnmet)


def test_combined_feasibility_gap():
    gap = combined_feasibility_gap(RegimeParams(
        alpha=1.0, epsilon=0.1, k=2, L=1000, Delta=250, m=10 ** 4, n=100, C=10 ** 6))
    assert gap.holds
    assert gap == GapResult(gap.lhs, gap.rhs, True)
    zero_c = combined_feasibility_gap(RegimeParams(
        alpha=1.0, epsilon=0.1, k=2, L=10, Delta=5, m=100, n=20, C=0))
    assert not zero_c.holds


def test_gap_formulations_agree_on_grid():
    import itertools
    cases = itertools.product((10, 100, 1000), (10, 50), (2, 9), (1, 30), (0.01, 0.2),
                              (0, 10, 10 ** 5))
    count = 0
    for m, n, delta, L, eps, C in cases:
        gap = combined_feasibility_gap(RegimeParams(
            alpha=1.0, epsilon=eps, k=2, L=L, Delta=delta, m=m, n=n, C=C))
        assert gap.holds == (C * C > m * n * delta / (2 * eps * eps))
        count += 1
    assert count >= 200


def test_calculators_are_pure():
    a = beta_threshold_regular(2.5, 0.07)
    b = beta_threshold_regular(2.5, 0.07)
    assert a == b
    assert mcdiarmid_edge_tail(0.03, 123, 7) == mcdiarmid_edge_tail(0.03, 123, 7)


def test_regime_params_validation():
    with pytest.raises(ValueError, match="alpha"):
        RegimeParams(alpha=0.5, epsilon=0.1, k=2, L=1, Delta=1, m=1, n=1, C=1)
