from __future__ import annotations

from fractions import Fraction

import pytest

from kplanar.weights import (WeightVector, gamma_of, minimax_weights_grid,
                             optimal_weights, uniform_weights)

CLOSED_FORM = {2: Fraction(4, 9), 3: Fraction(2, 9), 4: Fraction(1, 8),
               5: Fraction(2, 25), 6: Fraction(1, 18)}


def test_optimal_weights_closed_forms():
    assert optimal_weights(1).probabilities == (Fraction(1),)
    assert optimal_weights(1).gamma == 1
    w2 = optimal_weights(2)
    assert w2.probabilities == (Fraction(2, 3), Fraction(1, 3))
    assert w2.gamma == Fraction(4, 9)
    for k in range(3, 7):
        w = optimal_weights(k)
        assert w.probabilities == tuple(Fraction(1, k) for _ in range(k))
        assert w.gamma == Fraction(2, k * k) == CLOSED_FORM[k]


def test_k_zero_rejected():
    with pytest.raises(ValueError):
        optimal_weights(0)
    with pytest.raises(ValueError):
        uniform_weights(0)


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_grid_matches_closed_form(k):
    w = minimax_weights_grid(k, 1e-3)
    assert abs(float(w.gamma) - float(CLOSED_FORM[k])) <= 1e-6
    if k == 2:
        assert abs(w.probabilities[0] - 2 / 3) <= 1e-3
        assert abs(w.probabilities[1] - 1 / 3) <= 1e-3


def test_grid_preconditions():
    with pytest.raises(ValueError, match="2..6"):
        minimax_weights_grid(1, 1e-3)
    with pytest.raises(ValueError, match="2..6"):
        minimax_weights_grid(7, 1e-3)
    with pytest.raises(ValueError, match="too coarse"):
        minimax_weights_grid(2, 0.05)


def test_gamma_of_uses_top_two():
    assert gamma_of([Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)]) == Fraction(1, 4)
    assert gamma_of([1.0]) == 1.0


def test_weight_vector_validation():
    with pytest.raises(ValueError, match="sum"):
        WeightVector(2, (Fraction(1, 2), Fraction(1, 3)), Fraction(4, 9))
    with pytest.raises(ValueError, match="gamma"):
        WeightVector(2, (Fraction(2, 3), Fraction(1, 3)), Fraction(1, 2))
    with pytest.raises(ValueError, match="range|\\[0, 1\\]"):
        WeightVector.from_probabilities((Fraction(3, 2), Fraction(-1, 2)))
    # Float mode tolerates rounding at the 1e-12 scale.
    w = WeightVector.from_probabilities((0.6, 0.4))
    assert w.gamma == pytest.approx(0.48)


def test_grid_returns_probability_vector():
    w = minimax_weights_grid(4, 1e-2)
    assert len(w.probabilities) == 4
    assert abs(sum(w.probabilities) - 1) < 1e-12
    assert sorted(w.probabilities, reverse=True) == list(w.probabilities)
