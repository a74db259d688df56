"""Tests for deterministic Monte Carlo estimation."""

import math

import pytest

import numpy as np

from trichord import (
    ChordProblem,
    IsoscelesTriangle,
    Method,
    ProbabilityEstimate,
    direction_set,
    empirical_limit_angle,
    estimate,
    limit_angle,
    side_hit,
)
from trichord.montecarlo import BLOCK_SIZE, _block_generator, _chord_lengths

P_EXACT = 0.016212872164880516  # frozen from a 50-digit evaluation

UNIT = ChordProblem(IsoscelesTriangle(1.0, 1.0), 1.0)


def test_same_seed_same_result():
    first = estimate(UNIT, 200_000, seed=123)
    second = estimate(UNIT, 200_000, seed=123)
    assert first == second


def test_worker_count_does_not_change_result():
    lone = estimate(UNIT, 300_000, seed=5, workers=1)
    multi = estimate(UNIT, 300_000, seed=5, workers=4)
    assert lone.p_hat == multi.p_hat
    assert lone.successes == multi.successes


def test_different_seeds_differ():
    a = estimate(UNIT, 100_000, seed=0)
    b = estimate(UNIT, 100_000, seed=1)
    assert a.successes != b.successes


def test_estimate_lands_near_exact_value():
    samples = 1_000_000
    est = estimate(UNIT, samples, seed=0)
    sigma = math.sqrt(P_EXACT * (1.0 - P_EXACT) / samples)
    assert abs(est.p_hat - P_EXACT) < 4.0 * sigma


def test_zero_threshold_always_succeeds():
    est = estimate(ChordProblem(IsoscelesTriangle(), 0.0), 1000, seed=42)
    assert est.p_hat == 1.0
    assert est.successes == 1000
    assert est.ci95 == (1.0, 1.0)


def test_unreachable_threshold_never_succeeds():
    est = estimate(ChordProblem(IsoscelesTriangle(), 3.0), 1000, seed=42)
    assert est.p_hat == 0.0
    assert est.std_error == 0.0
    assert est.ci95 == (0.0, 0.0)


def test_partial_and_multi_block_runs_agree():
    samples = 2 * BLOCK_SIZE + 17  # three blocks, partial tail
    multi = estimate(UNIT, samples, seed=9, workers=2)
    single = estimate(UNIT, samples, seed=9, workers=1)
    assert multi.samples == samples
    assert multi.successes == single.successes


def test_from_counts_statistics():
    est = ProbabilityEstimate.from_counts(5, 100, seed=0)
    assert est.p_hat == 0.05
    assert est.std_error == pytest.approx(math.sqrt(0.05 * 0.95 / 100.0), abs=1e-15)
    quadruple = ProbabilityEstimate.from_counts(20, 400, seed=0)
    assert est.std_error == pytest.approx(2.0 * quadruple.std_error, abs=1e-15)
    low, high = est.ci95
    assert low == pytest.approx(0.05 - 1.96 * est.std_error, abs=1e-15)
    assert high == pytest.approx(0.05 + 1.96 * est.std_error, abs=1e-15)


def test_confidence_interval_is_clipped():
    near_zero = ProbabilityEstimate.from_counts(1, 1000, seed=0)
    assert near_zero.ci95[0] == 0.0
    near_one = ProbabilityEstimate.from_counts(999, 1000, seed=0)
    assert near_one.ci95[1] == 1.0


def test_from_counts_validation():
    with pytest.raises(ValueError):
        ProbabilityEstimate.from_counts(-1, 100, seed=0)
    with pytest.raises(ValueError):
        ProbabilityEstimate.from_counts(101, 100, seed=0)
    with pytest.raises(ValueError):
        ProbabilityEstimate.from_counts(0, 0, seed=0)


def test_estimate_validation():
    with pytest.raises(ValueError):
        estimate(UNIT, 0, seed=0)
    with pytest.raises(ValueError):
        estimate(UNIT, 100, seed=0, workers=0)
    with pytest.raises(ValueError):
        estimate(UNIT, 100, seed=-1)


def test_method_tags():
    assert estimate(UNIT, 10, seed=0).method is Method.MONTE_CARLO
    assert ProbabilityEstimate.from_value(0.5, Method.EXACT).method is Method.EXACT
    wrapped = ProbabilityEstimate.from_value(0.25, Method.QUADRATURE)
    assert wrapped.samples == 0
    assert wrapped.std_error == 0.0
    assert wrapped.ci95 == (0.25, 0.25)


def test_empirical_limit_angle_center_is_zero():
    # no chord from the base midpoint beats the cutoff
    assert empirical_limit_angle(UNIT, 0.0, 50_000, seed=1) == 0.0


def test_empirical_limit_angle_at_endpoint():
    samples = 1_000_000
    value = empirical_limit_angle(UNIT, 0.5, samples, seed=0)
    fraction = limit_angle(0.5) / math.pi
    sigma = math.pi * math.sqrt(fraction * (1.0 - fraction) / samples)
    assert abs(value - limit_angle(0.5)) < 4.0 * sigma


def test_empirical_limit_angle_at_quarter_point():
    value = empirical_limit_angle(UNIT, 0.25, 1_000_000, seed=0)
    assert abs(value - limit_angle(0.25)) < 0.002


def test_empirical_limit_angle_rejects_off_base_points():
    with pytest.raises(Exception):
        empirical_limit_angle(UNIT, 0.75, 100, seed=0)


def test_vectorized_lengths_match_side_hit():
    rng = _block_generator(seed=11, block=0)
    xs = (rng.random(500) - 0.5) * 1.0
    thetas = rng.random(500) * math.pi
    lengths = _chord_lengths(UNIT.triangle, xs, thetas)
    for x, theta, length in zip(xs, thetas, lengths):
        hit = side_hit(UNIT.triangle, float(x), float(theta))
        assert length == pytest.approx(hit.distance, rel=1e-10, abs=1e-12)


def test_vectorized_lengths_match_side_hit_generic_triangle():
    triangle = IsoscelesTriangle(2.5, 0.75)
    rng = _block_generator(seed=13, block=0)
    xs = (rng.random(300) - 0.5) * triangle.base
    thetas = rng.random(300) * math.pi
    lengths = _chord_lengths(triangle, xs, thetas)
    for x, theta, length in zip(xs, thetas, lengths):
        hit = side_hit(triangle, float(x), float(theta))
        assert length == pytest.approx(hit.distance, rel=1e-10, abs=1e-12)


def test_success_indicator_matches_direction_set_membership():
    # At a fixed base point the per-sample success flag is exactly interval
    # membership, except within 1e-9 of an interval boundary.
    x = 0.3
    s = direction_set(UNIT, x)
    rng = _block_generator(seed=21, block=0)
    thetas = rng.random(2000) * math.pi
    lengths = _chord_lengths(UNIT.triangle, np.full(2000, x), thetas)
    checked = 0
    for theta, length in zip(thetas, lengths):
        near_boundary = any(
            abs(theta - edge) < 1e-9 for pair in s.intervals for edge in pair
        )
        if near_boundary or theta == 0.0:
            continue
        assert (length > UNIT.threshold) == s.contains(float(theta))
        checked += 1
    assert checked > 1900


def test_confidence_interval_coverage():
    inside = 0
    for seed in range(200):
        low, high = estimate(UNIT, 100_000, seed=seed).ci95
        if low <= P_EXACT <= high:
            inside += 1
    assert inside >= 180  # 95% nominal, generous slack
