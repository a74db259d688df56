"""Tests for direction sets and the general-configuration probability."""

import math

import numpy as np
import pytest

from trichord import (
    AngularIntervalSet,
    ChordProblem,
    IsoscelesTriangle,
    OutOfBaseError,
    direction_set,
    is_unit_configuration,
    limit_angle,
    probability_general,
    side_hit,
)

# Frozen from 50-digit evaluations of the closed form.
P_EXACT = 0.016212872164880516
ALPHA_HALF = 0.17985349979247827

UNIT = ChordProblem(IsoscelesTriangle(1.0, 1.0), 1.0)


def test_interval_set_measure():
    assert AngularIntervalSet(()).measure == 0.0
    assert AngularIntervalSet(((0.0, math.pi),)).measure == math.pi
    two = AngularIntervalSet(((0.1, 0.2), (0.5, 0.9)))
    assert two.measure == pytest.approx(0.5, abs=1e-15)


def test_interval_set_contains():
    s = AngularIntervalSet(((0.1, 0.2), (0.5, 0.9)))
    assert s.contains(0.15)
    assert s.contains(0.7)
    assert not s.contains(0.3)
    assert not s.contains(0.1)  # boundaries excluded
    assert not s.contains(0.9)
    assert not s.contains(3.0)


def test_interval_set_validation():
    with pytest.raises(ValueError):
        AngularIntervalSet(((0.2, 0.1),))
    with pytest.raises(ValueError):
        AngularIntervalSet(((-0.1, 0.2),))
    with pytest.raises(ValueError):
        AngularIntervalSet(((0.0, math.pi + 0.1),))
    with pytest.raises(ValueError):
        AngularIntervalSet(((0.5, 0.9), (0.1, 0.2)))


def test_threshold_validation():
    with pytest.raises(ValueError):
        ChordProblem(IsoscelesTriangle(), -0.5)
    with pytest.raises(ValueError):
        ChordProblem(IsoscelesTriangle(), math.inf)


def test_is_unit_configuration():
    assert is_unit_configuration(UNIT)
    assert not is_unit_configuration(ChordProblem(IsoscelesTriangle(2.0, 1.0), 1.0))
    assert not is_unit_configuration(ChordProblem(IsoscelesTriangle(), 0.5))


def test_center_point_has_empty_set():
    # every chord from the base midpoint is at most 1 long
    assert direction_set(UNIT, 0.0).intervals == ()


def test_quarter_point_is_single_interval():
    s = direction_set(UNIT, 0.25)
    assert len(s.intervals) == 1
    assert s.measure == pytest.approx(limit_angle(0.25), abs=1e-9)


def test_endpoint_measure_matches_closed_form():
    for x in (0.5, -0.5):
        assert direction_set(UNIT, x).measure == pytest.approx(ALPHA_HALF, abs=1e-9)


def test_zero_threshold_gives_half_turn():
    problem = ChordProblem(IsoscelesTriangle(), 0.0)
    for x in (0.0, 0.3, -0.5, 0.5):
        s = direction_set(problem, x)
        assert s.intervals == ((0.0, math.pi),)
        assert s.measure == math.pi


def test_unreachable_threshold_gives_empty_set():
    problem = ChordProblem(IsoscelesTriangle(), 3.0)
    for x in (-0.5, -0.2, 0.0, 0.4, 0.5):
        assert direction_set(problem, x).measure == 0.0


def test_matches_limit_angle_on_grid():
    xs = [(i - 50) / 100.0 for i in range(101)]
    worst = max(abs(direction_set(UNIT, x).measure - limit_angle(x)) for x in xs)
    assert worst < 1e-9


def test_membership_agrees_with_chord_length():
    rng = np.random.default_rng(7)
    problem = ChordProblem(IsoscelesTriangle(), 0.9)
    checked = 0
    for _ in range(1000):
        x = float(rng.uniform(-0.5, 0.5))
        theta = float(rng.uniform(1e-6, math.pi - 1e-6))
        s = direction_set(problem, x)
        near_boundary = any(
            abs(theta - edge) < 1e-9 for pair in s.intervals for edge in pair
        )
        if near_boundary:
            continue
        hit = side_hit(problem.triangle, x, theta)
        assert s.contains(theta) == (hit.distance > problem.threshold)
        checked += 1
    assert checked > 950


def test_monotone_in_threshold():
    x = 0.31
    triangle = IsoscelesTriangle(1.0, 1.0)
    measures = [
        direction_set(ChordProblem(triangle, t), x).measure
        for t in (0.0, 0.3, 0.6, 0.9, 1.0, 1.05, 1.11, 1.2)
    ]
    for bigger, smaller in zip(measures, measures[1:]):
        assert smaller <= bigger + 1e-12


def test_nested_in_threshold():
    triangle = IsoscelesTriangle(1.0, 1.0)
    x = -0.2
    inner = direction_set(ChordProblem(triangle, 1.05), x)
    outer = direction_set(ChordProblem(triangle, 0.95), x)
    for start, end in inner.intervals:
        assert outer.contains(0.5 * (start + end))


def test_measure_is_continuous_in_x():
    problem = ChordProblem(IsoscelesTriangle(), 0.8)
    x = 0.2
    here = direction_set(problem, x).measure
    steps = [
        abs(direction_set(problem, x + h).measure - here) for h in (1e-3, 1e-5, 1e-7)
    ]
    assert steps[0] < 1e-2
    assert steps[1] < 1e-4
    assert steps[2] < 1e-6


def test_boundary_rays_hit_at_threshold_distance():
    rng = np.random.default_rng(3)
    checked = 0
    for _ in range(100):
        x = float(rng.uniform(-0.5, 0.5))
        for start, end in direction_set(UNIT, x).intervals:
            for edge in (start, end):
                if 1e-9 < edge < math.pi - 1e-9:
                    hit = side_hit(UNIT.triangle, x, edge)
                    assert hit.distance == pytest.approx(1.0, abs=1e-9)
                    checked += 1
    assert checked > 50


def test_direction_set_rejects_off_base_points():
    with pytest.raises(OutOfBaseError):
        direction_set(UNIT, 0.75)


def test_probability_general_unit_matches_exact():
    result = probability_general(UNIT, 1e-10)
    assert result.probability == pytest.approx(P_EXACT, abs=1e-8)
    assert result.converged
    assert result.probability == pytest.approx(
        result.integral / math.pi, rel=1e-15
    )


def test_probability_general_zero_threshold():
    result = probability_general(ChordProblem(IsoscelesTriangle(), 0.0), 1e-10)
    assert result.probability == pytest.approx(1.0, abs=1e-12)


def test_probability_general_unreachable_threshold():
    result = probability_general(ChordProblem(IsoscelesTriangle(), 3.0), 1e-10)
    assert result.probability == 0.0


def test_probability_general_monotone_in_threshold():
    triangle = IsoscelesTriangle(1.0, 1.0)
    probabilities = [
        probability_general(ChordProblem(triangle, t), 1e-8).probability
        for t in (0.2, 0.6, 1.0, 1.2)
    ]
    for bigger, smaller in zip(probabilities, probabilities[1:]):
        assert smaller <= bigger + 1e-8


def test_probability_general_scale_invariance():
    small = probability_general(ChordProblem(IsoscelesTriangle(1.0, 1.0), 1.0), 1e-8)
    big = probability_general(ChordProblem(IsoscelesTriangle(3.0, 3.0), 3.0), 1e-8)
    assert big.probability == pytest.approx(small.probability, abs=1e-7)
