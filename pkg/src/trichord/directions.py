"""Direction sets: ray angles whose chord beats a cutoff, for any configuration.

For a base point P and cutoff t, the admissible directions form a finite
union of open angular intervals.  Their endpoints are critical angles where
the chord length crosses t: directions toward intersections of the circle of
radius t about P with the sides, and directions toward vertices (where the
struck side changes).  Between consecutive critical angles the indicator is
constant, so classifying one interior direction classifies the whole cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .geometry import IsoscelesTriangle, Point, require_on_base, side_hit
from .quadrature import QuadratureResult, integrate_profile

# |discriminant| below this counts as tangency: one root instead of two.
TANGENCY_TOLERANCE = 1e-14

# Slack accepted at segment ends for the circle-side intersection parameter.
SEGMENT_SLACK = 1e-12

# Final intervals narrower than this are dropped as numerical slivers.
MIN_INTERVAL_WIDTH = 1e-12


@dataclass(frozen=True)
class AngularIntervalSet:
    """Sorted union of disjoint open angular intervals inside (0, pi)."""

    intervals: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        previous_end = 0.0
        for start, end in self.intervals:
            if not (0.0 <= start < end <= math.pi):
                raise ValueError(f"interval ({start}, {end}) not inside [0, pi]")
            if start < previous_end:
                raise ValueError("intervals must be sorted and disjoint")
            previous_end = end

    @property
    def measure(self) -> float:
        """Total length in radians."""
        return math.fsum(end - start for start, end in self.intervals)

    def contains(self, theta: float) -> bool:
        """True when theta lies strictly inside one of the intervals."""
        return any(start < theta < end for start, end in self.intervals)


@dataclass(frozen=True)
class ChordProblem:
    """A triangle together with a chord-length cutoff.

    ``threshold`` may be zero, meaning no cutoff: every direction qualifies.
    """

    triangle: IsoscelesTriangle = IsoscelesTriangle(1.0, 1.0)
    threshold: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.threshold) and self.threshold >= 0.0):
            raise ValueError(
                f"threshold must be a nonnegative finite length, got {self.threshold}"
            )


def is_unit_configuration(problem: ChordProblem) -> bool:
    """True for base = height = threshold = 1, where the closed form applies."""
    return (
        problem.triangle.base == 1.0
        and problem.triangle.height == 1.0
        and problem.threshold == 1.0
    )


def _circle_segment_angles(
    origin: Point, radius: float, e0: Point, e1: Point
) -> list[float]:
    """Angles from ``origin`` toward circle-segment intersection points.

    Solves |e0 + u*(e1 - e0) - origin|^2 = radius^2 for the segment parameter
    u, keeps roots with u in [0, 1] up to slack, and returns their viewing
    angles within (0, pi).
    """
    seg_x, seg_y = e1[0] - e0[0], e1[1] - e0[1]
    off_x, off_y = e0[0] - origin[0], e0[1] - origin[1]
    a = seg_x * seg_x + seg_y * seg_y
    b = 2.0 * (off_x * seg_x + off_y * seg_y)
    c = off_x * off_x + off_y * off_y - radius * radius
    disc = b * b - 4.0 * a * c
    if disc < -TANGENCY_TOLERANCE:
        return []
    if disc <= TANGENCY_TOLERANCE:
        roots = (-b / (2.0 * a),)
    else:
        sq = math.sqrt(disc)
        roots = ((-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a))
    angles = []
    for u in roots:
        if -SEGMENT_SLACK <= u <= 1.0 + SEGMENT_SLACK:
            rel_x = e0[0] + u * seg_x - origin[0]
            rel_y = e0[1] + u * seg_y - origin[1]
            angle = math.atan2(rel_y, rel_x)
            if 0.0 < angle < math.pi:
                angles.append(angle)
    return angles


def direction_set(problem: ChordProblem, x: float) -> AngularIntervalSet:
    """Directions from (x, 0) whose chord to the boundary exceeds the cutoff.

    Collects critical angles (circle-side intersections and vertex
    directions), classifies each cell between consecutive critical angles by
    the chord length at its midpoint, and merges adjacent qualifying cells.

    Raises:
        OutOfBaseError: x lies outside the base.
    """
    triangle = problem.triangle
    require_on_base(triangle, x)
    if problem.threshold == 0.0:
        return AngularIntervalSet(((0.0, math.pi),))

    origin = (x, 0.0)
    a, b, c = triangle.vertices()
    critical = {0.0, math.pi}
    for vertex in (a, b, c):
        if math.dist(vertex, origin) > 0.0:
            angle = math.atan2(vertex[1], vertex[0] - x)
            if 0.0 < angle < math.pi:
                critical.add(angle)
    for e0, e1 in ((a, b), (c, b)):
        critical.update(_circle_segment_angles(origin, problem.threshold, e0, e1))

    angles = sorted(critical)
    merged: list[list[float]] = []
    for low, high in zip(angles, angles[1:]):
        if high - low <= 1e-15:
            continue
        midpoint = 0.5 * (low + high)
        if side_hit(triangle, x, midpoint).distance > problem.threshold:
            if merged and merged[-1][1] == low:
                merged[-1][1] = high
            else:
                merged.append([low, high])
    kept = tuple(
        (start, end) for start, end in merged if end - start >= MIN_INTERVAL_WIDTH
    )
    return AngularIntervalSet(kept)


def probability_general(problem: ChordProblem, tolerance: float = 1e-10) -> QuadratureResult:
    """Exceedance probability for any configuration, by quadrature.

    Integrates the direction-set measure across the base and normalizes by
    pi * base (uniform base point, uniform angle).
    """
    half = problem.triangle.base / 2.0
    result = integrate_profile(
        lambda x: direction_set(problem, x).measure, -half, half, tolerance
    )
    return replace(
        result, probability=result.integral / (math.pi * problem.triangle.base)
    )
